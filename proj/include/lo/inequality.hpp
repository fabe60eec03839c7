#pragma once

#include "lo/behavior.hpp"
#include "lo/rational.hpp"
#include "lo/scenario.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace lo {

// An LO inequality: a set of pairwise orthogonal events with unit
// coefficients and bound 1. Events are kept sorted by canonical index.
class LOInequality {
public:
    LOInequality(Scenario scenario, std::vector<Event> events);

    const Scenario& scenario() const { return scenario_; }
    const std::vector<Event>& events() const { return events_; }
    const std::vector<std::uint32_t>& event_indices() const { return indices_; }
    std::size_t size() const { return events_.size(); }
    static Rational bound() { return Rational(1); }

    bool operator==(const LOInequality&) const = default;

private:
    Scenario scenario_;
    std::vector<Event> events_;
    std::vector<std::uint32_t> indices_;
};

// Sum of the behavior's probabilities over the inequality's events;
// a result > 1 is an LO violation.
Rational evaluate(const LOInequality& ineq, const Behavior& b);

// Guess-your-neighbor's-input inequality on (n,2,2), n odd: events
// (a | shift(a)) over all parity-0 outcome strings a, where party i's
// setting is a_{i-1} (cyclically). 2^(n-1) terms.
LOInequality gyni(int parties);

// A relabeling: permutes parties, each party's settings, and each party's
// outcomes per original setting. These are automorphisms of the
// orthogonality graph, so they map LO inequalities to LO inequalities.
struct SymmetryOp {
    std::vector<int> party_perm;                         // i -> new party slot
    std::vector<std::vector<int>> setting_perms;         // [party][setting]
    std::vector<std::vector<std::vector<int>>> outcome_perms; // [party][setting][outcome]
};

SymmetryOp identity_symmetry(const Scenario& sc);
// Applies `second` after `first` (both acting on the same scenario).
SymmetryOp compose(const Scenario& sc, const SymmetryOp& first, const SymmetryOp& second);
SymmetryOp inverse(const Scenario& sc, const SymmetryOp& op);

void validate_symmetry(const Scenario& sc, const SymmetryOp& op); // InvalidSymmetry

Event apply_symmetry(const SymmetryOp& op, const Scenario& sc, const Event& e);
LOInequality apply_symmetry(const SymmetryOp& op, const LOInequality& ineq);
Behavior apply_symmetry(const SymmetryOp& op, const Behavior& b);

// Text format: header "# scenario n,m,d", then one event per line.
LOInequality inequality_from_stream(std::istream& in);
LOInequality load_inequality(const std::string& path);
void inequality_to_stream(const LOInequality& ineq, std::ostream& out);
void save_inequality(const LOInequality& ineq, const std::string& path);

} // namespace lo
