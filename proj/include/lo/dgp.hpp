#pragma once

#include "lo/inequality.hpp"
#include "lo/rational.hpp"
#include "lo/scenario.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lo {

// A distributed guessing problem: the referee draws an outcome vector
// uniformly from S, encodes it with f into one setting per player, and the
// players win iff every one of them recovers their own component.
class DGPInstance {
public:
    DGPInstance(Scenario scenario,
                std::vector<std::vector<std::uint8_t>> answer_set,
                std::vector<std::vector<std::uint8_t>> encodings);

    const Scenario& scenario() const { return scenario_; }
    // S: distinct outcome vectors, sorted
    const std::vector<std::vector<std::uint8_t>>& answer_set() const { return answers_; }
    // f(a) per element of S, componentwise settings
    const std::vector<std::vector<std::uint8_t>>& encodings() const { return encodings_; }
    std::size_t size() const { return answers_.size(); }

private:
    Scenario scenario_;
    std::vector<std::vector<std::uint8_t>> answers_;
    std::vector<std::vector<std::uint8_t>> encodings_;
};

// True iff every distinct pair in S disagrees at some player whose encoded
// setting is the same in both cases, i.e. the derived events are pairwise
// orthogonal. Such instances cannot be beaten by classical side information.
bool is_maximally_difficult(const DGPInstance& inst);

// Exact optimum of the winning probability over deterministic local
// strategies (one map settings -> outcomes per player), uniform prior on S.
// Shared randomness cannot help by convexity. Throws CapacityExceeded when
// the strategy space (d^m)^n exceeds 10^8.
Rational classical_value(const DGPInstance& inst);

// The LO inequality with events (a | f(a)), a in S. Requires a maximally
// difficult instance (throws NotAnLOInequality otherwise).
LOInequality dgp_to_inequality(const DGPInstance& inst);

// Inverse direction: S = outcome parts, f = setting parts. Well defined
// because pairwise orthogonal events always have distinct outcome vectors.
DGPInstance dgp_from_inequality(const LOInequality& ineq);

// JSON form {"n":..,"m":..,"d":..,"S":["010",...],"f":{"010":"101",...}}.
DGPInstance dgp_from_json_stream(std::istream& in);
DGPInstance load_dgp(const std::string& path);

} // namespace lo
