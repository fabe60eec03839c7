#pragma once

#include "lo/cliques.hpp"
#include "lo/inequality.hpp"
#include "lo/ns_reduce.hpp"
#include "lo/orthograph.hpp"
#include "lo/rational.hpp"
#include "lo/symmetry_group.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <vector>

namespace lo {

struct EquivalenceClass {
    LOInequality representative;          // lexicographically minimal member set
    std::vector<Rational> canonical_form; // lex-min reduced vector over the group
    std::uint64_t member_count = 0;       // inputs that fell into this class
    Rational ns_maximum;
    bool trivial = false;                 // ns_maximum == 1
};

// Two-pass streaming classifier. Pass 1 (add) folds each inequality onto
// the lexicographically minimal relabeling of its event set, so memory is
// bounded by the number of set orbits. Pass 2 (finalize) reduces each orbit
// representative modulo the no-signaling span, takes the lex-min reduced
// vector over the group as the class key (orbits that differ only by
// no-signaling combinations merge here), and solves one exact LP per class
// for the triviality flag.
class Classifier {
public:
    explicit Classifier(const Scenario& sc, unsigned threads = 0);
    ~Classifier();

    void add(std::span<const std::uint32_t> event_indices);
    void add(const LOInequality& ineq);
    void add(const OrthogonalityGraph& g, const Clique& c);

    std::vector<EquivalenceClass> finalize(); // classes sorted by canonical form

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

std::vector<EquivalenceClass> classify(const std::vector<LOInequality>& ineqs,
                                       const Scenario& sc, unsigned threads = 0);

// Lex-min reduced vector of one inequality over the full relabeling group;
// equal canonical forms mean same equivalence class.
std::vector<Rational> canonical_form(const LOInequality& ineq);

} // namespace lo
