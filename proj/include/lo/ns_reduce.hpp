#pragma once

#include "lo/rational.hpp"
#include "lo/scenario.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace lo {

// Reduces inequality coefficient vectors modulo the span of the
// no-signaling and normalization equalities, over homogenized coordinates
// (one per event plus a trailing constant coordinate). Two functionals
// agree on the no-signaling polytope's affine hull iff they reduce to the
// same vector, which is supported on the free columns of the RREF basis.
class NsReducer {
public:
    explicit NsReducer(const Scenario& sc);

    const Scenario& scenario() const { return scenario_; }
    std::size_t rank() const { return rows_.size(); }
    // columns not eliminated by the basis, ascending; the constant
    // coordinate (index event_count) is included when free
    const std::vector<std::uint32_t>& free_columns() const { return free_cols_; }

    struct Scratch {
        std::vector<Rational> dense;
        std::vector<std::uint32_t> touched;
    };

    // Reduced form of sum_{e in events} P(e) <= 1, returned as the values
    // on the free columns in order. All-zero means the functional is
    // identically satisfied with equality on the affine hull.
    std::vector<Rational> reduce_events(std::span<const std::uint32_t> events,
                                        Scratch& scratch) const;

    // Lexicographic running minimum: when the reduced form of `events` is
    // smaller than `best` (or best is empty), overwrites best and returns
    // true. Evaluates coordinates lazily, so most candidates are rejected
    // after the first one. Event order is irrelevant.
    bool min_reduced_into(std::span<const std::uint32_t> events,
                          std::vector<Rational>& best) const;

private:
    struct Row {
        std::uint32_t pivot;
        std::vector<std::pair<std::uint32_t, Rational>> tail; // free columns only
        std::vector<Rational> dense_tail;                     // indexed by free position
    };

    Scenario scenario_;
    std::size_t columns_; // event_count + 1
    std::vector<Row> rows_;
    std::vector<std::int32_t> row_of_pivot_; // column -> row index or -1
    std::vector<std::uint32_t> free_cols_;
    std::vector<std::int32_t> free_pos_;     // column -> position among free, or -1
    std::vector<Rational> constant_term_;    // contribution of the bound coefficient
};

} // namespace lo
