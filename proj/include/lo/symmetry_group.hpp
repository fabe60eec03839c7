#pragma once

#include "lo/inequality.hpp"
#include "lo/scenario.hpp"

#include <cstdint>
#include <vector>

namespace lo {

// The full relabeling group of a scenario: party permutations combined with
// per-party setting permutations and per-party, per-setting outcome
// permutations. Order n! * (m! * (d!)^m)^n. Elements are indexed densely
// and applied to event indices through a factored representation, so the
// whole group is never materialized.
class SymmetryGroup {
public:
    explicit SymmetryGroup(const Scenario& sc);

    const Scenario& scenario() const { return scenario_; }
    std::size_t size() const { return size_; }

    // Elements [0, local_subgroup_size()) keep the party order fixed and
    // exhaust all per-party relabelings; element 0 is the identity.
    std::size_t local_subgroup_size() const { return locals_per_party_pow_; }

    // image of an event index under group element `op`
    std::uint32_t apply(std::size_t op, std::uint32_t event) const
    {
        if (op < local_tables_size_)
            return local_tables_[op * event_count_ + event];
        return apply_slow(op, event);
    }

    // the event that `op` maps to event 0
    std::uint32_t preimage_of_zero(std::size_t op) const;

    // materialized form, for composition/inversion and external use
    SymmetryOp element(std::size_t op) const;

private:
    void decompose(std::size_t op, std::size_t& party_idx,
                   std::vector<std::uint32_t>& locals) const;
    std::uint32_t apply_slow(std::size_t op, std::uint32_t event) const;

    Scenario scenario_;
    std::size_t size_ = 0;
    std::uint32_t base_ = 0;                       // m*d
    std::vector<std::uint64_t> place_;             // base^(n-1-i)
    std::vector<std::vector<int>> party_perms_;    // all n! permutations, sorted
    // local relabelings: code s*d+a -> new code, one table per element of
    // the per-party factor m! * (d!)^m
    std::vector<std::vector<std::uint8_t>> locals_;
    std::vector<std::uint8_t> local_preimage0_;    // code mapped to 0 by each local
    std::vector<std::uint8_t> digits_;             // event -> per-party codes
    std::uint64_t locals_per_party_pow_;           // L^n
    // event permutation tables for the locals-only subgroup, the hot path
    // of set canonicalization; empty when over the memory budget
    std::vector<std::uint16_t> local_tables_;
    std::size_t local_tables_size_ = 0; // ops covered by the tables
    std::size_t event_count_ = 0;
};

} // namespace lo
