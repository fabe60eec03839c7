#pragma once

#include "lo/behavior.hpp"
#include "lo/bitset.hpp"
#include "lo/scenario.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace lo {

// True iff some party uses the same setting in both events but obtains a
// different outcome. Symmetric, irreflexive.
bool are_orthogonal(const Scenario& sc, const Event& e, const Event& f);

// Orthogonality graph over a set of events of one scenario. Vertices carry
// the event index in the scenario as their label, so cliques read off an
// induced subgraph are valid in the parent scenario. Immutable after build.
class OrthogonalityGraph {
public:
    OrthogonalityGraph(Scenario scenario,
                       std::vector<std::uint32_t> labels,
                       std::vector<Bitset> adjacency);

    const Scenario& scenario() const { return scenario_; }
    std::size_t vertex_count() const { return labels_.size(); }
    std::uint64_t edge_count() const;

    std::uint32_t label(std::size_t v) const { return labels_[v]; }
    Event label_event(std::size_t v) const { return event_from_index(scenario_, labels_[v]); }
    const std::vector<std::uint32_t>& labels() const { return labels_; }

    const Bitset& neighbors(std::size_t v) const { return adj_[v]; }
    bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].test(v); }
    std::size_t degree(std::size_t v) const { return adj_[v].count(); }

    // vertex holding a given event index, or -1
    std::int64_t vertex_of(std::uint32_t event_index) const;

private:
    Scenario scenario_;
    std::vector<std::uint32_t> labels_;
    std::vector<Bitset> adj_;
    std::vector<std::int32_t> vertex_of_; // event index -> vertex, -1 if absent
};

// Full orthogonality graph on all (m*d)^n events; vertex k is event k.
OrthogonalityGraph build_graph(const Scenario& sc);

// Subgraph on `keep` (graph vertex ids), preserving event labels.
OrthogonalityGraph induced_subgraph(const OrthogonalityGraph& g,
                                    std::span<const std::uint32_t> keep);

// Vertices whose labelled event has positive probability under b.
std::vector<std::uint32_t> support_vertices(const OrthogonalityGraph& g, const Behavior& b);

} // namespace lo
