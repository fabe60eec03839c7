#pragma once

#include "lo/behavior.hpp"
#include "lo/orthograph.hpp"
#include "lo/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace lo {

// A clique of some orthogonality graph, held as sorted graph vertex ids.
struct Clique {
    std::vector<std::uint32_t> vertices;

    bool operator==(const Clique&) const = default;
};

struct EnumerationStats {
    std::uint64_t emitted = 0;
    bool truncated = false; // limit reached before exhausting the graph
};

// Bron-Kerbosch with Tomita pivoting. Yields every maximal clique of size
// >= min_size exactly once, stopping after `limit` cliques if set. Branches
// that cannot reach min_size are pruned.
EnumerationStats enumerate_maximal_cliques(const OrthogonalityGraph& g,
                                           std::size_t min_size,
                                           std::optional<std::uint64_t> limit,
                                           const std::function<void(const Clique&)>& sink);

// Convenience: collect into a vector.
std::vector<Clique> all_maximal_cliques(const OrthogonalityGraph& g,
                                        std::size_t min_size = 1);

// Event labels of a clique's vertices, sorted.
std::vector<std::uint32_t> clique_event_indices(const OrthogonalityGraph& g, const Clique& c);

// Throws NotAClique unless the vertices are pairwise adjacent in g.
void validate_clique(const OrthogonalityGraph& g, std::span<const std::uint32_t> vertices);

// Greedy completion, adding the lowest-index admissible vertex first;
// deterministic, returns the seed unchanged when already maximal.
Clique complete_to_maximal(const OrthogonalityGraph& g, const Clique& seed);

// Completion of a clique given by event indices (e.g. read off a subgraph);
// vertices are re-identified in g by label. Throws InvalidVertex when an
// event is not present in g.
Clique complete_to_maximal_events(const OrthogonalityGraph& g,
                                  std::span<const std::uint32_t> event_indices);

// Exact maximum clique size (branch and bound; exhaustive).
std::size_t max_clique_size(const OrthogonalityGraph& g);

struct ViolationWitness {
    Clique clique; // maximal in the full graph
    Rational value;
};

// Searches for a maximal clique whose total probability under b exceeds 1.
// Only the support subgraph is searched (zero-probability events never
// change a clique's value); a found clique is completed to a maximal clique
// of the full graph. Absent means exhaustive search proved no violation.
std::optional<ViolationWitness> find_violation_witness(const Behavior& b,
                                                       const OrthogonalityGraph& full_graph);

} // namespace lo
