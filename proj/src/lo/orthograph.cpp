#include "lo/orthograph.hpp"

#include <algorithm>
#include <utility>

namespace lo {

namespace {

constexpr std::size_t kMaxGraphVertices = 16384; // 32 MB adjacency

// per-party codes s*d + a for fast pairwise tests
std::vector<std::uint8_t> event_codes(const Scenario& sc, std::uint64_t index)
{
    const int n = sc.parties();
    const std::uint64_t base = std::uint64_t(sc.settings()) * sc.outcomes();
    std::vector<std::uint8_t> codes(n);
    for (int i = n - 1; i >= 0; --i) {
        codes[i] = std::uint8_t(index % base);
        index /= base;
    }
    return codes;
}

bool codes_orthogonal(const std::uint8_t* e, const std::uint8_t* f, int n, int d)
{
    for (int i = 0; i < n; ++i)
        if (e[i] != f[i] && e[i] / d == f[i] / d)
            return true;
    return false;
}

} // namespace

bool are_orthogonal(const Scenario& sc, const Event& e, const Event& f)
{
    validate_event(sc, e);
    validate_event(sc, f);
    for (int i = 0; i < sc.parties(); ++i)
        if (e.settings[i] == f.settings[i] && e.outcomes[i] != f.outcomes[i])
            return true;
    return false;
}

OrthogonalityGraph::OrthogonalityGraph(Scenario scenario,
                                       std::vector<std::uint32_t> labels,
                                       std::vector<Bitset> adjacency)
    : scenario_(std::move(scenario)), labels_(std::move(labels)), adj_(std::move(adjacency))
{
    if (scenario_.event_count() <= (std::uint64_t{1} << 22)) {
        vertex_of_.assign(scenario_.event_count(), -1);
        for (std::size_t v = 0; v < labels_.size(); ++v)
            vertex_of_[labels_[v]] = std::int32_t(v);
    }
}

std::uint64_t OrthogonalityGraph::edge_count() const
{
    std::uint64_t total = 0;
    for (const auto& row : adj_)
        total += row.count();
    return total / 2;
}

std::int64_t OrthogonalityGraph::vertex_of(std::uint32_t event_index) const
{
    if (!vertex_of_.empty())
        return event_index < vertex_of_.size() ? vertex_of_[event_index] : -1;
    const auto it = std::find(labels_.begin(), labels_.end(), event_index);
    return it == labels_.end() ? -1 : it - labels_.begin();
}

OrthogonalityGraph build_graph(const Scenario& sc)
{
    const std::uint64_t count = sc.event_count();
    if (count > kMaxGraphVertices)
        throw CapacityExceeded("orthogonality graph too large: " + std::to_string(count) +
                               " vertices");
    const auto n_vertices = std::size_t(count);
    const int n = sc.parties();
    const int d = sc.outcomes();

    std::vector<std::uint8_t> codes(n_vertices * std::size_t(n));
    for (std::size_t v = 0; v < n_vertices; ++v) {
        const auto c = event_codes(sc, v);
        std::copy(c.begin(), c.end(), codes.begin() + std::size_t(n) * v);
    }

    std::vector<Bitset> adj(n_vertices, Bitset(n_vertices));
    for (std::size_t u = 0; u < n_vertices; ++u)
        for (std::size_t v = u + 1; v < n_vertices; ++v)
            if (codes_orthogonal(&codes[u * n], &codes[v * n], n, d)) {
                adj[u].set(v);
                adj[v].set(u);
            }

    std::vector<std::uint32_t> labels(n_vertices);
    for (std::size_t v = 0; v < n_vertices; ++v)
        labels[v] = std::uint32_t(v);
    return OrthogonalityGraph(sc, std::move(labels), std::move(adj));
}

OrthogonalityGraph induced_subgraph(const OrthogonalityGraph& g,
                                    std::span<const std::uint32_t> keep)
{
    std::vector<std::uint32_t> vertices(keep.begin(), keep.end());
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (auto v : vertices)
        if (v >= g.vertex_count())
            throw InvalidVertex("subgraph vertex out of range: " + std::to_string(v));

    const std::size_t k = vertices.size();
    std::vector<std::uint32_t> labels(k);
    for (std::size_t i = 0; i < k; ++i)
        labels[i] = g.label(vertices[i]);

    std::vector<Bitset> adj(k, Bitset(k));
    for (std::size_t i = 0; i < k; ++i) {
        const Bitset& row = g.neighbors(vertices[i]);
        for (std::size_t j = i + 1; j < k; ++j)
            if (row.test(vertices[j])) {
                adj[i].set(j);
                adj[j].set(i);
            }
    }
    return OrthogonalityGraph(g.scenario(), std::move(labels), std::move(adj));
}

std::vector<std::uint32_t> support_vertices(const OrthogonalityGraph& g, const Behavior& b)
{
    if (b.scenario() != g.scenario())
        throw ScenarioMismatch("behavior and graph scenarios differ");
    std::vector<std::uint32_t> support;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (b.at(g.label(v)) > 0)
            support.push_back(std::uint32_t(v));
    return support;
}

} // namespace lo
