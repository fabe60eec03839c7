#include "lo/cliques.hpp"

#include <algorithm>
#include <limits>

namespace lo {

namespace {

class BronKerbosch {
public:
    BronKerbosch(const OrthogonalityGraph& g, std::size_t min_size, std::uint64_t limit,
                 const std::function<void(const Clique&)>& sink)
        : g_(g), min_size_(min_size), limit_(limit), sink_(sink) {}

    EnumerationStats run()
    {
        const std::size_t n = g_.vertex_count();
        expand(Bitset::with_all_set(n), Bitset(n));
        return stats_;
    }

private:
    void expand(Bitset p, Bitset x)
    {
        if (stopped_)
            return;
        if (p.none()) {
            if (x.none() && current_.size() >= min_size_)
                emit();
            return;
        }
        if (current_.size() + p.count() < min_size_)
            return;

        // Tomita pivot: maximize |P cap N(u)| over u in P union X
        std::size_t pivot = Bitset::npos;
        std::size_t pivot_score = 0;
        const auto consider = [&](std::size_t u) {
            const std::size_t score = p.intersection_count(g_.neighbors(u));
            if (pivot == Bitset::npos || score > pivot_score) {
                pivot = u;
                pivot_score = score;
            }
        };
        p.for_each(consider);
        x.for_each(consider);

        Bitset candidates = p;
        candidates.subtract(g_.neighbors(pivot));
        candidates.for_each([&](std::size_t v) {
            if (stopped_)
                return;
            current_.push_back(std::uint32_t(v));
            expand(p & g_.neighbors(v), x & g_.neighbors(v));
            current_.pop_back();
            p.reset(v);
            x.set(v);
        });
    }

    void emit()
    {
        Clique c{current_};
        std::sort(c.vertices.begin(), c.vertices.end());
        sink_(c);
        if (++stats_.emitted >= limit_) {
            stats_.truncated = true;
            stopped_ = true;
        }
    }

    const OrthogonalityGraph& g_;
    std::size_t min_size_;
    std::uint64_t limit_;
    const std::function<void(const Clique&)>& sink_;
    std::vector<std::uint32_t> current_;
    EnumerationStats stats_;
    bool stopped_ = false;
};

// joint-outcome id per vertex; events sharing all outcomes are never
// adjacent, so these classes form a proper coloring usable as a bound
std::vector<std::uint32_t> outcome_classes(const OrthogonalityGraph& g)
{
    const Scenario& sc = g.scenario();
    std::vector<std::uint32_t> cls(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const Event e = g.label_event(v);
        std::uint32_t id = 0;
        for (int i = 0; i < sc.parties(); ++i)
            id = id * std::uint32_t(sc.outcomes()) + e.outcomes[i];
        cls[v] = id;
    }
    return cls;
}

class MaxCliqueSize {
public:
    explicit MaxCliqueSize(const OrthogonalityGraph& g)
        : g_(g), classes_(outcome_classes(g)), seen_(g.scenario().joint_outcome_count(), 0) {}

    std::size_t run()
    {
        search(0, Bitset::with_all_set(g_.vertex_count()));
        return best_;
    }

private:
    std::size_t distinct_classes(const Bitset& p)
    {
        ++generation_;
        std::size_t count = 0;
        p.for_each([&](std::size_t v) {
            if (seen_[classes_[v]] != generation_) {
                seen_[classes_[v]] = generation_;
                ++count;
            }
        });
        return count;
    }

    void search(std::size_t depth, Bitset p)
    {
        best_ = std::max(best_, depth);
        while (p.any()) {
            if (depth + distinct_classes(p) <= best_)
                return;
            const std::size_t v = p.find_first();
            p.reset(v);
            search(depth + 1, p & g_.neighbors(v));
        }
    }

    const OrthogonalityGraph& g_;
    std::vector<std::uint32_t> classes_;
    std::vector<std::uint64_t> seen_;
    std::uint64_t generation_ = 0;
    std::size_t best_ = 0;
};

// Finds any clique with total weight > 1, or proves there is none. The
// per-branch bound sums the heaviest vertex of each outcome class.
class WeightedWitnessSearch {
public:
    WeightedWitnessSearch(const OrthogonalityGraph& g, std::vector<Rational> weights)
        : g_(g), weights_(std::move(weights)), classes_(outcome_classes(g)),
          class_max_(g.scenario().joint_outcome_count()),
          touched_(g.scenario().joint_outcome_count(), false) {}

    std::optional<std::vector<std::uint32_t>> run()
    {
        search(Rational(0), Bitset::with_all_set(g_.vertex_count()));
        return found_;
    }

private:
    Rational class_bound(const Bitset& p)
    {
        scratch_.clear();
        p.for_each([&](std::size_t v) {
            const auto c = classes_[v];
            if (!touched_[c]) {
                touched_[c] = true;
                scratch_.push_back(c);
                class_max_[c] = weights_[v];
            } else if (weights_[v] > class_max_[c]) {
                class_max_[c] = weights_[v];
            }
        });
        Rational bound(0);
        for (const auto c : scratch_) {
            bound += class_max_[c];
            touched_[c] = false;
        }
        return bound;
    }

    void search(const Rational& value, Bitset p)
    {
        if (found_)
            return;
        if (value > 1) {
            found_ = stack_;
            return;
        }
        while (p.any()) {
            if (value + class_bound(p) <= 1)
                return;
            const std::size_t v = p.find_first();
            p.reset(v);
            stack_.push_back(std::uint32_t(v));
            search(value + weights_[v], p & g_.neighbors(v));
            stack_.pop_back();
            if (found_)
                return;
        }
    }

    const OrthogonalityGraph& g_;
    std::vector<Rational> weights_;
    std::vector<std::uint32_t> classes_;
    std::vector<Rational> class_max_;
    std::vector<char> touched_;
    std::vector<std::uint32_t> scratch_;
    std::vector<std::uint32_t> stack_;
    std::optional<std::vector<std::uint32_t>> found_;
};

// lowest-index-first greedy extension within g
void extend_greedily(const OrthogonalityGraph& g, std::vector<std::uint32_t>& clique)
{
    Bitset admissible = Bitset::with_all_set(g.vertex_count());
    for (const auto v : clique)
        admissible &= g.neighbors(v);
    std::size_t v = admissible.find_first();
    while (v != Bitset::npos) {
        clique.push_back(std::uint32_t(v));
        admissible &= g.neighbors(v);
        v = admissible.find_next(v + 1);
    }
    std::sort(clique.begin(), clique.end());
}

} // namespace

EnumerationStats enumerate_maximal_cliques(const OrthogonalityGraph& g,
                                           std::size_t min_size,
                                           std::optional<std::uint64_t> limit,
                                           const std::function<void(const Clique&)>& sink)
{
    if (g.vertex_count() == 0)
        return {};
    const std::uint64_t cap = limit.value_or(std::numeric_limits<std::uint64_t>::max());
    if (cap == 0)
        return {.emitted = 0, .truncated = true};
    return BronKerbosch(g, min_size, cap, sink).run();
}

std::vector<Clique> all_maximal_cliques(const OrthogonalityGraph& g, std::size_t min_size)
{
    std::vector<Clique> out;
    enumerate_maximal_cliques(g, min_size, std::nullopt,
                              [&](const Clique& c) { out.push_back(c); });
    return out;
}

std::vector<std::uint32_t> clique_event_indices(const OrthogonalityGraph& g, const Clique& c)
{
    std::vector<std::uint32_t> events;
    events.reserve(c.vertices.size());
    for (const auto v : c.vertices)
        events.push_back(g.label(v));
    std::sort(events.begin(), events.end());
    return events;
}

void validate_clique(const OrthogonalityGraph& g, std::span<const std::uint32_t> vertices)
{
    for (const auto v : vertices)
        if (v >= g.vertex_count())
            throw InvalidVertex("clique vertex out of range: " + std::to_string(v));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (!g.adjacent(vertices[i], vertices[j]))
                throw NotAClique("vertices " + std::to_string(vertices[i]) + " and " +
                                 std::to_string(vertices[j]) + " are not adjacent");
}

Clique complete_to_maximal(const OrthogonalityGraph& g, const Clique& seed)
{
    validate_clique(g, seed.vertices);
    Clique result = seed;
    extend_greedily(g, result.vertices);
    return result;
}

Clique complete_to_maximal_events(const OrthogonalityGraph& g,
                                  std::span<const std::uint32_t> event_indices)
{
    Clique seed;
    for (const auto e : event_indices) {
        const auto v = g.vertex_of(e);
        if (v < 0)
            throw InvalidVertex("event " + std::to_string(e) + " has no vertex in the graph");
        seed.vertices.push_back(std::uint32_t(v));
    }
    std::sort(seed.vertices.begin(), seed.vertices.end());
    return complete_to_maximal(g, seed);
}

std::size_t max_clique_size(const OrthogonalityGraph& g)
{
    if (g.vertex_count() == 0)
        return 0;
    return MaxCliqueSize(g).run();
}

std::optional<ViolationWitness> find_violation_witness(const Behavior& b,
                                                       const OrthogonalityGraph& full_graph)
{
    const auto support = support_vertices(full_graph, b);
    const OrthogonalityGraph sub = induced_subgraph(full_graph, support);

    std::vector<Rational> weights(sub.vertex_count());
    for (std::size_t v = 0; v < sub.vertex_count(); ++v)
        weights[v] = b.at(sub.label(v));

    auto found = WeightedWitnessSearch(sub, std::move(weights)).run();
    if (!found)
        return std::nullopt;

    // make it maximal among possible events first, then in the full graph;
    // the second step only adds zero-probability events
    extend_greedily(sub, *found);
    std::vector<std::uint32_t> events;
    events.reserve(found->size());
    for (const auto v : *found)
        events.push_back(sub.label(v));
    Clique maximal = complete_to_maximal_events(full_graph, events);

    Rational value(0);
    for (const auto v : maximal.vertices)
        value += b.at(full_graph.label(v));
    return ViolationWitness{std::move(maximal), std::move(value)};
}

} // namespace lo
