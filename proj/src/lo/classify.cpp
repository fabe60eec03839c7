#include "lo/classify.hpp"

#include "lo/bitset.hpp"
#include "lo/nspolytope.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <set>
#include <thread>
#include <utility>

namespace lo {

namespace {

unsigned resolve_threads(unsigned requested)
{
    if (requested > 0)
        return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

template <typename Fn> // fn(worker, index)
void parallel_for(std::size_t count, unsigned workers, Fn&& fn)
{
    if (count == 0)
        return;
    workers = std::min<std::size_t>(std::max(1u, workers), count);
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(0u, i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                fn(w, i);
        });
    for (auto& t : pool)
        t.join();
}

// Lexicographically minimal image of the event set over a contiguous range
// of group elements containing the identity. Every relabeling subgroup here
// is transitive on events, so the minimum contains event 0 and only
// elements mapping some member to 0 can compete.
std::vector<std::uint32_t> canonical_set(const SymmetryGroup& group,
                                         std::span<const std::uint32_t> events,
                                         Bitset& membership,
                                         std::vector<std::uint32_t>& image,
                                         std::size_t op_count)
{
    for (const auto e : events)
        membership.set(e);
    std::vector<std::uint32_t> best;
    for (std::size_t op = 0; op < op_count; ++op) {
        if (!membership.test(group.preimage_of_zero(op)))
            continue;
        image.clear();
        for (const auto e : events) {
            const std::uint32_t mapped = group.apply(op, e);
            image.insert(std::upper_bound(image.begin(), image.end(), mapped), mapped);
        }
        if (best.empty() || image < best)
            best = image;
    }
    for (const auto e : events)
        membership.reset(e);
    return best;
}

// Lex-min reduced vector over the group, evaluated lazily per element.
std::vector<Rational> canonical_reduced(const SymmetryGroup& group,
                                        const NsReducer& reducer,
                                        std::span<const std::uint32_t> events)
{
    std::vector<Rational> best;
    reducer.min_reduced_into(events, best);
    // a zero form is a fixed point: relabelings keep the functional inside
    // the equality span, so the whole orbit reduces to zero
    if (std::all_of(best.begin(), best.end(), [](const Rational& v) { return v == 0; }))
        return best;
    std::vector<std::uint32_t> image(events.size());
    for (std::size_t op = 1; op < group.size(); ++op) {
        for (std::size_t k = 0; k < events.size(); ++k)
            image[k] = group.apply(op, events[k]);
        reducer.min_reduced_into(image, best);
    }
    return best;
}

std::vector<Event> events_of_indices(const Scenario& sc,
                                     std::span<const std::uint32_t> indices)
{
    std::vector<Event> events;
    events.reserve(indices.size());
    for (const auto idx : indices)
        events.push_back(event_from_index(sc, idx));
    return events;
}

} // namespace

struct Classifier::Impl {
    static constexpr std::size_t kBatch = 4096;

    Scenario scenario;
    unsigned threads;
    SymmetryGroup group;
    std::vector<std::vector<std::uint32_t>> pending;
    // pass 1 folds inputs under the cheap locals-only subgroup; the full
    // group pass in finalize() only sees one representative per local form
    std::map<std::vector<std::uint32_t>, std::uint64_t> local_forms;

    Impl(const Scenario& sc, unsigned requested)
        : scenario(sc), threads(resolve_threads(requested)), group(sc) {}

    void flush()
    {
        if (pending.empty())
            return;
        std::vector<std::vector<std::uint32_t>> canon(pending.size());
        std::vector<Bitset> membership(threads, Bitset(scenario.event_count()));
        std::vector<std::vector<std::uint32_t>> images(threads);
        parallel_for(pending.size(), threads, [&](unsigned w, std::size_t i) {
            canon[i] = canonical_set(group, pending[i], membership[w], images[w],
                                     group.local_subgroup_size());
        });
        for (auto& key : canon)
            ++local_forms[std::move(key)];
        pending.clear();
    }

    std::map<std::vector<std::uint32_t>, std::uint64_t> set_orbits()
    {
        flush();
        std::vector<std::pair<std::vector<std::uint32_t>, std::uint64_t>> forms(
            local_forms.begin(), local_forms.end());
        std::vector<std::vector<std::uint32_t>> canon(forms.size());
        std::vector<Bitset> membership(threads, Bitset(scenario.event_count()));
        std::vector<std::vector<std::uint32_t>> images(threads);
        parallel_for(forms.size(), threads, [&](unsigned w, std::size_t i) {
            canon[i] = canonical_set(group, forms[i].first, membership[w], images[w],
                                     group.size());
        });
        std::map<std::vector<std::uint32_t>, std::uint64_t> orbits;
        for (std::size_t i = 0; i < forms.size(); ++i)
            orbits[std::move(canon[i])] += forms[i].second;
        return orbits;
    }
};

Classifier::Classifier(const Scenario& sc, unsigned threads)
    : impl_(std::make_unique<Impl>(sc, threads)) {}

Classifier::~Classifier() = default;

void Classifier::add(std::span<const std::uint32_t> event_indices)
{
    if (event_indices.empty())
        throw NotAnLOInequality("inequality needs at least one event");
    for (const auto idx : event_indices)
        if (idx >= impl_->scenario.event_count())
            throw InvalidEvent("event index out of range");
    impl_->pending.emplace_back(event_indices.begin(), event_indices.end());
    if (impl_->pending.size() >= Impl::kBatch)
        impl_->flush();
}

void Classifier::add(const LOInequality& ineq)
{
    if (ineq.scenario() != impl_->scenario)
        throw ScenarioMismatch("inequality from a different scenario");
    add(std::span<const std::uint32_t>(ineq.event_indices()));
}

void Classifier::add(const OrthogonalityGraph& g, const Clique& c)
{
    if (g.scenario() != impl_->scenario)
        throw ScenarioMismatch("clique from a different scenario");
    const auto events = clique_event_indices(g, c);
    add(std::span<const std::uint32_t>(events));
}

std::vector<EquivalenceClass> Classifier::finalize()
{
    const Scenario& sc = impl_->scenario;
    const NsReducer reducer(sc);

    const auto orbit_map = impl_->set_orbits();
    std::vector<std::pair<std::vector<std::uint32_t>, std::uint64_t>> orbits(
        orbit_map.begin(), orbit_map.end());

    std::vector<std::vector<Rational>> forms(orbits.size());
    parallel_for(orbits.size(), impl_->threads, [&](unsigned, std::size_t i) {
        forms[i] = canonical_reduced(impl_->group, reducer, orbits[i].first);
    });

    struct Aggregate {
        std::vector<std::uint32_t> representative_set;
        std::uint64_t member_count = 0;
    };
    std::map<std::vector<Rational>, Aggregate> classes;
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        auto& agg = classes[forms[i]];
        if (agg.representative_set.empty() || orbits[i].first < agg.representative_set)
            agg.representative_set = orbits[i].first;
        agg.member_count += orbits[i].second;
    }

    std::vector<EquivalenceClass> out;
    out.reserve(classes.size());
    for (auto& [form, agg] : classes) {
        EquivalenceClass cls{
            LOInequality(sc, events_of_indices(sc, agg.representative_set)),
            form, agg.member_count, Rational(0), false};
        out.push_back(std::move(cls));
    }
    parallel_for(out.size(), impl_->threads, [&](unsigned, std::size_t i) {
        out[i].ns_maximum = ns_max(out[i].representative);
        out[i].trivial = out[i].ns_maximum == 1;
    });
    return out;
}

std::vector<EquivalenceClass> classify(const std::vector<LOInequality>& ineqs,
                                       const Scenario& sc, unsigned threads)
{
    Classifier classifier(sc, threads);
    for (const auto& ineq : ineqs)
        classifier.add(ineq);
    return classifier.finalize();
}

std::vector<Rational> canonical_form(const LOInequality& ineq)
{
    const SymmetryGroup group(ineq.scenario());
    const NsReducer reducer(ineq.scenario());
    return canonical_reduced(group, reducer, ineq.event_indices());
}

} // namespace lo
