#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lo/boxes.hpp"
#include "lo/cliques.hpp"
#include "lo/inequality.hpp"

#include "oracles.hpp"

#include <random>

using namespace lo;

TEST_CASE("the (2,2,2) graph has exactly 12 maximal cliques, all of size 4")
{
    const auto g = build_graph(Scenario(2, 2, 2));
    const auto cliques = all_maximal_cliques(g);
    CHECK(cliques.size() == 12);
    for (const auto& c : cliques) {
        CHECK(c.vertices.size() == 4);
        CHECK_NOTHROW(validate_clique(g, c.vertices));
    }

    // agrees with subset-scan enumeration
    auto reference = oracle::naive_maximal_cliques(oracle::adjacency_masks(g));
    std::vector<std::vector<std::uint32_t>> ours;
    for (const auto& c : cliques)
        ours.push_back(c.vertices);
    std::sort(ours.begin(), ours.end());
    CHECK(ours == reference);
}

TEST_CASE("min-size pruning and limits")
{
    const auto g = build_graph(Scenario(2, 2, 2));
    CHECK(all_maximal_cliques(g, 5).empty());
    CHECK(all_maximal_cliques(g, 4).size() == 12);

    std::size_t seen = 0;
    const auto stats = enumerate_maximal_cliques(g, 1, 5, [&](const Clique&) { ++seen; });
    CHECK(seen == 5);
    CHECK(stats.emitted == 5);
    CHECK(stats.truncated);

    const auto full = enumerate_maximal_cliques(g, 1, std::nullopt, [](const Clique&) {});
    CHECK(full.emitted == 12);
    CHECK_FALSE(full.truncated);
}

TEST_CASE("enumeration matches the subset-scan oracle on random graphs")
{
    std::mt19937 rng(20130722);
    std::uniform_int_distribution<std::size_t> size_dist(4, 18);
    std::uniform_real_distribution<double> density(0.15, 0.85);
    for (int trial = 0; trial < 100; ++trial) {
        const auto adj = oracle::random_graph(rng, size_dist(rng), density(rng));
        const auto g = oracle::as_graph(adj);
        std::vector<std::vector<std::uint32_t>> ours;
        for (const auto& c : all_maximal_cliques(g))
            ours.push_back(c.vertices);
        std::sort(ours.begin(), ours.end());
        CHECK(ours == oracle::naive_maximal_cliques(adj));
    }
}

TEST_CASE("possible-events graph of one PR box has no clique beyond two events")
{
    const auto g = build_graph(Scenario(2, 2, 2));
    const auto sub = induced_subgraph(g, support_vertices(g, pr_box()));
    CHECK(sub.vertex_count() == 8);
    CHECK(max_clique_size(sub) == 2);

    // brute force agrees
    std::size_t best = 0;
    for (const auto& c : oracle::naive_maximal_cliques(oracle::adjacency_masks(sub)))
        best = std::max(best, c.size());
    CHECK(best == 2);
}

TEST_CASE("possible-events graph of two PR boxes: cliques beyond four events all have five")
{
    const auto g = build_graph(Scenario(4, 2, 2));
    const auto sub = induced_subgraph(g, support_vertices(g, tensor_power(pr_box(), 2)));
    CHECK(sub.vertex_count() == 64);

    std::size_t count = 0;
    enumerate_maximal_cliques(sub, 5, std::nullopt, [&](const Clique& c) {
        ++count;
        CHECK(c.vertices.size() == 5);
        validate_clique(sub, c.vertices);
    });
    CHECK(count > 0);
    CHECK(max_clique_size(sub) == 5);
}

TEST_CASE("greedy completion")
{
    const auto g = build_graph(Scenario(2, 2, 2));

    const auto cliques = all_maximal_cliques(g);
    for (const auto& c : cliques)
        CHECK(complete_to_maximal(g, c) == c); // already maximal: unchanged

    const auto from_empty = complete_to_maximal(g, Clique{});
    CHECK(from_empty.vertices.size() == 4);
}

TEST_CASE("completion rejects non-cliques")
{
    const auto g = build_graph(Scenario(2, 2, 2));
    // (00|00) and (00|01): no party shares a setting with differing outcomes
    const auto u = std::uint32_t(event_index(g.scenario(), parse_event(g.scenario(), "00|00")));
    const auto v = std::uint32_t(event_index(g.scenario(), parse_event(g.scenario(), "00|01")));
    CHECK_FALSE(g.adjacent(u, v));
    CHECK_THROWS_AS(complete_to_maximal(g, Clique{{u, v}}), NotAClique);
    CHECK_THROWS_AS(complete_to_maximal(g, Clique{{999}}), InvalidVertex);
}

TEST_CASE("the five-event seed completes to at least ten events in (4,2,2)")
{
    const auto g = build_graph(Scenario(4, 2, 2));
    const Scenario& sc = g.scenario();
    std::vector<std::uint32_t> seed;
    for (const char* text : {"0000|0000", "1110|0011", "0011|0110", "1101|1011", "0111|1101"})
        seed.push_back(std::uint32_t(event_index(sc, parse_event(sc, text))));
    const auto completed = complete_to_maximal_events(g, seed);
    CHECK(completed.vertices.size() >= 10);
    for (const auto s : seed)
        CHECK(std::find(completed.vertices.begin(), completed.vertices.end(), s) !=
              completed.vertices.end());
}

TEST_CASE("violation witness for two PR boxes has value 5/4")
{
    const auto g = build_graph(Scenario(4, 2, 2));
    const auto witness = find_violation_witness(tensor_power(pr_box(), 2), g);
    REQUIRE(witness.has_value());
    CHECK(witness->value == Rational(5, 4));
    CHECK_NOTHROW(validate_clique(g, witness->clique.vertices));
}

TEST_CASE("no violation witness for a single PR box")
{
    const auto g = build_graph(Scenario(2, 2, 2));
    CHECK_FALSE(find_violation_witness(pr_box(), g).has_value());
}

TEST_CASE("no violation witness for the uniform (4,2,2) box")
{
    const auto g = build_graph(Scenario(4, 2, 2));
    CHECK_FALSE(find_violation_witness(uniform_box(g.scenario()), g).has_value());
}

TEST_CASE("clique value only depends on the support part")
{
    const auto g = build_graph(Scenario(2, 2, 2));
    const auto cliques = all_maximal_cliques(g);

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(0, 3);
    for (int trial = 0; trial < 20; ++trial) {
        // random two-strategy deterministic mixture, entries 0, 1/3, 2/3 or 1
        const auto g1 = std::vector<std::vector<std::uint8_t>>{
            {std::uint8_t(pick(rng) & 1), std::uint8_t(pick(rng) & 1)},
            {std::uint8_t(pick(rng) & 1), std::uint8_t(pick(rng) & 1)}};
        const auto g2 = std::vector<std::vector<std::uint8_t>>{
            {std::uint8_t(pick(rng) & 1), std::uint8_t(pick(rng) & 1)},
            {std::uint8_t(pick(rng) & 1), std::uint8_t(pick(rng) & 1)}};
        const Behavior d1 = deterministic_box(g.scenario(), g1);
        const Behavior d2 = deterministic_box(g.scenario(), g2);
        std::vector<Rational> table(16);
        for (std::size_t k = 0; k < 16; ++k)
            table[k] = Rational(1, 3) * d1.at(k) + Rational(2, 3) * d2.at(k);
        const Behavior b(g.scenario(), std::move(table));

        const auto support = support_vertices(g, b);
        const Bitset support_set = [&] {
            Bitset s(g.vertex_count());
            for (const auto v : support)
                s.set(v);
            return s;
        }();
        for (const auto& c : cliques) {
            Rational full(0), restricted(0);
            for (const auto v : c.vertices) {
                full += b.at(g.label(v));
                if (support_set.test(v))
                    restricted += b.at(g.label(v));
            }
            CHECK(full == restricted);
        }
    }
}
