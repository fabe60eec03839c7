#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lo/boxes.hpp"
#include "lo/cliques.hpp"
#include "lo/orthograph.hpp"

#include "oracles.hpp"

using namespace lo;

namespace {

Event ev(const Scenario& sc, const char* text) { return parse_event(sc, text); }

} // namespace

TEST_CASE("orthogonality of single pairs")
{
    const Scenario sc(2, 2, 2);
    CHECK(are_orthogonal(sc, ev(sc, "00|00"), ev(sc, "10|00")));
    CHECK_FALSE(are_orthogonal(sc, ev(sc, "00|00"), ev(sc, "11|11")));
    CHECK_FALSE(are_orthogonal(sc, ev(sc, "00|00"), ev(sc, "00|00")));
}

TEST_CASE("orthogonality is symmetric and irreflexive")
{
    const Scenario sc(2, 2, 2);
    for (std::uint64_t i = 0; i < sc.event_count(); ++i) {
        const Event e = event_from_index(sc, i);
        CHECK_FALSE(are_orthogonal(sc, e, e));
        for (std::uint64_t j = 0; j < sc.event_count(); ++j) {
            const Event f = event_from_index(sc, j);
            CHECK(are_orthogonal(sc, e, f) == are_orthogonal(sc, f, e));
        }
    }
}

TEST_CASE("full graph of (2,2,2): 16 vertices, 56 edges, regular of degree 7")
{
    const auto g = build_graph(Scenario(2, 2, 2));
    CHECK(g.vertex_count() == 16);
    CHECK(g.edge_count() == 56);
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        CHECK(g.degree(v) == 7);

    // adjacency agrees with the definition, pair by pair
    for (std::size_t u = 0; u < 16; ++u)
        for (std::size_t v = 0; v < 16; ++v)
            CHECK(g.adjacent(u, v) ==
                  (u != v && are_orthogonal(g.scenario(), g.label_event(u), g.label_event(v))));
}

TEST_CASE("full graph sizes")
{
    CHECK(build_graph(Scenario(3, 2, 2)).vertex_count() == 64);
    CHECK(build_graph(Scenario(4, 2, 2)).vertex_count() == 256);
    CHECK_THROWS_AS(build_graph(Scenario(8, 2, 2)), CapacityExceeded);
}

TEST_CASE("induced subgraphs preserve labels")
{
    const auto g = build_graph(Scenario(2, 2, 2));

    const auto empty = induced_subgraph(g, std::vector<std::uint32_t>{});
    CHECK(empty.vertex_count() == 0);

    std::vector<std::uint32_t> all(g.vertex_count());
    for (std::size_t v = 0; v < all.size(); ++v)
        all[v] = std::uint32_t(v);
    const auto copy = induced_subgraph(g, all);
    CHECK(copy.vertex_count() == g.vertex_count());
    CHECK(copy.edge_count() == g.edge_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        CHECK(copy.label(v) == g.label(v));

    CHECK_THROWS_AS(induced_subgraph(g, std::vector<std::uint32_t>{99}), InvalidVertex);
}

TEST_CASE("support of standard boxes")
{
    const auto g222 = build_graph(Scenario(2, 2, 2));
    CHECK(support_vertices(g222, uniform_box(Scenario(2, 2, 2))).size() == 16);

    const auto pr_support = support_vertices(g222, pr_box());
    CHECK(pr_support.size() == 8);
    const auto sub = induced_subgraph(g222, pr_support);
    CHECK(sub.vertex_count() == 8);

    // subgraph adjacency equals the definition restricted to the support
    for (std::size_t u = 0; u < sub.vertex_count(); ++u)
        for (std::size_t v = 0; v < sub.vertex_count(); ++v)
            CHECK(sub.adjacent(u, v) ==
                  (u != v &&
                   are_orthogonal(sub.scenario(), sub.label_event(u), sub.label_event(v))));

    const auto g422 = build_graph(Scenario(4, 2, 2));
    const auto two = tensor_power(pr_box(), 2);
    CHECK(support_vertices(g422, two).size() == 64);
}

TEST_CASE("bipartite maximal cliques have d*d events of the one-sided form")
{
    // every maximal clique fixes one party's setting and maps that party's
    // outcome to the other's setting
    for (const Scenario sc :
         {Scenario(2, 2, 2), Scenario(2, 3, 2), Scenario(2, 2, 3), Scenario(2, 3, 3)}) {
        const auto g = build_graph(sc);
        const std::size_t d = std::size_t(sc.outcomes());
        for (const auto& [clique] : all_maximal_cliques(g)) {
            CHECK(clique.size() == d * d);
            bool alice_fixed = true;
            bool bob_fixed = true;
            std::vector<int> alice_map(d, -1), bob_map(d, -1);
            bool alice_fun = true, bob_fun = true;
            for (const auto v : clique) {
                const Event e = g.label_event(v);
                if (e.settings[0] != g.label_event(clique[0]).settings[0])
                    alice_fixed = false;
                if (e.settings[1] != g.label_event(clique[0]).settings[1])
                    bob_fixed = false;
                auto& ay = alice_map[e.outcomes[0]];
                if (ay == -1)
                    ay = e.settings[1];
                else if (ay != e.settings[1])
                    alice_fun = false;
                auto& bx = bob_map[e.outcomes[1]];
                if (bx == -1)
                    bx = e.settings[0];
                else if (bx != e.settings[0])
                    bob_fun = false;
            }
            CHECK(((alice_fixed && alice_fun) || (bob_fixed && bob_fun)));
        }
    }
}
