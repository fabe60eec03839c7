#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lo/boxes.hpp"
#include "lo/cliques.hpp"
#include "lo/nspolytope.hpp"

#include <algorithm>
#include <random>

using namespace lo;

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b)
{
    Rational total(0);
    for (std::size_t i = 0; i < a.size(); ++i)
        total += a[i] * b[i];
    return total;
}

void check_feasible(const ExactLP& lp, const LPResult& r)
{
    for (const auto& x : r.solution)
        CHECK(x >= 0);
    for (const auto& [row, rhs] : lp.equalities)
        CHECK(dot(row, r.solution) == rhs);
    CHECK(dot(lp.objective, r.solution) == r.value);
}

LOInequality clique_inequality(const OrthogonalityGraph& g, const Clique& c)
{
    std::vector<Event> events;
    for (const auto v : c.vertices)
        events.push_back(g.label_event(v));
    return LOInequality(g.scenario(), std::move(events));
}

} // namespace

TEST_CASE("toy linear programs")
{
    ExactLP lp;
    lp.variable_count = 2;
    lp.objective = {Rational(1), Rational(0)};
    lp.equalities = {{{Rational(1), Rational(1)}, Rational(1)}};
    const auto r = lp_solve_max(lp);
    CHECK(r.value == 1);
    CHECK(r.solution == std::vector<Rational>{Rational(1), Rational(0)});
    check_feasible(lp, r);

    lp.objective = {Rational(1), Rational(1)};
    const auto r2 = lp_solve_max(lp);
    CHECK(r2.value == 1); // objective constant on the feasible segment
    check_feasible(lp, r2);
}

TEST_CASE("infeasible and unbounded problems are reported")
{
    ExactLP lp;
    lp.variable_count = 2;
    lp.objective = {Rational(1), Rational(0)};
    lp.equalities = {{{Rational(1), Rational(1)}, Rational(-1)}};
    CHECK_THROWS_AS(lp_solve_max(lp), Infeasible);

    ExactLP free_var;
    free_var.variable_count = 2;
    free_var.objective = {Rational(1), Rational(0)};
    free_var.equalities = {{{Rational(0), Rational(1)}, Rational(1)}};
    CHECK_THROWS_AS(lp_solve_max(free_var), Unbounded);
}

TEST_CASE("no-signaling system of (2,2,2)")
{
    const Scenario sc(2, 2, 2);
    const auto lp = ns_constraint_system(sc);
    CHECK(lp.variable_count == 16);

    std::size_t normalization = 0;
    for (const auto& [row, rhs] : lp.equalities)
        normalization += rhs == 1;
    CHECK(normalization == 4);
    CHECK(lp.equalities.size() == 12); // 4 normalization + 2 parties * 4 contexts

    for (const Behavior& b : {uniform_box(sc), pr_box(), noisy_pr(Rational(2, 5))})
        for (const auto& [row, rhs] : lp.equalities)
            CHECK(dot(row, b.table()) == rhs);
}

TEST_CASE("GYNI maximum over no-signaling boxes is exactly 4/3")
{
    const auto [value, witness] = ns_maximize(gyni(3));
    CHECK(value == Rational(4, 3));
    CHECK(is_no_signaling(witness));
    CHECK(evaluate(gyni(3), witness) == Rational(4, 3));
}

TEST_CASE("bipartite maximal cliques cannot beat 1")
{
    const auto g = build_graph(Scenario(2, 2, 2));
    for (const auto& c : all_maximal_cliques(g))
        CHECK(ns_max(clique_inequality(g, c)) == 1);
}

TEST_CASE("single-event inequalities reach exactly 1")
{
    const Scenario sc(3, 2, 2);
    const LOInequality single(sc, {parse_event(sc, "000|000")});
    CHECK(ns_max(single) == 1);
}

TEST_CASE("optimum is invariant under row order and redundancy")
{
    ExactLP lp = ns_constraint_system(Scenario(2, 2, 2));
    const auto g3 = gyni(3);
    lp = ns_constraint_system(g3.scenario());
    for (const auto idx : g3.event_indices())
        lp.objective[idx] = 1;
    const auto base = lp_solve_max(lp);

    std::mt19937 rng(5);
    auto shuffled = lp;
    std::shuffle(shuffled.equalities.begin(), shuffled.equalities.end(), rng);
    shuffled.equalities.push_back(shuffled.equalities.front()); // duplicate row
    const auto again = lp_solve_max(shuffled);
    CHECK(again.value == base.value);
    check_feasible(shuffled, again);
}

TEST_CASE("uniform box gives a lower bound on the no-signaling maximum")
{
    const auto g = build_graph(Scenario(3, 2, 2));
    const auto uniform = uniform_box(g.scenario());
    std::size_t checked = 0;
    enumerate_maximal_cliques(g, 1, 25, [&](const Clique& c) {
        const auto ineq = clique_inequality(g, c);
        const auto best = ns_max(ineq);
        CHECK(evaluate(ineq, uniform) <= best);
        CHECK(best >= 1); // a deterministic box picks one event with certainty
        ++checked;
    });
    CHECK(checked == 25);
}
