#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lo/boxes.hpp"
#include "lo/inequality.hpp"
#include "lo/orthograph.hpp"
#include "lo/symmetry_group.hpp"

#include <random>
#include <sstream>

using namespace lo;

namespace {

const std::string kDataDir = LO_DATA_DIR;

Event ev(const Scenario& sc, const char* text) { return parse_event(sc, text); }

} // namespace

TEST_CASE("construction enforces pairwise orthogonality")
{
    const Scenario sc(2, 2, 2);
    CHECK_NOTHROW(LOInequality(sc, {ev(sc, "00|00"), ev(sc, "10|00")}));
    CHECK_THROWS_AS(LOInequality(sc, {ev(sc, "00|00"), ev(sc, "11|11")}), NotAnLOInequality);
    CHECK_THROWS_AS(LOInequality(sc, {ev(sc, "00|00"), ev(sc, "00|00")}), NotAnLOInequality);
    CHECK_THROWS_AS(LOInequality(sc, {}), NotAnLOInequality);
}

TEST_CASE("guess-your-neighbor's-input inequalities")
{
    const auto g3 = gyni(3);
    CHECK(g3.size() == 4);
    const Scenario sc = g3.scenario();
    const std::vector<Event> expected = {ev(sc, "000|000"), ev(sc, "110|011"),
                                         ev(sc, "011|101"), ev(sc, "101|110")};
    for (const auto& e : expected)
        CHECK(std::find(g3.events().begin(), g3.events().end(), e) != g3.events().end());

    CHECK(gyni(5).size() == 16); // construction re-validates orthogonality
    CHECK_THROWS_AS(gyni(2), InvalidArity);
    CHECK_THROWS_AS(gyni(4), InvalidArity);
    CHECK_THROWS_AS(gyni(1), InvalidArity);
}

TEST_CASE("evaluation")
{
    const auto g3 = gyni(3);
    CHECK(evaluate(g3, uniform_box(g3.scenario())) == Rational(1, 2));

    const auto zeros = deterministic_box(g3.scenario(), {{0, 0}, {0, 0}, {0, 0}});
    CHECK(evaluate(g3, zeros) == 1);

    const auto five = load_inequality(kDataDir + "/five_event.txt");
    CHECK(evaluate(five, tensor_power(pr_box(), 2)) == Rational(5, 4));

    CHECK_THROWS_AS(evaluate(g3, pr_box()), ScenarioMismatch);
}

TEST_CASE("symmetries act as graph automorphisms")
{
    const auto g3 = gyni(3);
    const Scenario sc = g3.scenario();

    CHECK(apply_symmetry(identity_symmetry(sc), g3) == g3);

    // cyclic party shift: GYNI maps onto a valid 4-event inequality
    SymmetryOp cyc = identity_symmetry(sc);
    cyc.party_perm = {1, 2, 0};
    const auto shifted = apply_symmetry(cyc, g3);
    CHECK(shifted.size() == 4);

    SymmetryOp bad = identity_symmetry(sc);
    bad.party_perm = {0, 0, 1};
    CHECK_THROWS_AS(apply_symmetry(bad, g3), InvalidSymmetry);
    SymmetryOp wrong_arity = identity_symmetry(Scenario(2, 2, 2));
    CHECK_THROWS_AS(apply_symmetry(wrong_arity, g3), InvalidSymmetry);
}

TEST_CASE("group elements compose, invert, and preserve structure")
{
    const Scenario sc(3, 2, 2);
    const SymmetryGroup group(sc);
    CHECK(group.size() == 3072); // 3! * (2! * (2!)^2)^3

    std::mt19937 rng(11);
    std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
    const auto g3 = gyni(3);
    const Behavior box = noisy_pr(Rational(1, 3));

    for (int trial = 0; trial < 25; ++trial) {
        const auto op = group.element(pick(rng));
        const auto inv = inverse(sc, op);

        // op then inverse is the identity on inequalities
        CHECK(apply_symmetry(inv, apply_symmetry(op, g3)) == g3);

        // materialized element agrees with the fast index action
        const std::size_t op_idx = pick(rng);
        const auto elem = group.element(op_idx);
        for (int probe = 0; probe < 10; ++probe) {
            const std::uint32_t e = std::uint32_t(pick(rng) % sc.event_count());
            CHECK(event_index(sc, apply_symmetry(elem, sc, event_from_index(sc, e))) ==
                  group.apply(op_idx, e));
        }
        CHECK(group.apply(op_idx, group.preimage_of_zero(op_idx)) == 0);

        // orthogonality is preserved
        for (int probe = 0; probe < 10; ++probe) {
            const Event a = event_from_index(sc, pick(rng) % sc.event_count());
            const Event b = event_from_index(sc, pick(rng) % sc.event_count());
            CHECK(are_orthogonal(sc, a, b) ==
                  are_orthogonal(sc, apply_symmetry(elem, sc, a), apply_symmetry(elem, sc, b)));
        }
    }
}

TEST_CASE("evaluation is invariant under joint relabeling")
{
    const Scenario sc(2, 2, 2);
    const SymmetryGroup group(sc);
    CHECK(group.size() == 128); // 2! * (2! * (2!)^2)^2

    const LOInequality chsh_cell(sc, {parse_event(sc, "00|00"), parse_event(sc, "01|00"),
                                      parse_event(sc, "10|01"), parse_event(sc, "11|01")});
    std::mt19937 rng(23);
    std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
    for (int trial = 0; trial < 40; ++trial) {
        const auto op = group.element(pick(rng));
        const Behavior box = noisy_pr(Rational(trial, 40));
        CHECK(evaluate(apply_symmetry(op, chsh_cell), apply_symmetry(op, box)) ==
              evaluate(chsh_cell, box));
    }
}

TEST_CASE("inequality text files")
{
    const auto g3 = gyni(3);
    std::stringstream buffer;
    inequality_to_stream(g3, buffer);
    CHECK(inequality_from_stream(buffer) == g3);

    const auto gyni_file = load_inequality(kDataDir + "/gyni3.txt");
    CHECK(gyni_file == g3);

    const auto five = load_inequality(kDataDir + "/five_event.txt");
    CHECK(five.size() == 5);
    CHECK(five.scenario() == Scenario(4, 2, 2));

    const auto ten = load_inequality(kDataDir + "/ten_event.txt");
    CHECK(ten.size() == 10);
    CHECK(ten.scenario() == Scenario(4, 2, 2));

    std::stringstream missing_header("000|000\n");
    CHECK_THROWS_AS(inequality_from_stream(missing_header), ParseError);
}
