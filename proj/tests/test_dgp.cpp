#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lo/cliques.hpp"
#include "lo/dgp.hpp"

#include <random>
#include <sstream>

using namespace lo;

namespace {

const std::string kDataDir = LO_DATA_DIR;

std::vector<std::vector<std::uint8_t>> all_vectors(int length, int radix)
{
    std::vector<std::vector<std::uint8_t>> out;
    std::vector<std::uint8_t> v(length, 0);
    while (true) {
        out.push_back(v);
        int pos = length - 1;
        while (pos >= 0 && ++v[pos] == radix)
            v[pos--] = 0;
        if (pos < 0)
            return out;
    }
}

DGPInstance gyni_instance(int parties)
{
    const Scenario sc(parties, 2, 2);
    std::vector<std::vector<std::uint8_t>> answers, encodings;
    for (auto& a : all_vectors(parties, 2)) {
        int parity = 0;
        for (const auto bit : a)
            parity ^= bit;
        if (parity)
            continue;
        std::vector<std::uint8_t> x(parties);
        for (int i = 0; i < parties; ++i)
            x[i] = a[(i + parties - 1) % parties];
        answers.push_back(a);
        encodings.push_back(std::move(x));
    }
    return DGPInstance(sc, std::move(answers), std::move(encodings));
}

} // namespace

TEST_CASE("guess-your-neighbor's-input is maximally difficult with value 1/4")
{
    const auto inst = gyni_instance(3);
    CHECK(is_maximally_difficult(inst));
    CHECK(classical_value(inst) == Rational(1, 4));
    CHECK(dgp_to_inequality(inst) == gyni(3));
}

TEST_CASE("easy encodings are not maximally difficult")
{
    const Scenario sc(2, 2, 2);
    const auto everyone = all_vectors(2, 2);

    // identity encoding: players read off the answer
    DGPInstance identity(sc, everyone, everyone);
    CHECK_FALSE(is_maximally_difficult(identity));
    CHECK(classical_value(identity) == 1);
    CHECK_THROWS_AS(dgp_to_inequality(identity), NotAnLOInequality);

    // constant encoding: blind guessing is optimal
    DGPInstance constant(sc, {{0, 0}, {1, 1}},
                         {{0, 0}, {0, 0}});
    CHECK(is_maximally_difficult(constant));
    CHECK(classical_value(constant) == Rational(1, 2));
}

TEST_CASE("instances round-trip through inequalities")
{
    const auto g = build_graph(Scenario(3, 2, 2));
    std::size_t seen = 0;
    enumerate_maximal_cliques(g, 1, 50, [&](const Clique& c) {
        std::vector<Event> events;
        for (const auto v : c.vertices)
            events.push_back(g.label_event(v));
        const LOInequality ineq(g.scenario(), std::move(events));
        const auto inst = dgp_from_inequality(ineq);
        CHECK(is_maximally_difficult(inst));
        CHECK(dgp_to_inequality(inst) == ineq);
        ++seen;
    });
    CHECK(seen == 50);
}

TEST_CASE("maximal difficulty coincides with blind-guess optimality on (2,2,2)")
{
    const Scenario sc(2, 2, 2);
    const auto answers = all_vectors(2, 2);   // 4 outcome vectors
    const auto settings = all_vectors(2, 2);  // 4 encoded vectors

    // every S with |S| in {2,3,4} and every encoding f : S -> settings
    for (std::uint32_t subset = 0; subset < 16; ++subset) {
        std::vector<std::vector<std::uint8_t>> s_set;
        for (int k = 0; k < 4; ++k)
            if (subset & (1u << k))
                s_set.push_back(answers[k]);
        if (s_set.size() < 2)
            continue;
        std::vector<std::size_t> choice(s_set.size(), 0);
        while (true) {
            std::vector<std::vector<std::uint8_t>> encodings;
            for (const auto c : choice)
                encodings.push_back(settings[c]);
            const DGPInstance inst(sc, s_set, encodings);
            const Rational value = classical_value(inst);
            CHECK(value >= Rational(1, std::int64_t(inst.size())));
            CHECK(is_maximally_difficult(inst) ==
                  (value == Rational(1, std::int64_t(inst.size()))));

            int pos = int(choice.size()) - 1;
            while (pos >= 0 && ++choice[pos] == settings.size())
                choice[pos--] = 0;
            if (pos < 0)
                break;
        }
    }
}

TEST_CASE("randomized correspondence spot checks on (3,2,2)")
{
    const Scenario sc(3, 2, 2);
    const auto answers = all_vectors(3, 2);
    const auto settings = all_vectors(3, 2);
    std::mt19937 rng(99);
    std::uniform_int_distribution<std::size_t> pick_size(2, 6);
    std::uniform_int_distribution<std::size_t> pick_vec(0, 7);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<std::size_t> chosen;
        while (chosen.size() < pick_size(rng)) {
            const auto c = pick_vec(rng);
            if (std::find(chosen.begin(), chosen.end(), c) == chosen.end())
                chosen.push_back(c);
        }
        std::vector<std::vector<std::uint8_t>> s_set, encodings;
        for (const auto c : chosen) {
            s_set.push_back(answers[c]);
            encodings.push_back(settings[pick_vec(rng)]);
        }
        const DGPInstance inst(sc, s_set, encodings);
        const Rational value = classical_value(inst);
        CHECK(value >= Rational(1, std::int64_t(inst.size())));
        CHECK(is_maximally_difficult(inst) ==
              (value == Rational(1, std::int64_t(inst.size()))));
    }
}

TEST_CASE("oversized strategy spaces are rejected")
{
    const Scenario sc(4, 4, 4);
    std::vector<std::vector<std::uint8_t>> s_set = {{0, 0, 0, 0}, {1, 1, 1, 1}};
    std::vector<std::vector<std::uint8_t>> encodings = {{0, 0, 0, 0}, {1, 1, 1, 1}};
    const DGPInstance inst(sc, std::move(s_set), std::move(encodings));
    CHECK_THROWS_AS(classical_value(inst), CapacityExceeded);
}

TEST_CASE("instance JSON")
{
    const auto inst = load_dgp(kDataDir + "/gyni3_dgp.json");
    CHECK(is_maximally_difficult(inst));
    CHECK(dgp_to_inequality(inst) == gyni(3));

    std::stringstream missing(R"({"n":2,"m":2,"d":2,"S":["00","11"],"f":{"00":"00"}})");
    CHECK_THROWS_AS(dgp_from_json_stream(missing), ParseError);

    std::stringstream dup(R"({"n":2,"m":2,"d":2,"S":["00","00"],"f":{"00":"00"}})");
    CHECK_THROWS_AS(dgp_from_json_stream(dup), InvalidParameter);
}
