#include "lo/dgp.hpp"

#include "lo/orthograph.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <numeric>
#include <thread>
#include <utility>

namespace lo {

namespace {

constexpr double kMaxStrategySpace = 1e8;

void check_digits(const Scenario& sc, const std::vector<std::uint8_t>& v, int radix,
                  const char* what)
{
    if (v.size() != std::size_t(sc.parties()))
        throw InvalidParameter(std::string(what) + " has wrong length");
    for (const auto digit : v)
        if (digit >= radix)
            throw InvalidParameter(std::string(what) + " digit out of range");
}

} // namespace

DGPInstance::DGPInstance(Scenario scenario,
                         std::vector<std::vector<std::uint8_t>> answer_set,
                         std::vector<std::vector<std::uint8_t>> encodings)
    : scenario_(std::move(scenario)), answers_(std::move(answer_set)),
      encodings_(std::move(encodings))
{
    if (answers_.empty())
        throw InvalidParameter("answer set must be nonempty");
    if (encodings_.size() != answers_.size())
        throw InvalidParameter("encoding must be defined on all of the answer set");
    for (const auto& a : answers_)
        check_digits(scenario_, a, scenario_.outcomes(), "answer vector");
    for (const auto& x : encodings_)
        check_digits(scenario_, x, scenario_.settings(), "encoded vector");

    // keep (answer, encoding) pairs sorted by answer; duplicates rejected
    std::vector<std::size_t> order(answers_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return answers_[i] < answers_[j]; });
    std::vector<std::vector<std::uint8_t>> sorted_a, sorted_f;
    sorted_a.reserve(order.size());
    sorted_f.reserve(order.size());
    for (const auto i : order) {
        if (!sorted_a.empty() && sorted_a.back() == answers_[i])
            throw InvalidParameter("duplicate answer vector in S");
        sorted_a.push_back(std::move(answers_[i]));
        sorted_f.push_back(std::move(encodings_[i]));
    }
    answers_ = std::move(sorted_a);
    encodings_ = std::move(sorted_f);
}

bool is_maximally_difficult(const DGPInstance& inst)
{
    const auto& s = inst.answer_set();
    const auto& f = inst.encodings();
    const int n = inst.scenario().parties();
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            bool blocked = false;
            for (int p = 0; p < n && !blocked; ++p)
                blocked = s[i][p] != s[j][p] && f[i][p] == f[j][p];
            if (!blocked)
                return false;
        }
    return true;
}

Rational classical_value(const DGPInstance& inst)
{
    const Scenario& sc = inst.scenario();
    const int n = sc.parties();
    const int m = sc.settings();
    const int d = sc.outcomes();
    const std::uint64_t per_party = [&] {
        std::uint64_t count = 1;
        for (int s = 0; s < m; ++s)
            count *= std::uint64_t(d);
        return count;
    }();
    if (std::pow(double(per_party), n) > kMaxStrategySpace)
        throw CapacityExceeded("strategy space exceeds the search cap");

    // strategy of one party encoded as digits base d, one per setting
    const auto party_answer = [&](std::uint64_t strategy, int setting) {
        for (int s = 0; s < setting; ++s)
            strategy /= std::uint64_t(d);
        return std::uint8_t(strategy % std::uint64_t(d));
    };

    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i)
        total *= per_party;

    const auto wins_for = [&](std::uint64_t combined) {
        std::size_t wins = 0;
        std::vector<std::uint64_t> strategy(n);
        for (int i = n - 1; i >= 0; --i) {
            strategy[i] = combined % per_party;
            combined /= per_party;
        }
        const auto& answers = inst.answer_set();
        const auto& encodings = inst.encodings();
        for (std::size_t k = 0; k < answers.size(); ++k) {
            bool win = true;
            for (int i = 0; i < n && win; ++i)
                win = party_answer(strategy[i], encodings[k][i]) == answers[k][i];
            wins += win;
        }
        return wins;
    };

    // split over the first party's strategy choices, max-reduce per chunk
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers = total >= 1 << 16 ? std::min<unsigned>(hw, unsigned(per_party)) : 1;
    std::size_t best = 0;
    if (workers <= 1) {
        for (std::uint64_t c = 0; c < total; ++c)
            best = std::max(best, wins_for(c));
    } else {
        const std::uint64_t rest = total / per_party;
        std::atomic<std::uint64_t> next_first{0};
        std::vector<std::size_t> partial(workers, 0);
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::uint64_t first = next_first.fetch_add(1); first < per_party;
                     first = next_first.fetch_add(1))
                    for (std::uint64_t c = 0; c < rest; ++c)
                        partial[w] = std::max(partial[w], wins_for(first * rest + c));
            });
        for (auto& t : pool)
            t.join();
        best = *std::max_element(partial.begin(), partial.end());
    }
    return Rational(best) / Rational(std::uint64_t(inst.size()));
}

LOInequality dgp_to_inequality(const DGPInstance& inst)
{
    if (!is_maximally_difficult(inst))
        throw NotAnLOInequality("instance admits a better-than-blind classical strategy");
    std::vector<Event> events;
    events.reserve(inst.size());
    for (std::size_t k = 0; k < inst.size(); ++k)
        events.push_back(Event{inst.answer_set()[k], inst.encodings()[k]});
    return LOInequality(inst.scenario(), std::move(events));
}

DGPInstance dgp_from_inequality(const LOInequality& ineq)
{
    std::vector<std::vector<std::uint8_t>> answers, encodings;
    answers.reserve(ineq.size());
    encodings.reserve(ineq.size());
    for (const auto& e : ineq.events()) {
        answers.push_back(e.outcomes);
        encodings.push_back(e.settings);
    }
    return DGPInstance(ineq.scenario(), std::move(answers), std::move(encodings));
}

namespace {

std::vector<std::uint8_t> parse_digit_vector(const Scenario& sc, const std::string& text,
                                             int radix, const char* what)
{
    if (text.size() != std::size_t(sc.parties()))
        throw ParseError(std::string(what) + " has wrong length: " + text);
    std::vector<std::uint8_t> out(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9' || text[i] - '0' >= radix)
            throw ParseError(std::string(what) + " digit out of range: " + text);
        out[i] = std::uint8_t(text[i] - '0');
    }
    return out;
}

} // namespace

DGPInstance dgp_from_json_stream(std::istream& in)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad instance JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("m") || !doc.contains("d") ||
        !doc.contains("S") || !doc.contains("f"))
        throw ParseError("instance JSON must contain n, m, d, S, f");
    const Scenario sc(doc["n"].get<int>(), doc["m"].get<int>(), doc["d"].get<int>());
    std::vector<std::vector<std::uint8_t>> answers, encodings;
    for (const auto& item : doc["S"]) {
        const auto key = item.get<std::string>();
        answers.push_back(parse_digit_vector(sc, key, sc.outcomes(), "answer vector"));
        if (!doc["f"].contains(key))
            throw ParseError("encoding missing for answer vector " + key);
        encodings.push_back(parse_digit_vector(sc, doc["f"][key].get<std::string>(),
                                               sc.settings(), "encoded vector"));
    }
    return DGPInstance(sc, std::move(answers), std::move(encodings));
}

DGPInstance load_dgp(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open instance file: " + path);
    return dgp_from_json_stream(in);
}

} // namespace lo
