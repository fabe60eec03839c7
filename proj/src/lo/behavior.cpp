#include "lo/behavior.hpp"

#include <json.hpp>

#include <fstream>
#include <utility>

namespace lo {

namespace {

// place value of party i's digit in the event index, base m*d
std::vector<std::uint64_t> digit_places(const Scenario& sc)
{
    const std::uint64_t base = std::uint64_t(sc.settings()) * sc.outcomes();
    std::vector<std::uint64_t> place(sc.parties());
    std::uint64_t p = 1;
    for (int i = sc.parties() - 1; i >= 0; --i) {
        place[i] = p;
        p *= base;
    }
    return place;
}

} // namespace

Behavior::Behavior(Scenario scenario, std::vector<Rational> table)
    : scenario_(std::move(scenario)), table_(std::move(table))
{
    if (table_.size() != scenario_.event_count())
        throw InvalidBehavior("table size must equal the event count");
    for (const auto& p : table_)
        if (p < 0)
            throw InvalidBehavior("negative probability entry");

    // one sum per joint setting; blocks are interleaved in the index space
    const int n = scenario_.parties();
    const int d = scenario_.outcomes();
    const std::uint64_t base = std::uint64_t(scenario_.settings()) * d;
    std::vector<Rational> sums(scenario_.joint_setting_count());
    for (std::uint64_t idx = 0; idx < table_.size(); ++idx) {
        std::uint64_t block = 0;
        std::uint64_t rest = idx;
        std::uint64_t shift = 1;
        for (int i = n - 1; i >= 0; --i) {
            block += (rest % base) / d * shift;
            rest /= base;
            shift *= std::uint64_t(scenario_.settings());
        }
        sums[block] += table_[idx];
    }
    for (const auto& s : sums)
        if (s != 1)
            throw InvalidBehavior("setting block does not sum to 1");
}

const Rational& Behavior::at(const Event& e) const
{
    return table_[event_index(scenario_, e)];
}

Behavior uniform_box(const Scenario& sc)
{
    const Rational p = Rational(1) / Rational(Integer(sc.joint_outcome_count()));
    return Behavior(sc, std::vector<Rational>(sc.event_count(), p));
}

bool is_no_signaling(const Behavior& b)
{
    const Scenario& sc = b.scenario();
    const int n = sc.parties();
    const int m = sc.settings();
    const int d = sc.outcomes();
    const std::uint64_t base = std::uint64_t(m) * d;
    const std::uint64_t total = sc.event_count();
    const auto place = digit_places(sc);

    for (int i = 0; i < n; ++i) {
        // marginal over party i's outcome, bucketed by (party i's setting,
        // everyone else's digits); no-signaling iff independent of the setting
        const std::uint64_t rest_count = total / base;
        std::vector<Rational> marg(std::uint64_t(m) * rest_count);
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            const std::uint64_t digit = (idx / place[i]) % base;
            const std::uint64_t s = digit / d;
            const std::uint64_t hi = idx / (place[i] * base);
            const std::uint64_t lo = idx % place[i];
            marg[s * rest_count + hi * place[i] + lo] += b.at(idx);
        }
        for (std::uint64_t key = 0; key < rest_count; ++key)
            for (int s = 1; s < m; ++s)
                if (marg[std::uint64_t(s) * rest_count + key] != marg[key])
                    return false;
    }
    return true;
}

Behavior behavior_from_json_stream(std::istream& in)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad behavior JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("m") || !doc.contains("d"))
        throw ParseError("behavior JSON must contain n, m, d");
    const Scenario sc(doc["n"].get<int>(), doc["m"].get<int>(), doc["d"].get<int>());
    std::vector<Rational> table(sc.event_count(), Rational(0));
    if (doc.contains("P")) {
        if (!doc["P"].is_object())
            throw ParseError("behavior JSON field P must be an object");
        for (const auto& [key, value] : doc["P"].items()) {
            const Event e = parse_event(sc, key);
            Rational p;
            if (value.is_string())
                p = parse_rational(value.get<std::string>());
            else if (value.is_number_integer())
                p = Rational(value.get<long long>());
            else
                throw ParseError("probability must be a rational string or integer: " + key);
            table[event_index(sc, e)] = p;
        }
    }
    return Behavior(sc, std::move(table));
}

Behavior load_behavior(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open behavior file: " + path);
    return behavior_from_json_stream(in);
}

void behavior_to_json_stream(const Behavior& b, std::ostream& out)
{
    nlohmann::ordered_json doc;
    doc["n"] = b.scenario().parties();
    doc["m"] = b.scenario().settings();
    doc["d"] = b.scenario().outcomes();
    nlohmann::ordered_json table = nlohmann::ordered_json::object();
    for (std::uint64_t idx = 0; idx < b.scenario().event_count(); ++idx)
        if (b.at(idx) != 0)
            table[event_to_string(event_from_index(b.scenario(), idx))] = to_string(b.at(idx));
    doc["P"] = std::move(table);
    out << doc.dump(2) << '\n';
}

void save_behavior(const Behavior& b, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot open output file: " + path);
    behavior_to_json_stream(b, out);
}

} // namespace lo
