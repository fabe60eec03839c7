#include "lo/inequality.hpp"

#include "lo/orthograph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <optional>
#include <sstream>
#include <utility>

namespace lo {

LOInequality::LOInequality(Scenario scenario, std::vector<Event> events)
    : scenario_(std::move(scenario)), events_(std::move(events))
{
    if (events_.empty())
        throw NotAnLOInequality("inequality needs at least one event");
    for (const auto& e : events_)
        validate_event(scenario_, e);
    for (std::size_t i = 0; i < events_.size(); ++i)
        for (std::size_t j = i + 1; j < events_.size(); ++j)
            if (!are_orthogonal(scenario_, events_[i], events_[j]))
                throw NotAnLOInequality("events " + event_to_string(events_[i]) + " and " +
                                        event_to_string(events_[j]) + " are not orthogonal");
    std::sort(events_.begin(), events_.end(), [&](const Event& a, const Event& b) {
        return event_index(scenario_, a) < event_index(scenario_, b);
    });
    indices_.reserve(events_.size());
    for (const auto& e : events_)
        indices_.push_back(std::uint32_t(event_index(scenario_, e)));
}

Rational evaluate(const LOInequality& ineq, const Behavior& b)
{
    if (ineq.scenario() != b.scenario())
        throw ScenarioMismatch("inequality and behavior scenarios differ");
    Rational total(0);
    for (const auto idx : ineq.event_indices())
        total += b.at(idx);
    return total;
}

LOInequality gyni(int parties)
{
    if (parties < 3 || parties % 2 == 0)
        throw InvalidArity("guess-your-neighbor's-input needs an odd party count >= 3");
    const Scenario sc(parties, 2, 2);
    std::vector<Event> events;
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << parties); ++bits) {
        if (std::popcount(bits) % 2 != 0)
            continue;
        Event e;
        e.outcomes.resize(parties);
        e.settings.resize(parties);
        for (int i = 0; i < parties; ++i)
            e.outcomes[i] = std::uint8_t((bits >> (parties - 1 - i)) & 1);
        for (int i = 0; i < parties; ++i)
            e.settings[i] = e.outcomes[(i + parties - 1) % parties];
        events.push_back(std::move(e));
    }
    return LOInequality(sc, std::move(events));
}

void validate_symmetry(const Scenario& sc, const SymmetryOp& op)
{
    const auto n = std::size_t(sc.parties());
    const auto m = std::size_t(sc.settings());
    const auto d = std::size_t(sc.outcomes());
    const auto is_perm = [](const std::vector<int>& p, std::size_t size) {
        if (p.size() != size)
            return false;
        std::vector<char> seen(size, 0);
        for (const auto v : p) {
            if (v < 0 || std::size_t(v) >= size || seen[v])
                return false;
            seen[v] = 1;
        }
        return true;
    };
    if (!is_perm(op.party_perm, n))
        throw InvalidSymmetry("party permutation does not match the scenario");
    if (op.setting_perms.size() != n || op.outcome_perms.size() != n)
        throw InvalidSymmetry("per-party relabelings do not match the party count");
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_perm(op.setting_perms[i], m))
            throw InvalidSymmetry("setting permutation does not match the scenario");
        if (op.outcome_perms[i].size() != m)
            throw InvalidSymmetry("outcome permutations must cover every setting");
        for (std::size_t s = 0; s < m; ++s)
            if (!is_perm(op.outcome_perms[i][s], d))
                throw InvalidSymmetry("outcome permutation does not match the scenario");
    }
}

SymmetryOp identity_symmetry(const Scenario& sc)
{
    const int n = sc.parties();
    const int m = sc.settings();
    const int d = sc.outcomes();
    SymmetryOp op;
    op.party_perm.resize(n);
    for (int i = 0; i < n; ++i)
        op.party_perm[i] = i;
    std::vector<int> id_m(m), id_d(d);
    for (int s = 0; s < m; ++s)
        id_m[s] = s;
    for (int a = 0; a < d; ++a)
        id_d[a] = a;
    op.setting_perms.assign(n, id_m);
    op.outcome_perms.assign(n, std::vector<std::vector<int>>(m, id_d));
    return op;
}

SymmetryOp compose(const Scenario& sc, const SymmetryOp& first, const SymmetryOp& second)
{
    validate_symmetry(sc, first);
    validate_symmetry(sc, second);
    const int n = sc.parties();
    const int m = sc.settings();
    const int d = sc.outcomes();
    SymmetryOp out = identity_symmetry(sc);
    for (int i = 0; i < n; ++i) {
        const int j = first.party_perm[i];
        out.party_perm[i] = second.party_perm[j];
        for (int s = 0; s < m; ++s) {
            const int s1 = first.setting_perms[i][s];
            out.setting_perms[i][s] = second.setting_perms[j][s1];
            for (int a = 0; a < d; ++a)
                out.outcome_perms[i][s][a] =
                    second.outcome_perms[j][s1][first.outcome_perms[i][s][a]];
        }
    }
    return out;
}

SymmetryOp inverse(const Scenario& sc, const SymmetryOp& op)
{
    validate_symmetry(sc, op);
    const int n = sc.parties();
    const int m = sc.settings();
    const int d = sc.outcomes();
    SymmetryOp out = identity_symmetry(sc);
    for (int i = 0; i < n; ++i) {
        const int j = op.party_perm[i];
        out.party_perm[j] = i;
        for (int s = 0; s < m; ++s) {
            const int s1 = op.setting_perms[i][s];
            out.setting_perms[j][s1] = s;
            for (int a = 0; a < d; ++a)
                out.outcome_perms[j][s1][op.outcome_perms[i][s][a]] = a;
        }
    }
    return out;
}

Event apply_symmetry(const SymmetryOp& op, const Scenario& sc, const Event& e)
{
    validate_event(sc, e);
    const int n = sc.parties();
    Event out;
    out.outcomes.resize(n);
    out.settings.resize(n);
    for (int i = 0; i < n; ++i) {
        const int s = e.settings[i];
        const int a = e.outcomes[i];
        const int j = op.party_perm[i];
        out.settings[j] = std::uint8_t(op.setting_perms[i][s]);
        out.outcomes[j] = std::uint8_t(op.outcome_perms[i][s][a]);
    }
    return out;
}

LOInequality apply_symmetry(const SymmetryOp& op, const LOInequality& ineq)
{
    validate_symmetry(ineq.scenario(), op);
    std::vector<Event> events;
    events.reserve(ineq.size());
    for (const auto& e : ineq.events())
        events.push_back(apply_symmetry(op, ineq.scenario(), e));
    return LOInequality(ineq.scenario(), std::move(events));
}

Behavior apply_symmetry(const SymmetryOp& op, const Behavior& b)
{
    validate_symmetry(b.scenario(), op);
    const Scenario& sc = b.scenario();
    std::vector<Rational> table(sc.event_count());
    for (std::uint64_t idx = 0; idx < sc.event_count(); ++idx) {
        const Event image = apply_symmetry(op, sc, event_from_index(sc, idx));
        table[event_index(sc, image)] = b.at(idx);
    }
    return Behavior(sc, std::move(table));
}

namespace {

std::string_view trimmed(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

} // namespace

LOInequality inequality_from_stream(std::istream& in)
{
    std::string line;
    std::optional<Scenario> sc;
    std::vector<Event> events;
    while (std::getline(in, line)) {
        const auto text = trimmed(line);
        if (text.empty())
            continue;
        if (text.starts_with('#')) {
            auto rest = trimmed(text.substr(1));
            if (rest.starts_with("scenario")) {
                if (sc)
                    throw ParseError("duplicate scenario header");
                sc = Scenario::parse(trimmed(rest.substr(8)));
            }
            continue;
        }
        if (!sc)
            throw ParseError("missing \"# scenario n,m,d\" header before events");
        events.push_back(parse_event(*sc, text));
    }
    if (!sc)
        throw ParseError("missing \"# scenario n,m,d\" header");
    return LOInequality(*sc, std::move(events));
}

LOInequality load_inequality(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open inequality file: " + path);
    return inequality_from_stream(in);
}

void inequality_to_stream(const LOInequality& ineq, std::ostream& out)
{
    out << "# scenario " << ineq.scenario().to_string() << '\n';
    for (const auto& e : ineq.events())
        out << event_to_string(e) << '\n';
}

void save_inequality(const LOInequality& ineq, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot open output file: " + path);
    inequality_to_stream(ineq, out);
}

} // namespace lo
