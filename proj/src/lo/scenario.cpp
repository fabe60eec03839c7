#include "lo/scenario.hpp"

#include <charconv>

namespace lo {

namespace {

constexpr std::uint64_t kMaxEventCount = std::uint64_t{1} << 32;

int parse_int_field(std::string_view text)
{
    int value = 0;
    const auto* begin = text.data();
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw ParseError("not an integer: " + std::string(text));
    return value;
}

} // namespace

Scenario::Scenario(int parties, int settings, int outcomes)
    : n_(parties), m_(settings), d_(outcomes)
{
    if (n_ < 1 || m_ < 1 || d_ < 2)
        throw InvalidParameter("scenario requires n >= 1, m >= 1, d >= 2");
    const std::uint64_t base = std::uint64_t(m_) * std::uint64_t(d_);
    std::uint64_t count = 1;
    for (int i = 0; i < n_; ++i) {
        if (count > kMaxEventCount / base)
            throw CapacityExceeded("scenario event space exceeds 2^32");
        count *= base;
    }
    event_count_ = count;
}

std::uint64_t Scenario::joint_setting_count() const
{
    std::uint64_t count = 1;
    for (int i = 0; i < n_; ++i)
        count *= std::uint64_t(m_);
    return count;
}

std::uint64_t Scenario::joint_outcome_count() const
{
    std::uint64_t count = 1;
    for (int i = 0; i < n_; ++i)
        count *= std::uint64_t(d_);
    return count;
}

std::string Scenario::to_string() const
{
    return std::to_string(n_) + "," + std::to_string(m_) + "," + std::to_string(d_);
}

Scenario Scenario::parse(std::string_view text)
{
    const auto first = text.find(',');
    const auto second = first == std::string_view::npos ? first : text.find(',', first + 1);
    if (first == std::string_view::npos || second == std::string_view::npos)
        throw ParseError("scenario must be \"n,m,d\": " + std::string(text));
    return Scenario(parse_int_field(text.substr(0, first)),
                    parse_int_field(text.substr(first + 1, second - first - 1)),
                    parse_int_field(text.substr(second + 1)));
}

void validate_event(const Scenario& sc, const Event& e)
{
    const auto n = std::size_t(sc.parties());
    if (e.outcomes.size() != n || e.settings.size() != n)
        throw ScenarioMismatch("event has wrong party count");
    for (std::size_t i = 0; i < n; ++i) {
        if (e.settings[i] >= sc.settings())
            throw InvalidEvent("setting out of range");
        if (e.outcomes[i] >= sc.outcomes())
            throw InvalidEvent("outcome out of range");
    }
}

std::uint64_t event_index(const Scenario& sc, const Event& e)
{
    validate_event(sc, e);
    const std::uint64_t d = sc.outcomes();
    const std::uint64_t base = std::uint64_t(sc.settings()) * d;
    std::uint64_t index = 0;
    for (int i = 0; i < sc.parties(); ++i)
        index = index * base + (std::uint64_t(e.settings[i]) * d + e.outcomes[i]);
    return index;
}

Event event_from_index(const Scenario& sc, std::uint64_t index)
{
    if (index >= sc.event_count())
        throw InvalidEvent("event index out of range");
    const int n = sc.parties();
    const std::uint64_t d = sc.outcomes();
    const std::uint64_t base = std::uint64_t(sc.settings()) * d;
    Event e;
    e.outcomes.resize(n);
    e.settings.resize(n);
    for (int i = n - 1; i >= 0; --i) {
        const std::uint64_t digit = index % base;
        index /= base;
        e.settings[i] = std::uint8_t(digit / d);
        e.outcomes[i] = std::uint8_t(digit % d);
    }
    return e;
}

std::string event_to_string(const Event& e)
{
    std::string out;
    out.reserve(e.outcomes.size() + e.settings.size() + 1);
    for (auto a : e.outcomes) {
        if (a > 9)
            throw InvalidEvent("digit rendering requires d <= 10");
        out.push_back(char('0' + a));
    }
    out.push_back('|');
    for (auto x : e.settings) {
        if (x > 9)
            throw InvalidEvent("digit rendering requires m <= 10");
        out.push_back(char('0' + x));
    }
    return out;
}

Event parse_event(const Scenario& sc, std::string_view text)
{
    const auto n = std::size_t(sc.parties());
    const auto bar = text.find('|');
    if (bar == std::string_view::npos || bar != n || text.size() != 2 * n + 1)
        throw ParseError("event must be \"" + std::string(n, 'a') + "|" + std::string(n, 'x') +
                         "\": " + std::string(text));
    Event e;
    e.outcomes.resize(n);
    e.settings.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const char a = text[i];
        const char x = text[bar + 1 + i];
        if (a < '0' || a > '9' || x < '0' || x > '9')
            throw ParseError("event digits must be 0-9: " + std::string(text));
        e.outcomes[i] = std::uint8_t(a - '0');
        e.settings[i] = std::uint8_t(x - '0');
    }
    validate_event(sc, e);
    return e;
}

} // namespace lo
