#pragma once

#include "lo/errors.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lo {

// A Bell scenario (n,m,d): n parties, each choosing one of m settings and
// obtaining one of d outcomes. All parties share the same m and d.
class Scenario {
public:
    Scenario(int parties, int settings, int outcomes);

    int parties() const { return n_; }
    int settings() const { return m_; }
    int outcomes() const { return d_; }

    // (m*d)^n, guaranteed <= 2^32 by construction.
    std::uint64_t event_count() const { return event_count_; }
    std::uint64_t joint_setting_count() const;
    std::uint64_t joint_outcome_count() const;

    bool operator==(const Scenario&) const = default;

    std::string to_string() const; // "n,m,d"
    static Scenario parse(std::string_view text);

private:
    int n_;
    int m_;
    int d_;
    std::uint64_t event_count_;
};

// A joint event (a_1...a_n | x_1...x_n): outcomes a_i given settings x_i.
struct Event {
    std::vector<std::uint8_t> outcomes;
    std::vector<std::uint8_t> settings;

    bool operator==(const Event&) const = default;
};

// Canonical linear index, party-major with per-party digit s*d + a:
//   index = sum_i (settings[i]*d + outcomes[i]) * (m*d)^(n-1-i)
std::uint64_t event_index(const Scenario& sc, const Event& e);
Event event_from_index(const Scenario& sc, std::uint64_t index);

// Throws InvalidEvent / ScenarioMismatch when e does not fit sc.
void validate_event(const Scenario& sc, const Event& e);

// "a_1...a_n|x_1...x_n" digit strings; requires m, d <= 10.
std::string event_to_string(const Event& e);
Event parse_event(const Scenario& sc, std::string_view text);

} // namespace lo
