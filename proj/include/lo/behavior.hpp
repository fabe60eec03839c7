#pragma once

#include "lo/rational.hpp"
#include "lo/scenario.hpp"

#include <iosfwd>
#include <vector>

namespace lo {

// A conditional distribution P(a_1...a_n | x_1...x_n) with exact rational
// entries, stored densely over the full event index space. Construction
// validates nonnegativity and exact normalization of every setting block.
class Behavior {
public:
    Behavior(Scenario scenario, std::vector<Rational> table);

    const Scenario& scenario() const { return scenario_; }
    const std::vector<Rational>& table() const { return table_; }

    const Rational& at(std::uint64_t index) const { return table_[index]; }
    const Rational& at(const Event& e) const;

    bool operator==(const Behavior&) const = default;

private:
    Scenario scenario_;
    std::vector<Rational> table_;
};

Behavior uniform_box(const Scenario& sc); // every entry 1/d^n

// True iff every party's marginal on the rest is independent of that
// party's setting. Single-party conditions suffice: independence from any
// subset of settings follows by composing one-party changes.
bool is_no_signaling(const Behavior& b);

// JSON form {"n":..,"m":..,"d":..,"P":{"a...|x...":"p/q",...}};
// missing events default to 0, values are rational strings or integers.
Behavior behavior_from_json_stream(std::istream& in);
Behavior load_behavior(const std::string& path);
void behavior_to_json_stream(const Behavior& b, std::ostream& out);
void save_behavior(const Behavior& b, const std::string& path);

} // namespace lo
