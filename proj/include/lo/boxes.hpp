#pragma once

#include "lo/behavior.hpp"
#include "lo/inequality.hpp"
#include "lo/rational.hpp"

#include <functional>
#include <vector>

namespace lo {

// PR(ab|xy) = 1/2 if a xor b = x*y, else 0. The extremal (2,2,2) box.
Behavior pr_box();

// q * PR + (1-q) * uniform, 0 <= q <= 1.
Behavior noisy_pr(const Rational& q);

// Local deterministic box: party i answers strategy[i][x] to setting x.
Behavior deterministic_box(const Scenario& sc,
                           const std::vector<std::vector<std::uint8_t>>& strategy);

// xi * PR + gamma * (all-zeros deterministic) + (1 - xi - gamma) * uniform
// on (2,2,2); requires xi, gamma >= 0 and xi + gamma <= 1.
Behavior pr_local_noise_mixture(const Rational& xi, const Rational& gamma);

// Product box on the concatenated-party scenario; parties are ordered
// factor-major (all of factor 1, then factor 2, ...). Every factor must
// share the same m and d.
Behavior tensor_product(const std::vector<Behavior>& factors);
Behavior tensor_power(const Behavior& b, int copies);

using BehaviorFamily = std::function<Behavior(const Rational& q)>;

BehaviorFamily noisy_pr_family();
BehaviorFamily constant_family(Behavior b);

struct ThresholdInterval {
    Rational lower; // inequality satisfied here
    Rational upper; // inequality violated here
};

// Smallest q in (0,1] where the inequality's value on `copies` tensored
// family members crosses 1, bracketed to the given width by bisection with
// exact evaluation at rational points. Assumes the value is nondecreasing
// in q. Throws NoViolationInRange when there is no crossing.
ThresholdInterval lo_threshold(const BehaviorFamily& family,
                               const LOInequality& ineq,
                               int copies,
                               const Rational& width = Rational(1, 10000));

} // namespace lo
