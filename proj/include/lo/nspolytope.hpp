#pragma once

#include "lo/behavior.hpp"
#include "lo/inequality.hpp"
#include "lo/rational.hpp"
#include "lo/scenario.hpp"

#include <utility>
#include <vector>

namespace lo {

// max objective . x  subject to  row . x = rhs for every equality, x >= 0.
// Rows may be redundant; the solver handles rank deficiency.
struct ExactLP {
    std::size_t variable_count = 0;
    std::vector<Rational> objective;
    std::vector<std::pair<std::vector<Rational>, Rational>> equalities;
};

struct LPResult {
    Rational value;
    std::vector<Rational> solution; // a vertex optimizer
};

// Exact two-phase primal simplex on a dense rational tableau, Bland's rule.
LPResult lp_solve_max(const ExactLP& lp); // throws Infeasible / Unbounded

// Normalization equalities (one per joint setting) plus single-party
// no-signaling equalities: for each party, each pair of its settings, and
// each assignment of the other parties' settings and outcomes, the marginal
// over that party's outcome is equal on both settings. Multi-party marginal
// independence follows by composing single-party conditions, so no further
// rows are needed. Objective is zero; variables are the event probabilities.
ExactLP ns_constraint_system(const Scenario& sc);

// Exact maximum of the inequality over the no-signaling polytope.
Rational ns_max(const LOInequality& ineq);

// Same, also returning an optimizing behavior.
std::pair<Rational, Behavior> ns_maximize(const LOInequality& ineq);

} // namespace lo
