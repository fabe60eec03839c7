#include "lo/nspolytope.hpp"

#include <utility>

namespace lo {

namespace {

// Dense two-phase primal simplex over exact rationals.
//
// Column layout: [0, n) original variables, [n, n+m) artificials, column
// n+m the right-hand side. z_[j] holds the reduced cost of column j and
// z_[rhs] holds minus the objective value. Bland's rule (lowest eligible
// column index, then lowest basic variable index) protects against cycling.
class Simplex {
public:
    explicit Simplex(const ExactLP& lp)
        : n_(lp.variable_count), m_(lp.equalities.size()), rhs_(n_ + m_),
          rows_(m_, std::vector<Rational>(n_ + m_ + 1)), basis_(m_), active_(m_, true),
          in_basis_(n_ + m_, false)
    {
        for (std::size_t i = 0; i < m_; ++i) {
            const auto& [coeffs, rhs] = lp.equalities[i];
            if (coeffs.size() != n_)
                throw InvalidParameter("constraint row length != variable count");
            const bool flip = rhs < 0;
            for (std::size_t j = 0; j < n_; ++j)
                rows_[i][j] = flip ? -coeffs[j] : coeffs[j];
            rows_[i][rhs_] = flip ? -rhs : rhs;
            rows_[i][n_ + i] = 1;
            basis_[i] = n_ + i;
            in_basis_[n_ + i] = true;
        }
    }

    LPResult solve(const std::vector<Rational>& objective)
    {
        phase_one();
        phase_two(objective);

        LPResult result;
        result.solution.assign(n_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i)
            if (active_[i] && basis_[i] < n_)
                result.solution[basis_[i]] = rows_[i][rhs_];
        result.value = 0;
        for (std::size_t j = 0; j < n_; ++j)
            if (objective[j] != 0 && result.solution[j] != 0)
                result.value += objective[j] * result.solution[j];
        return result;
    }

private:
    void pivot(std::size_t r, std::size_t s)
    {
        auto& prow = rows_[r];
        const Rational inv = Rational(1) / prow[s];
        if (inv != 1)
            for (auto& v : prow)
                if (v != 0)
                    v *= inv;
        prow[s] = 1;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r || !active_[i] || rows_[i][s] == 0)
                continue;
            const Rational factor = rows_[i][s];
            auto& row = rows_[i];
            for (std::size_t j = 0; j <= rhs_; ++j)
                if (prow[j] != 0)
                    row[j] -= factor * prow[j];
            row[s] = 0;
        }
        if (z_[s] != 0) {
            const Rational factor = z_[s];
            for (std::size_t j = 0; j <= rhs_; ++j)
                if (prow[j] != 0)
                    z_[j] -= factor * prow[j];
            z_[s] = 0;
        }
        in_basis_[basis_[r]] = false;
        in_basis_[s] = true;
        basis_[r] = s;
    }

    // Bland: entering = lowest-index eligible column with positive reduced
    // cost; leaving = lowest basic variable among minimum-ratio rows.
    // Returns false at optimality, throws Unbounded when a column escapes.
    bool step(std::size_t eligible_columns)
    {
        std::size_t entering = rhs_;
        for (std::size_t j = 0; j < eligible_columns; ++j)
            if (!in_basis_[j] && z_[j] > 0) {
                entering = j;
                break;
            }
        if (entering == rhs_)
            return false;

        std::size_t leaving = m_;
        for (std::size_t i = 0; i < m_; ++i) {
            if (!active_[i] || rows_[i][entering] <= 0)
                continue;
            if (leaving == m_) {
                leaving = i;
                continue;
            }
            const Rational lhs = rows_[i][rhs_] * rows_[leaving][entering];
            const Rational rhs = rows_[leaving][rhs_] * rows_[i][entering];
            if (lhs < rhs || (lhs == rhs && basis_[i] < basis_[leaving]))
                leaving = i;
        }
        if (leaving == m_)
            throw Unbounded("objective is unbounded above");
        pivot(leaving, entering);
        return true;
    }

    void phase_one()
    {
        z_.assign(rhs_ + 1, Rational(0));
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < n_; ++j)
                if (rows_[i][j] != 0)
                    z_[j] += rows_[i][j];
            z_[rhs_] += rows_[i][rhs_];
        }
        while (step(rhs_)) {
        }
        if (z_[rhs_] != 0) // objective is -sum(artificials)
            throw Infeasible("equality system has no nonnegative solution");

        // Artificials still basic sit at zero: pivot them onto an original
        // column when possible, otherwise the row is redundant and dropped.
        for (std::size_t i = 0; i < m_; ++i) {
            if (!active_[i] || basis_[i] < n_)
                continue;
            std::size_t col = n_;
            for (std::size_t j = 0; j < n_; ++j)
                if (rows_[i][j] != 0) {
                    col = j;
                    break;
                }
            if (col == n_) {
                active_[i] = false;
                in_basis_[basis_[i]] = false;
            } else {
                pivot(i, col);
            }
        }
    }

    void phase_two(const std::vector<Rational>& objective)
    {
        if (objective.size() != n_)
            throw InvalidParameter("objective length != variable count");
        z_.assign(rhs_ + 1, Rational(0));
        for (std::size_t j = 0; j < n_; ++j)
            z_[j] = objective[j];
        for (std::size_t i = 0; i < m_; ++i) {
            if (!active_[i] || basis_[i] >= n_ || objective[basis_[i]] == 0)
                continue;
            const Rational& c = objective[basis_[i]];
            for (std::size_t j = 0; j <= rhs_; ++j)
                if (rows_[i][j] != 0)
                    z_[j] -= c * rows_[i][j];
        }
        for (std::size_t i = 0; i < m_; ++i)
            if (active_[i])
                z_[basis_[i]] = 0;
        while (step(n_)) { // artificials may not re-enter
        }
    }

    std::size_t n_;
    std::size_t m_;
    std::size_t rhs_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<Rational> z_;
    std::vector<std::size_t> basis_;
    std::vector<bool> active_;
    std::vector<bool> in_basis_;
};

constexpr std::uint64_t kMaxLPVariables = 1024;

} // namespace

LPResult lp_solve_max(const ExactLP& lp)
{
    if (lp.objective.size() != lp.variable_count)
        throw InvalidParameter("objective length != variable count");
    if (lp.equalities.empty())
        throw Unbounded("no constraints");
    return Simplex(lp).solve(lp.objective);
}

ExactLP ns_constraint_system(const Scenario& sc)
{
    if (sc.event_count() > kMaxLPVariables)
        throw CapacityExceeded("no-signaling system too large: " +
                               std::to_string(sc.event_count()) + " variables");
    const auto total = std::size_t(sc.event_count());
    const int n = sc.parties();
    const int m = sc.settings();
    const int d = sc.outcomes();
    const std::uint64_t base = std::uint64_t(m) * d;

    ExactLP lp;
    lp.variable_count = total;
    lp.objective.assign(total, Rational(0));

    // normalization: one row per joint setting
    std::vector<std::vector<Rational>> norm(sc.joint_setting_count(),
                                            std::vector<Rational>(total, Rational(0)));
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::uint64_t block = 0;
        std::uint64_t rest = idx;
        std::uint64_t shift = 1;
        for (int i = n - 1; i >= 0; --i) {
            block += (rest % base) / std::uint64_t(d) * shift;
            rest /= base;
            shift *= std::uint64_t(m);
        }
        norm[block][idx] = 1;
    }
    for (auto& row : norm)
        lp.equalities.emplace_back(std::move(row), Rational(1));

    // single-party no-signaling rows
    std::uint64_t place = 1;
    for (int i = n - 1; i >= 0; --i) {
        const std::uint64_t lo_count = place;
        const std::uint64_t hi_count = sc.event_count() / (place * base);
        for (int s = 0; s < m; ++s)
            for (int t = s + 1; t < m; ++t)
                for (std::uint64_t hi = 0; hi < hi_count; ++hi)
                    for (std::uint64_t lo = 0; lo < lo_count; ++lo) {
                        std::vector<Rational> row(total, Rational(0));
                        const std::uint64_t context = hi * place * base + lo;
                        for (int a = 0; a < d; ++a) {
                            row[context + (std::uint64_t(s) * d + a) * place] = 1;
                            row[context + (std::uint64_t(t) * d + a) * place] = -1;
                        }
                        lp.equalities.emplace_back(std::move(row), Rational(0));
                    }
        place *= base;
    }
    return lp;
}

Rational ns_max(const LOInequality& ineq)
{
    return ns_maximize(ineq).first;
}

std::pair<Rational, Behavior> ns_maximize(const LOInequality& ineq)
{
    ExactLP lp = ns_constraint_system(ineq.scenario());
    for (const auto idx : ineq.event_indices())
        lp.objective[idx] = 1;
    LPResult result = lp_solve_max(lp);
    Behavior witness(ineq.scenario(), std::move(result.solution));
    return {std::move(result.value), std::move(witness)};
}

} // namespace lo
