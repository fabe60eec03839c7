#include "lo/ns_reduce.hpp"

#include "lo/nspolytope.hpp"

#include <algorithm>
#include <utility>

namespace lo {

NsReducer::NsReducer(const Scenario& sc) : scenario_(sc)
{
    const ExactLP system = ns_constraint_system(sc);
    const std::size_t vars = system.variable_count;
    columns_ = vars + 1;

    // homogenized rows (coefficients, -rhs)
    std::vector<std::vector<Rational>> work;
    work.reserve(system.equalities.size());
    for (const auto& [coeffs, rhs] : system.equalities) {
        std::vector<Rational> row(columns_);
        for (std::size_t j = 0; j < vars; ++j)
            row[j] = coeffs[j];
        row[vars] = -rhs;
        work.push_back(std::move(row));
    }

    // Gauss-Jordan to reduced row echelon form, leftmost pivots
    row_of_pivot_.assign(columns_, -1);
    std::size_t next_row = 0;
    for (std::uint32_t col = 0; col < columns_ && next_row < work.size(); ++col) {
        std::size_t src = next_row;
        while (src < work.size() && work[src][col] == 0)
            ++src;
        if (src == work.size())
            continue;
        std::swap(work[next_row], work[src]);
        auto& prow = work[next_row];
        if (prow[col] != 1) {
            const Rational inv = Rational(1) / prow[col];
            for (auto& v : prow)
                if (v != 0)
                    v *= inv;
        }
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (i == next_row || work[i][col] == 0)
                continue;
            const Rational factor = work[i][col];
            for (std::size_t j = col; j < columns_; ++j)
                if (prow[j] != 0)
                    work[i][j] -= factor * prow[j];
            work[i][col] = 0;
        }
        row_of_pivot_[col] = std::int32_t(next_row);
        ++next_row;
    }

    rows_.reserve(next_row);
    for (std::uint32_t col = 0; col < columns_; ++col) {
        if (row_of_pivot_[col] < 0) {
            free_cols_.push_back(col);
            continue;
        }
        const auto& dense = work[std::size_t(row_of_pivot_[col])];
        Row row;
        row.pivot = col;
        for (std::uint32_t j = 0; j < columns_; ++j)
            if (j != col && dense[j] != 0)
                row.tail.emplace_back(j, dense[j]);
        row_of_pivot_[col] = std::int32_t(rows_.size());
        rows_.push_back(std::move(row));
    }

    free_pos_.assign(columns_, -1);
    for (std::size_t p = 0; p < free_cols_.size(); ++p)
        free_pos_[free_cols_[p]] = std::int32_t(p);
    for (auto& row : rows_) {
        row.dense_tail.assign(free_cols_.size(), Rational(0));
        for (const auto& [col, val] : row.tail)
            row.dense_tail[std::size_t(free_pos_[col])] = val;
    }

    // the -1 coefficient of the constant coordinate, pre-reduced
    constant_term_.assign(free_cols_.size(), Rational(0));
    const std::uint32_t bound_col = std::uint32_t(columns_ - 1);
    if (row_of_pivot_[bound_col] >= 0) {
        const auto& row = rows_[std::size_t(row_of_pivot_[bound_col])];
        for (std::size_t p = 0; p < constant_term_.size(); ++p)
            constant_term_[p] = row.dense_tail[p];
    } else {
        constant_term_[std::size_t(free_pos_[bound_col])] = -1;
    }
}

bool NsReducer::min_reduced_into(std::span<const std::uint32_t> events,
                                 std::vector<Rational>& best) const
{
    // split the support into pivot rows and free positions
    thread_local std::vector<std::uint32_t> rows;
    thread_local std::vector<std::uint32_t> positions;
    rows.clear();
    positions.clear();
    for (const auto e : events) {
        if (row_of_pivot_[e] >= 0)
            rows.push_back(std::uint32_t(row_of_pivot_[e]));
        else
            positions.push_back(std::uint32_t(free_pos_[e]));
    }
    std::sort(positions.begin(), positions.end());

    const std::size_t free_count = free_cols_.size();
    bool fill = best.empty();
    if (fill)
        best.assign(free_count, Rational(0));

    Rational val;
    std::size_t pos_at = 0;
    for (std::size_t j = 0; j < free_count; ++j) {
        val = constant_term_[j];
        for (const auto r : rows)
            val -= rows_[r].dense_tail[j];
        while (pos_at < positions.size() && positions[pos_at] == j) {
            val += 1;
            ++pos_at;
        }
        if (!fill) {
            if (val > best[j])
                return false;
            if (val < best[j])
                fill = true; // strictly smaller: take over from here
        }
        if (fill)
            best[j] = val;
    }
    return fill;
}

std::vector<Rational> NsReducer::reduce_events(std::span<const std::uint32_t> events,
                                               Scratch& scratch) const
{
    auto& dense = scratch.dense;
    auto& touched = scratch.touched;
    if (dense.size() != columns_)
        dense.assign(columns_, Rational(0));

    const auto touch = [&](std::uint32_t col) {
        if (dense[col] == 0)
            touched.push_back(col);
    };

    for (const auto e : events) {
        touch(e);
        dense[e] += 1;
    }
    touch(std::uint32_t(columns_ - 1));
    dense[columns_ - 1] -= 1;

    // pivot hits are confined to the initial support: eliminating a pivot
    // adds mass to free columns only
    std::size_t support_end = touched.size();
    std::vector<std::uint32_t> hits;
    for (std::size_t k = 0; k < support_end; ++k)
        if (row_of_pivot_[touched[k]] >= 0 && dense[touched[k]] != 0)
            hits.push_back(touched[k]);
    std::sort(hits.begin(), hits.end());
    for (const auto col : hits) {
        const Row& row = rows_[std::size_t(row_of_pivot_[col])];
        const Rational factor = dense[col];
        dense[col] = 0;
        for (const auto& [j, val] : row.tail) {
            touch(j);
            dense[j] -= factor * val;
        }
    }

    std::vector<Rational> out;
    out.reserve(free_cols_.size());
    for (const auto col : free_cols_)
        out.push_back(dense[col]);

    for (const auto col : touched)
        dense[col] = 0;
    touched.clear();
    return out;
}

} // namespace lo
