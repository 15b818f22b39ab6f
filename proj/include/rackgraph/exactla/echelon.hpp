#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "rackgraph/exactla/matrix.hpp"

namespace rackgraph::exactla {

/// Reduced row echelon form: nonzero rows only, pivot entries 1, pivot
/// columns strictly increasing and cleared in every other row.
template <class F>
struct Rref {
    FieldMatrix<F> rows;            // rank x cols
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

template <class F>
Rref<F> rref(const F& field, FieldMatrix<F> m)
{
    const std::size_t nr = m.rows(), nc = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t sel = nr;
        for (std::size_t i = r; i < nr; ++i)
            if (!field.is_zero(m(i, c))) {
                sel = i;
                break;
            }
        if (sel == nr) continue;
        m.swap_rows(r, sel);
        const auto inv = field.inverse(m(r, c));
        for (std::size_t j = c; j < nc; ++j)
            if (!field.is_zero(m(r, j))) m(r, j) = m(r, j) * inv;
        std::vector<std::size_t> support;
        for (std::size_t j = c; j < nc; ++j)
            if (!field.is_zero(m(r, j))) support.push_back(j);
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r || field.is_zero(m(i, c))) continue;
            const auto factor = m(i, c);
            for (std::size_t j : support) m(i, j) -= factor * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    Rref<F> out{zeros(field, r, nc), std::move(pivots)};
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < nc; ++j) out.rows(i, j) = m(i, j);
    return out;
}

template <class F>
std::size_t rank(const F& field, const FieldMatrix<F>& m)
{
    return rref(field, m).rank();
}

/// Basis of {v : m v = 0} as the columns of the returned matrix.
template <class F>
FieldMatrix<F> kernel(const F& field, const FieldMatrix<F>& m)
{
    const auto red = rref(field, m);
    const std::size_t nc = m.cols();
    std::vector<bool> is_pivot(nc, false);
    for (auto p : red.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < nc; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    auto out = zeros(field, nc, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t fc = free_cols[k];
        out(fc, k) = field.one();
        for (std::size_t i = 0; i < red.rank(); ++i) out(red.pivots[i], k) = -red.rows(i, fc);
    }
    return out;
}

template <class F>
FieldMatrix<F> inverse(const F& field, const FieldMatrix<F>& m)
{
    const std::size_t n = m.rows();
    if (m.cols() != n) throw Error("inverse of a non-square matrix");
    auto aug = zeros(field, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = field.one();
    }
    const auto red = rref(field, aug);
    if (red.rank() < n || (n > 0 && red.pivots[n - 1] != n - 1)) throw Error("singular matrix");
    auto out = zeros(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = red.rows(i, n + j);
    return out;
}

/// Incremental Gaussian elimination on sparse rows. The leading term of a
/// row is its largest column index; pivot rows are kept monic but not
/// back-substituted, so reduction always strictly lowers the leading term.
template <class F>
class SparseEliminator {
public:
    using T = typename F::value_type;
    using Row = std::vector<std::pair<std::size_t, T>>;  // sorted by column, no zeros

    explicit SparseEliminator(F field) : field_(std::move(field)) {}

    /// Adds a row to the span; returns true if it increased the rank.
    bool add(Row row)
    {
        normalize(row);
        reduce_leading(row);
        if (row.empty()) return false;
        const auto inv = field_.inverse(row.back().second);
        for (auto& [c, v] : row) v = v * inv;
        const std::size_t lead = row.back().first;
        pivots_.emplace(lead, std::move(row));
        return true;
    }

    std::size_t rank() const { return pivots_.size(); }
    bool is_pivot(std::size_t col) const { return pivots_.count(col) != 0; }

    /// Remainder of row after reducing every term that hits a pivot.
    Row normal_form(Row row) const
    {
        normalize(row);
        Row done;
        while (!row.empty()) {
            auto [c, v] = row.back();
            auto it = pivots_.find(c);
            if (it == pivots_.end()) {
                done.push_back(row.back());
                row.pop_back();
                continue;
            }
            row = combine(row, it->second, v);
        }
        std::reverse(done.begin(), done.end());
        return done;
    }

    const F& field() const { return field_; }

private:
    void normalize(Row& row) const
    {
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        Row out;
        for (auto& [c, v] : row) {
            if (!out.empty() && out.back().first == c)
                out.back().second += v;
            else
                out.emplace_back(c, v);
        }
        Row nz;
        for (auto& e : out)
            if (!field_.is_zero(e.second)) nz.push_back(std::move(e));
        row = std::move(nz);
    }

    void reduce_leading(Row& row) const
    {
        while (!row.empty()) {
            auto it = pivots_.find(row.back().first);
            if (it == pivots_.end()) return;
            row = combine(row, it->second, row.back().second);
        }
    }

    // row - factor * pivot, both sorted
    Row combine(const Row& row, const Row& pivot, const T& factor) const
    {
        Row out;
        out.reserve(row.size() + pivot.size());
        std::size_t i = 0, j = 0;
        while (i < row.size() || j < pivot.size()) {
            if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
                out.push_back(row[i++]);
            } else if (i == row.size() || pivot[j].first < row[i].first) {
                out.emplace_back(pivot[j].first, -(factor * pivot[j].second));
                ++j;
            } else {
                T v = row[i].second - factor * pivot[j].second;
                if (!field_.is_zero(v)) out.emplace_back(row[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        return out;
    }

    F field_;
    std::map<std::size_t, Row> pivots_;
};

}  // namespace rackgraph::exactla
