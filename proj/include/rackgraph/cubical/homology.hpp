#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "rackgraph/cubical/complex.hpp"
#include "rackgraph/exactla/echelon.hpp"
#include "rackgraph/exactla/smith.hpp"

namespace rackgraph::cubical {

using exactla::BigInt;

struct HomologyGroup {
    std::size_t betti = 0;
    std::vector<BigInt> torsion;  // invariant factors > 1, each dividing the next
};

struct HomologyResult {
    std::vector<HomologyGroup> degrees;  // H₀ … H_{N-1}
};

namespace detail {

/// Smith form of a sparse integer matrix. Unit pivots are eliminated
/// sparsely first (row and column operations with a ±1 pivot do not change
/// the invariant factors of the remaining block); what is left goes to the
/// dense Smith reduction.
inline exactla::SmithResult sparse_smith(std::size_t rows, const std::vector<SparseColumn>& cols_in)
{
    using Col = std::map<std::size_t, std::int64_t>;
    std::vector<Col> cols(cols_in.size());
    std::vector<std::set<std::size_t>> row_cols(rows);
    for (std::size_t j = 0; j < cols_in.size(); ++j)
        for (const auto& [i, v] : cols_in[j]) {
            cols[j][i] = v;
            row_cols[i].insert(j);
        }
    std::vector<bool> col_alive(cols.size(), true), row_alive(rows, true);
    std::size_t unit_pivots = 0;
    bool overflowed = false;
    auto checked_fma = [&](std::int64_t a, std::int64_t b, std::int64_t c) {
        std::int64_t p, s;
        if (__builtin_mul_overflow(b, c, &p) || __builtin_sub_overflow(a, p, &s)) overflowed = true;
        return s;
    };
    bool progress = true;
    while (progress && !overflowed) {
        progress = false;
        for (std::size_t j = 0; j < cols.size() && !overflowed; ++j) {
            if (!col_alive[j]) continue;
            // unit entry in this column with the sparsest row
            std::size_t best = rows;
            for (const auto& [i, v] : cols[j])
                if ((v == 1 || v == -1) && (best == rows || row_cols[i].size() < row_cols[best].size())) best = i;
            if (best == rows) continue;
            const std::int64_t u = cols[j][best];
            const std::vector<std::size_t> others(row_cols[best].begin(), row_cols[best].end());
            for (auto k : others) {
                if (k == j) continue;
                const std::int64_t f = cols[k][best] * u;  // col_k -= f·col_j clears (best, k)
                for (const auto& [i, v] : cols[j]) {
                    auto it = cols[k].find(i);
                    const std::int64_t cur = it == cols[k].end() ? 0 : it->second;
                    const std::int64_t nv = checked_fma(cur, f, v);
                    if (nv == 0) {
                        if (it != cols[k].end()) cols[k].erase(it);
                        row_cols[i].erase(k);
                    } else {
                        cols[k][i] = nv;
                        row_cols[i].insert(k);
                    }
                }
            }
            // row `best` now only meets column j; drop both
            for (const auto& [i, v] : cols[j]) row_cols[i].erase(j);
            cols[j].clear();
            col_alive[j] = false;
            row_alive[best] = false;
            ++unit_pivots;
            progress = true;
        }
    }
    if (overflowed) {
        exactla::Matrix<BigInt> m(rows, cols_in.size(), BigInt(0));
        for (std::size_t j = 0; j < cols_in.size(); ++j)
            for (const auto& [i, v] : cols_in[j]) m(i, j) = v;
        return exactla::smith_normal_form(m);
    }
    std::vector<std::size_t> live_rows, live_cols;
    std::vector<std::size_t> row_pos(rows, rows);
    for (std::size_t i = 0; i < rows; ++i)
        if (row_alive[i] && !row_cols[i].empty()) {
            row_pos[i] = live_rows.size();
            live_rows.push_back(i);
        }
    for (std::size_t j = 0; j < cols.size(); ++j)
        if (col_alive[j] && !cols[j].empty()) live_cols.push_back(j);
    auto rest = exactla::smith_normal_form_from([&](auto zero) {
        using Int = decltype(zero);
        exactla::Matrix<Int> m(live_rows.size(), live_cols.size(), zero);
        for (std::size_t c = 0; c < live_cols.size(); ++c)
            for (const auto& [i, v] : cols[live_cols[c]]) m(row_pos[i], c) = Int(v);
        return m;
    });
    exactla::SmithResult out;
    out.rank = unit_pivots + rest.rank;
    out.divisors.assign(unit_pivots, BigInt(1));
    out.divisors.insert(out.divisors.end(), rest.divisors.begin(), rest.divisors.end());
    return out;
}

}  // namespace detail

/// Integral homology in degrees 0 … N−1.
inline HomologyResult homology(const ChainComplex& c)
{
    std::vector<exactla::SmithResult> snf(c.max_degree + 1);
    for (std::size_t n = 1; n <= c.max_degree; ++n) snf[n] = detail::sparse_smith(c.ranks[n - 1], c.boundaries[n]);
    HomologyResult h;
    for (std::size_t n = 0; n < c.max_degree; ++n) {
        const std::size_t rank_out = n == 0 ? 0 : snf[n].rank;
        HomologyGroup g;
        g.betti = c.ranks[n] - rank_out - snf[n + 1].rank;
        g.torsion = snf[n + 1].torsion();
        h.degrees.push_back(std::move(g));
    }
    return h;
}

/// Betti numbers over ℚ from ranks of the boundary maps, by sparse
/// elimination over the rationals.
inline std::vector<std::size_t> rational_betti(const ChainComplex& c)
{
    std::vector<std::size_t> rk(c.max_degree + 2, 0);
    const exactla::RationalField q;
    for (std::size_t n = 1; n <= c.max_degree; ++n) {
        exactla::SparseEliminator<exactla::RationalField> el(q);
        for (const auto& col : c.boundaries[n]) {
            exactla::SparseEliminator<exactla::RationalField>::Row row;
            for (const auto& [i, v] : col) row.emplace_back(i, exactla::Rational(v));
            el.add(std::move(row));
        }
        rk[n] = el.rank();
    }
    std::vector<std::size_t> out;
    for (std::size_t n = 0; n < c.max_degree; ++n) out.push_back(c.ranks[n] - rk[n] - rk[n + 1]);
    return out;
}

}  // namespace rackgraph::cubical
