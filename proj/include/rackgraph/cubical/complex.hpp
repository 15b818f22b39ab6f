#pragma once

// Cubical chain complexes of the rack space BQ and of its G-cover EQ.
//
// Bases: Cₙ(BQ) has basis Xⁿ in lexicographic order (index Σ xᵢ|X|^(n-i));
// Cₙ(EQ) has basis G×Xⁿ with index g·|X|ⁿ + lex(x). The boundary is
// ∂ = Σᵢ₌₁ⁿ (−1)ⁱ (dᵢ⁰ − dᵢ¹), where dᵢ⁰/dᵢ¹ are the source/target faces.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "rackgraph/cubical/cubes.hpp"

namespace rackgraph::cubical {

/// Sparse integer column: (row, coefficient) pairs sorted by row, no zeros.
using SparseColumn = std::vector<std::pair<std::size_t, std::int64_t>>;

struct ChainComplex {
    std::size_t max_degree = 0;
    std::vector<std::size_t> ranks;                     // ranks[n] = rank Cₙ, n = 0..N
    std::vector<std::vector<SparseColumn>> boundaries;  // boundaries[n] = ∂ₙ: Cₙ → Cₙ₋₁; [0] empty

    /// Dense copy of ∂ₙ (rank Cₙ₋₁ × rank Cₙ); ∂₀ is 0 × rank C₀.
    std::vector<std::vector<std::int64_t>> dense(std::size_t n) const
    {
        const std::size_t rows = n == 0 ? 0 : ranks[n - 1];
        std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(ranks[n], 0));
        if (n == 0) return m;
        for (std::size_t j = 0; j < ranks[n]; ++j)
            for (const auto& [i, v] : boundaries[n][j]) m[i][j] = v;
        return m;
    }

    bool all_boundaries_zero() const
    {
        for (const auto& b : boundaries)
            for (const auto& col : b)
                if (!col.empty()) return false;
        return true;
    }
};

struct ComplexLimits {
    std::size_t max_cells = 1000000;  // per chain group
};

namespace detail {

inline void accumulate(std::map<std::size_t, std::int64_t>& acc, std::size_t row, std::int64_t v)
{
    auto& e = acc[row];
    e += v;
    if (e == 0) acc.erase(row);
}

inline SparseColumn to_column(const std::map<std::size_t, std::int64_t>& acc)
{
    return {acc.begin(), acc.end()};
}

inline std::vector<std::size_t> powers(std::size_t base, std::size_t n, std::size_t cap)
{
    std::vector<std::size_t> p{1};
    for (std::size_t k = 1; k <= n; ++k) {
        if (base != 0 && p.back() > cap / base)
            throw Error(rackgraph::detail::cat("chain group of degree ", k, " exceeds the cell cap ", cap));
        p.push_back(p.back() * base);
    }
    return p;
}

inline std::vector<Index> decode(std::size_t idx, std::size_t base, std::size_t n)
{
    std::vector<Index> xs(n);
    for (std::size_t k = n; k-- > 0;) {
        xs[k] = idx % base;
        idx /= base;
    }
    return xs;
}

inline std::size_t encode(const std::vector<Index>& xs, std::size_t base)
{
    std::size_t idx = 0;
    for (auto x : xs) idx = idx * base + x;
    return idx;
}

/// Checks ∂ₙ₋₁∂ₙ = 0 column by column.
inline void assert_square_zero(const ChainComplex& c)
{
    for (std::size_t n = 2; n <= c.max_degree; ++n)
        for (std::size_t j = 0; j < c.ranks[n]; ++j) {
            std::map<std::size_t, std::int64_t> acc;
            for (const auto& [i, v] : c.boundaries[n][j])
                for (const auto& [k, w] : c.boundaries[n - 1][i]) accumulate(acc, k, v * w);
            if (!acc.empty())
                throw std::logic_error(rackgraph::detail::cat("boundary does not square to zero in degree ", n,
                                                              " at basis cell ", j));
        }
}

template <class CellOf, class IndexOf>
ChainComplex build(const AugmentedRack& a, std::size_t n_max, const std::vector<std::size_t>& ranks, CellOf cell_of,
                   IndexOf index_of)
{
    ChainComplex c;
    c.max_degree = n_max;
    c.ranks = ranks;
    c.boundaries.resize(n_max + 1);
    for (std::size_t n = 1; n <= n_max; ++n) {
        auto& bd = c.boundaries[n];
        bd.resize(ranks[n]);
        for (std::size_t j = 0; j < ranks[n]; ++j) {
            const ProductCube cube = cell_of(n, j);
            std::map<std::size_t, std::int64_t> acc;
            for (std::size_t i = 1; i <= n; ++i) {
                const std::int64_t sign = i % 2 == 0 ? 1 : -1;
                accumulate(acc, index_of(face(cube, i, FaceSide::source, a)), sign);
                accumulate(acc, index_of(face(cube, i, FaceSide::target, a)), -sign);
            }
            bd[j] = to_column(acc);
        }
    }
    assert_square_zero(c);
    return c;
}

}  // namespace detail

/// Chain complex of the rack space, up to degree N.
inline ChainComplex bq_chain_complex(const AugmentedRack& a, std::size_t n_max, ComplexLimits lim = {})
{
    const std::size_t nx = a.size();
    const auto ranks = detail::powers(nx, n_max, lim.max_cells);
    const Index e = a.group().identity();
    return detail::build(
        a, n_max, ranks,
        [&](std::size_t n, std::size_t j) { return ProductCube{e, detail::decode(j, nx, n)}; },
        [&](const ProductCube& f) { return detail::encode(f.letters, nx); });
}

/// Chain complex of the cover EQ, up to degree N.
inline ChainComplex eq_chain_complex(const AugmentedRack& a, std::size_t n_max, ComplexLimits lim = {})
{
    const std::size_t nx = a.size(), ng = a.group().order();
    auto pw = detail::powers(nx, n_max, lim.max_cells / ng);
    std::vector<std::size_t> ranks;
    for (auto p : pw) ranks.push_back(p * ng);
    return detail::build(
        a, n_max, ranks,
        [&](std::size_t n, std::size_t j) {
            return ProductCube{j / pw[n], detail::decode(j % pw[n], nx, n)};
        },
        [&](const ProductCube& f) { return f.leading * pw[f.dimension()] + detail::encode(f.letters, nx); });
}

/// The quotient of EQ by the free left G-action: cell (g; x) ↦ x.
inline ChainComplex orbit_quotient(const ChainComplex& eq, std::size_t group_order)
{
    ChainComplex q;
    q.max_degree = eq.max_degree;
    for (auto r : eq.ranks) q.ranks.push_back(r / group_order);
    q.boundaries.resize(eq.boundaries.size());
    for (std::size_t n = 1; n <= eq.max_degree; ++n) {
        // columns with leading index 0 represent every orbit
        const std::size_t rank_n = q.ranks[n], rank_prev = q.ranks[n - 1];
        q.boundaries[n].resize(rank_n);
        for (std::size_t j = 0; j < rank_n; ++j) {
            std::map<std::size_t, std::int64_t> acc;
            for (const auto& [i, v] : eq.boundaries[n][j]) detail::accumulate(acc, i % rank_prev, v);
            q.boundaries[n][j] = detail::to_column(acc);
        }
    }
    return q;
}

}  // namespace rackgraph::cubical
