#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <queue>
#include <vector>

#include "rackgraph/error.hpp"

namespace rackgraph::racks {

using Index = std::size_t;
using Table = std::vector<std::vector<Index>>;

/// Checks that `mul` is the Cayley table of a group: square, in range,
/// associative, with a two-sided identity and two-sided inverses.
inline ValidationReport validate_group_table(const Table& mul)
{
    ValidationReport rep;
    const std::size_t n = mul.size();
    if (n == 0) {
        rep.add("nonempty", "order 0");
        return rep;
    }
    for (std::size_t a = 0; a < n; ++a) {
        if (mul[a].size() != n) {
            rep.add("square_table", rackgraph::detail::cat("row ", a));
            return rep;
        }
        for (std::size_t b = 0; b < n; ++b)
            if (mul[a][b] >= n) {
                rep.add("in_range", rackgraph::detail::cat("(", a, ",", b, ")"));
                return rep;
            }
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                    rep.add("associativity", rackgraph::detail::cat("(", a, ",", b, ",", c, ")"));
    std::size_t e = n;
    for (std::size_t a = 0; a < n && e == n; ++a) {
        bool unit = true;
        for (std::size_t b = 0; b < n && unit; ++b) unit = mul[a][b] == b && mul[b][a] == b;
        if (unit) e = a;
    }
    if (e == n) {
        rep.add("identity", "no two-sided unit");
        return rep;
    }
    for (std::size_t a = 0; a < n; ++a) {
        bool has_inv = false;
        for (std::size_t b = 0; b < n && !has_inv; ++b) has_inv = mul[a][b] == e && mul[b][a] == e;
        if (!has_inv) rep.add("inverse", rackgraph::detail::cat(a));
    }
    return rep;
}

/// Finite group given by its Cayley table. Construction validates the
/// group axioms exhaustively.
class FiniteGroup {
public:
    explicit FiniteGroup(const Table& mul) : n_(mul.size())
    {
        const auto rep = validate_group_table(mul);
        if (!rep.ok())
            throw Error("not a group table: " + rep.violations.front().identity + " " +
                        rep.violations.front().witness);
        mul_.resize(n_ * n_);
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b) mul_[a * n_ + b] = mul[a][b];
        for (std::size_t a = 0; a < n_; ++a) {
            bool unit = true;
            for (std::size_t b = 0; b < n_ && unit; ++b) unit = mul_[a * n_ + b] == b;
            if (unit) {
                e_ = a;
                break;
            }
        }
        inv_.resize(n_);
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
                if (mul_[a * n_ + b] == e_) inv_[a] = b;
    }

    std::size_t order() const { return n_; }
    Index identity() const { return e_; }
    Index mul(Index a, Index b) const { return mul_[a * n_ + b]; }
    Index inv(Index a) const { return inv_[a]; }

    /// g⁻¹ x g
    Index conj(Index x, Index g) const { return mul(mul(inv(g), x), g); }

    Index product(const std::vector<Index>& word) const
    {
        Index r = e_;
        for (auto g : word) r = mul(r, g);
        return r;
    }

    Table table() const
    {
        Table t(n_, std::vector<Index>(n_));
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b) t[a][b] = mul(a, b);
        return t;
    }

    std::size_t element_order(Index g) const
    {
        std::size_t k = 1;
        for (Index x = g; x != e_; x = mul(x, g)) ++k;
        return k;
    }

    bool is_abelian() const
    {
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }

    /// Conjugacy class of g, sorted.
    std::vector<Index> conjugacy_class(Index g) const
    {
        std::vector<Index> cls;
        for (std::size_t h = 0; h < n_; ++h) cls.push_back(conj(g, h));
        std::sort(cls.begin(), cls.end());
        cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
        return cls;
    }

    std::vector<std::vector<Index>> conjugacy_classes() const
    {
        std::vector<std::vector<Index>> out;
        std::vector<bool> seen(n_, false);
        for (std::size_t g = 0; g < n_; ++g) {
            if (seen[g]) continue;
            auto cls = conjugacy_class(g);
            for (auto x : cls) seen[x] = true;
            out.push_back(std::move(cls));
        }
        return out;
    }

    /// Subgroup generated by gens, sorted.
    std::vector<Index> generated_subgroup(const std::vector<Index>& gens) const
    {
        std::vector<bool> in(n_, false);
        std::vector<Index> elems{e_};
        in[e_] = true;
        for (std::size_t i = 0; i < elems.size(); ++i)
            for (auto g : gens) {
                Index y = mul(elems[i], g);
                if (!in[y]) {
                    in[y] = true;
                    elems.push_back(y);
                }
            }
        std::sort(elems.begin(), elems.end());
        return elems;
    }

    bool is_normal_subgroup(const std::vector<Index>& h) const
    {
        std::vector<bool> in(n_, false);
        for (auto x : h) in[x] = true;
        for (auto x : h)
            for (std::size_t g = 0; g < n_; ++g)
                if (!in[conj(x, g)]) return false;
        return true;
    }

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.mul_ == b.mul_; }
    friend bool operator!=(const FiniteGroup& a, const FiniteGroup& b) { return !(a == b); }

private:
    std::size_t n_ = 0;
    Index e_ = 0;
    std::vector<Index> mul_;
    std::vector<Index> inv_;
};

/// Permutation of {0,…,n-1} given by its images.
using Perm = std::vector<Index>;

/// Right-action product: x^(pq) = (x^p)^q.
inline Perm compose(const Perm& p, const Perm& q)
{
    Perm r(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) r[x] = q[p[x]];
    return r;
}

/// Closure of a set of permutations under composition. Elements are
/// numbered in breadth-first order from the identity; the identity is 0.
struct PermutationGroup {
    FiniteGroup group;
    std::vector<Perm> elements;
    std::vector<Index> generator_index;  // position of each generator in elements
};

inline PermutationGroup close_permutations(std::size_t degree, const std::vector<Perm>& gens,
                                           std::size_t bound = 100000)
{
    Perm id(degree);
    std::iota(id.begin(), id.end(), Index{0});
    std::vector<Perm> elems{id};
    std::map<Perm, Index> where{{id, 0}};
    for (const auto& g : gens)
        if (g.size() != degree) throw Error("generator has wrong degree");
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const auto& g : gens) {
            Perm y = compose(elems[i], g);
            if (where.count(y)) continue;
            if (elems.size() >= bound)
                throw Error(rackgraph::detail::cat("permutation closure exceeds bound ", bound));
            where.emplace(y, elems.size());
            elems.push_back(std::move(y));
        }
    const std::size_t n = elems.size();
    Table mul(n, std::vector<Index>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) mul[a][b] = where.at(compose(elems[a], elems[b]));
    std::vector<Index> gi;
    for (const auto& g : gens) gi.push_back(where.at(g));
    return {FiniteGroup(mul), std::move(elems), std::move(gi)};
}

// Named groups used throughout the corpus.

inline FiniteGroup cyclic_group(std::size_t n)
{
    if (n == 0) throw Error("cyclic group of order 0");
    Table t(n, std::vector<Index>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return FiniteGroup(t);
}

/// Symmetric group on n points, generated by (0 1) and (0 1 … n-1).
inline PermutationGroup symmetric_group(std::size_t n)
{
    if (n == 0 || n > 6) throw Error("symmetric group degree out of range");
    if (n == 1) return close_permutations(1, {});
    Perm swap(n), cycle(n);
    std::iota(swap.begin(), swap.end(), Index{0});
    std::swap(swap[0], swap[1]);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    return close_permutations(n, {swap, cycle});
}

/// Dihedral group of order 2n; element r^k s^e has index k + n·e.
inline FiniteGroup dihedral_group(std::size_t n)
{
    if (n == 0) throw Error("dihedral group of order 0");
    const std::size_t order = 2 * n;
    Table t(order, std::vector<Index>(order));
    for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = 0; b < order; ++b) {
            const std::size_t ka = a % n, ea = a / n, kb = b % n, eb = b / n;
            // r^ka s^ea r^kb s^eb = r^(ka ± kb) s^(ea+eb)
            const std::size_t k = ea == 0 ? (ka + kb) % n : (ka + n - kb) % n;
            t[a][b] = k + n * ((ea + eb) % 2);
        }
    return FiniteGroup(t);
}

/// Quaternion group Q8. Index 2u + s encodes (−1)^s · unit[u] with
/// unit = (1, i, j, k).
inline FiniteGroup quaternion_group()
{
    // unit products: (u, v) -> (sign, unit)
    static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    Table t(8, std::vector<Index>(8));
    for (std::size_t a = 0; a < 8; ++a)
        for (std::size_t b = 0; b < 8; ++b) {
            const std::size_t ua = a / 2, sa = a % 2, ub = b / 2, sb = b % 2;
            const std::size_t s = (sa + sb + static_cast<std::size_t>(sign[ua][ub])) % 2;
            t[a][b] = 2 * static_cast<std::size_t>(unit[ua][ub]) + s;
        }
    return FiniteGroup(t);
}

}  // namespace rackgraph::racks
