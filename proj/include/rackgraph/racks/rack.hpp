#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "rackgraph/racks/group.hpp"

namespace rackgraph::racks {

/// Finite rack by its operation table: op(x, y) = x ◁ y (written x^y).
class FiniteRack {
public:
    explicit FiniteRack(const Table& op) : n_(op.size())
    {
        op_.resize(n_ * n_);
        for (std::size_t x = 0; x < n_; ++x) {
            if (op[x].size() != n_) throw Error(rackgraph::detail::cat("rack table row ", x, " has wrong length"));
            for (std::size_t y = 0; y < n_; ++y) {
                if (op[x][y] >= n_) throw Error(rackgraph::detail::cat("rack entry (", x, ",", y, ") out of range"));
                op_[x * n_ + y] = op[x][y];
            }
        }
    }

    std::size_t size() const { return n_; }
    Index op(Index x, Index y) const { return op_[x * n_ + y]; }

    Table table() const
    {
        Table t(n_, std::vector<Index>(n_));
        for (std::size_t x = 0; x < n_; ++x)
            for (std::size_t y = 0; y < n_; ++y) t[x][y] = op(x, y);
        return t;
    }

    /// The right translation x ↦ x ◁ y.
    Perm translation(Index y) const
    {
        Perm p(n_);
        for (std::size_t x = 0; x < n_; ++x) p[x] = op(x, y);
        return p;
    }

    friend bool operator==(const FiniteRack& a, const FiniteRack& b) { return a.op_ == b.op_; }
    friend bool operator!=(const FiniteRack& a, const FiniteRack& b) { return !(a == b); }

private:
    std::size_t n_;
    std::vector<Index> op_;
};

/// Self-distributivity on every triple and bijectivity of every right
/// translation; every violation is listed.
inline ValidationReport validate_rack(const FiniteRack& r)
{
    ValidationReport rep;
    const std::size_t n = r.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (r.op(r.op(x, y), z) != r.op(r.op(x, z), r.op(y, z)))
                    rep.add("self_distributivity", rackgraph::detail::cat("(", x, ",", y, ",", z, ")"));
    for (std::size_t y = 0; y < n; ++y) {
        std::vector<bool> hit(n, false);
        for (std::size_t x = 0; x < n; ++x) hit[r.op(x, y)] = true;
        if (std::find(hit.begin(), hit.end(), false) != hit.end())
            rep.add("translation_bijective", rackgraph::detail::cat("column ", y));
    }
    return rep;
}

/// G-set X with an equivariant augmentation π: X → G, G acting on itself
/// by conjugation. The action is a right action: act(act(x,g),h) = act(x,gh).
class AugmentedRack {
public:
    AugmentedRack(FiniteGroup group, const Table& action, std::vector<Index> pi)
        : group_(std::move(group)), n_(action.size()), pi_(std::move(pi))
    {
        const std::size_t order = group_.order();
        if (pi_.size() != n_) throw Error("augmentation has wrong length");
        act_.resize(n_ * order);
        for (std::size_t x = 0; x < n_; ++x) {
            if (action[x].size() != order)
                throw Error(rackgraph::detail::cat("action row ", x, " has wrong length"));
            for (std::size_t g = 0; g < order; ++g) {
                if (action[x][g] >= n_) throw Error(rackgraph::detail::cat("action entry (", x, ",", g, ") out of range"));
                act_[x * order + g] = action[x][g];
            }
            if (pi_[x] >= order) throw Error(rackgraph::detail::cat("augmentation of ", x, " out of range"));
        }
    }

    const FiniteGroup& group() const { return group_; }
    std::size_t size() const { return n_; }
    Index act(Index x, Index g) const { return act_[x * group_.order() + g]; }
    Index pi(Index x) const { return pi_[x]; }
    const std::vector<Index>& pi_map() const { return pi_; }

    Table action_table() const
    {
        Table t(n_, std::vector<Index>(group_.order()));
        for (std::size_t x = 0; x < n_; ++x)
            for (std::size_t g = 0; g < group_.order(); ++g) t[x][g] = act(x, g);
        return t;
    }

    /// The induced rack x ◁ y = x^π(y).
    FiniteRack derived_rack() const
    {
        Table op(n_, std::vector<Index>(n_));
        for (std::size_t x = 0; x < n_; ++x)
            for (std::size_t y = 0; y < n_; ++y) op[x][y] = act(x, pi(y));
        return FiniteRack(op);
    }

    friend bool operator==(const AugmentedRack& a, const AugmentedRack& b)
    {
        return a.group_ == b.group_ && a.act_ == b.act_ && a.pi_ == b.pi_;
    }
    friend bool operator!=(const AugmentedRack& a, const AugmentedRack& b) { return !(a == b); }

private:
    FiniteGroup group_;
    std::size_t n_;
    std::vector<Index> act_;
    std::vector<Index> pi_;
};

/// Unit and composition laws of the action together with equivariance
/// π(x^g) = g⁻¹π(x)g, all checked exhaustively.
inline ValidationReport validate_augmented(const AugmentedRack& a)
{
    ValidationReport rep;
    const auto& G = a.group();
    for (std::size_t x = 0; x < a.size(); ++x) {
        if (a.act(x, G.identity()) != x) rep.add("action_unit", rackgraph::detail::cat(x));
        for (std::size_t g = 0; g < G.order(); ++g) {
            for (std::size_t h = 0; h < G.order(); ++h)
                if (a.act(a.act(x, g), h) != a.act(x, G.mul(g, h)))
                    rep.add("action_composition", rackgraph::detail::cat("(", x, ",", g, ",", h, ")"));
            if (a.pi(a.act(x, g)) != G.conj(a.pi(x), g))
                rep.add("equivariance", rackgraph::detail::cat("(", x, ",", g, ")"));
        }
    }
    return rep;
}

// Constructors.

/// X = G, π = id, x^g = g⁻¹xg.
inline AugmentedRack conjugation_rack(const FiniteGroup& g)
{
    Table action(g.order(), std::vector<Index>(g.order()));
    std::vector<Index> pi(g.order());
    for (std::size_t x = 0; x < g.order(); ++x) {
        pi[x] = x;
        for (std::size_t h = 0; h < g.order(); ++h) action[x][h] = g.conj(x, h);
    }
    return AugmentedRack(g, action, pi);
}

/// The augmented rack of the path graph G×G; the same data as the
/// conjugation rack.
inline AugmentedRack identity_augmentation(const FiniteGroup& g) { return conjugation_rack(g); }

/// Union of the conjugacy classes of the seeds, acted on by conjugation,
/// π the inclusion. Elements are listed in increasing group index.
inline AugmentedRack conjugacy_class_rack(const FiniteGroup& g, const std::vector<Index>& seeds)
{
    std::vector<Index> elems;
    for (auto s : seeds) {
        if (s >= g.order()) throw Error("seed out of range");
        auto cls = g.conjugacy_class(s);
        elems.insert(elems.end(), cls.begin(), cls.end());
    }
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    std::vector<Index> pos(g.order(), g.order());
    for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = i;
    Table action(elems.size(), std::vector<Index>(g.order()));
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t h = 0; h < g.order(); ++h) action[i][h] = pos[g.conj(elems[i], h)];
    return AugmentedRack(g, action, elems);
}

/// x ◁ y = x on k points.
inline FiniteRack trivial_rack(std::size_t k)
{
    Table op(k, std::vector<Index>(k));
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y) op[x][y] = x;
    return FiniteRack(op);
}

/// x ◁ y = 2y − x mod n.
inline FiniteRack dihedral_quandle(std::size_t n)
{
    if (n == 0) throw Error("dihedral quandle of size 0");
    Table op(n, std::vector<Index>(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) op[x][y] = (2 * y + n - x % n) % n;
    return FiniteRack(op);
}

/// k points over the trivial group.
inline AugmentedRack trivial_augmented(std::size_t k)
{
    Table action(k, std::vector<Index>(1));
    for (std::size_t x = 0; x < k; ++x) action[x][0] = x;
    return AugmentedRack(cyclic_group(1), action, std::vector<Index>(k, 0));
}

// Orbits.

enum class OrbitMode { group_action, inner };

/// Partition of X into orbits, each sorted, ordered by smallest element.
/// group_action uses all of G; inner uses only the translations by π(y).
inline std::vector<std::vector<Index>> orbits(const AugmentedRack& a, OrbitMode mode)
{
    const std::size_t n = a.size();
    std::vector<Index> parent(n);
    std::iota(parent.begin(), parent.end(), Index{0});
    auto find = [&](Index x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](Index x, Index y) {
        x = find(x);
        y = find(y);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
    };
    for (std::size_t x = 0; x < n; ++x) {
        if (mode == OrbitMode::group_action) {
            for (std::size_t g = 0; g < a.group().order(); ++g) unite(x, a.act(x, g));
        } else {
            for (std::size_t y = 0; y < n; ++y) unite(x, a.act(x, a.pi(y)));
        }
    }
    std::vector<std::vector<Index>> out;
    std::vector<std::size_t> slot(n, n);
    for (std::size_t x = 0; x < n; ++x) {
        const Index r = find(x);
        if (slot[r] == n) {
            slot[r] = out.size();
            out.emplace_back();
        }
        out[slot[r]].push_back(x);
    }
    return out;
}

/// Orbits of a bare rack under its right translations.
inline std::vector<std::vector<Index>> inner_orbits(const FiniteRack& r)
{
    const std::size_t n = r.size();
    std::vector<Index> parent(n);
    std::iota(parent.begin(), parent.end(), Index{0});
    auto find = [&](Index x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            Index u = find(x), v = find(r.op(x, y));
            if (u != v) parent[std::max(u, v)] = std::min(u, v);
        }
    std::vector<std::vector<Index>> out;
    std::vector<std::size_t> slot(n, n);
    for (std::size_t x = 0; x < n; ++x) {
        const Index root = find(x);
        if (slot[root] == n) {
            slot[root] = out.size();
            out.emplace_back();
        }
        out[slot[root]].push_back(x);
    }
    return out;
}

/// Inn(X) ≤ Sym(X) generated by the right translations, as a Cayley table,
/// together with the augmented rack X → Inn(X), y ↦ translation by y.
struct InnerGroup {
    FiniteGroup group;
    std::vector<Perm> elements;
    AugmentedRack augmented;
};

inline InnerGroup inner_group(const FiniteRack& r, std::size_t bound = 5000)
{
    std::vector<Perm> gens;
    for (std::size_t y = 0; y < r.size(); ++y) gens.push_back(r.translation(y));
    auto pg = close_permutations(r.size(), gens, bound);
    Table action(r.size(), std::vector<Index>(pg.group.order()));
    for (std::size_t x = 0; x < r.size(); ++x)
        for (std::size_t g = 0; g < pg.group.order(); ++g) action[x][g] = pg.elements[g][x];
    AugmentedRack aug(pg.group, action, pg.generator_index);
    return {pg.group, std::move(pg.elements), std::move(aug)};
}

/// Whether π(X) ⊂ G is closed under inversion. π must be injective.
inline bool is_inverse_closed(const AugmentedRack& a)
{
    const auto& G = a.group();
    std::vector<bool> in(G.order(), false);
    for (std::size_t x = 0; x < a.size(); ++x) {
        if (in[a.pi(x)]) throw Error(rackgraph::detail::cat("augmentation is not injective at element ", x));
        in[a.pi(x)] = true;
    }
    for (std::size_t x = 0; x < a.size(); ++x)
        if (!in[G.inv(a.pi(x))]) return false;
    return true;
}

}  // namespace rackgraph::racks
