#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "rackgraph/graphlike/graph.hpp"
#include "rackgraph/racks/rack.hpp"

namespace rackgraph::graphlike {

using racks::AugmentedRack;
using racks::FiniteGroup;
using racks::Table;

/// Graph with a multiplication μ: Q □ Q → Q, i.e. a semigroup on the
/// vertices and two-sided vertex actions on the arrows.
struct MultiplicativeGraph {
    DirectedMultigraph graph;
    Table vertex_mul;  // V × V → V
    Table left_act;    // V × A → A, left_act[g][a] = g·a
    Table right_act;   // A × V → A, right_act[a][g] = a·g
};

/// Group-like graph: the vertex semigroup is a group; the actions are unital.
struct GroupLikeGraph {
    FiniteGroup group;
    std::vector<Arrow> arrows;
    Table left_act;   // order × |A|
    Table right_act;  // |A| × order

    std::size_t arrow_count() const { return arrows.size(); }
    Index s(Index a) const { return arrows[a].s; }
    Index t(Index a) const { return arrows[a].t; }
    Index left(Index g, Index a) const { return left_act[g][a]; }
    Index right(Index a, Index g) const { return right_act[a][g]; }

    DirectedMultigraph graph() const { return {group.order(), arrows}; }
    MultiplicativeGraph as_multiplicative() const { return {graph(), group.table(), left_act, right_act}; }

    friend bool operator==(const GroupLikeGraph& a, const GroupLikeGraph& b)
    {
        return a.group == b.group && a.arrows == b.arrows && a.left_act == b.left_act &&
               a.right_act == b.right_act;
    }
};

namespace detail_mg {

inline bool shape_ok(const MultiplicativeGraph& m, ValidationReport& rep)
{
    const std::size_t nv = m.graph.vertex_count, na = m.graph.arrows.size();
    for (std::size_t a = 0; a < na; ++a)
        if (m.graph.arrows[a].s >= nv || m.graph.arrows[a].t >= nv) {
            rep.add("arrow_endpoints", rackgraph::detail::cat(a));
            return false;
        }
    auto table_ok = [](const Table& t, std::size_t r, std::size_t c, std::size_t bound) {
        if (t.size() != r) return false;
        for (const auto& row : t) {
            if (row.size() != c) return false;
            for (auto v : row)
                if (v >= bound) return false;
        }
        return true;
    };
    if (!table_ok(m.vertex_mul, nv, nv, nv)) rep.add("vertex_mul_shape", "");
    if (!table_ok(m.left_act, nv, na, na)) rep.add("left_act_shape", "");
    if (!table_ok(m.right_act, na, nv, na)) rep.add("right_act_shape", "");
    return rep.ok();
}

}  // namespace detail_mg

/// Every identity making μ an associative graph morphism, checked on all
/// vertices and arrows.
inline ValidationReport validate_multiplicative(const MultiplicativeGraph& m)
{
    using rackgraph::detail::cat;
    ValidationReport rep;
    if (!detail_mg::shape_ok(m, rep)) return rep;
    const std::size_t nv = m.graph.vertex_count, na = m.graph.arrows.size();
    const auto& mul = m.vertex_mul;
    const auto& A = m.graph.arrows;
    for (std::size_t g = 0; g < nv; ++g)
        for (std::size_t h = 0; h < nv; ++h)
            for (std::size_t k = 0; k < nv; ++k)
                if (mul[mul[g][h]][k] != mul[g][mul[h][k]])
                    rep.add("vertex_associativity", cat("(", g, ",", h, ",", k, ")"));
    for (std::size_t a = 0; a < na; ++a)
        for (std::size_t g = 0; g < nv; ++g) {
            const Index ga = m.left_act[g][a], ag = m.right_act[a][g];
            if (A[ga].s != mul[g][A[a].s]) rep.add("source_left", cat("(", g, ",", a, ")"));
            if (A[ga].t != mul[g][A[a].t]) rep.add("target_left", cat("(", g, ",", a, ")"));
            if (A[ag].s != mul[A[a].s][g]) rep.add("source_right", cat("(", a, ",", g, ")"));
            if (A[ag].t != mul[A[a].t][g]) rep.add("target_right", cat("(", a, ",", g, ")"));
            for (std::size_t h = 0; h < nv; ++h) {
                if (m.right_act[ga][h] != m.left_act[g][m.right_act[a][h]])
                    rep.add("bimodule", cat("(", g, ",", a, ",", h, ")"));
                if (m.left_act[mul[g][h]][a] != m.left_act[g][m.left_act[h][a]])
                    rep.add("left_composition", cat("(", g, ",", h, ",", a, ")"));
                if (m.right_act[a][mul[g][h]] != m.right_act[ag][h])
                    rep.add("right_composition", cat("(", a, ",", g, ",", h, ")"));
            }
        }
    return rep;
}

/// validate_multiplicative plus unitality 1·a = a = a·1.
inline ValidationReport validate_group_like(const GroupLikeGraph& q)
{
    auto rep = validate_multiplicative(q.as_multiplicative());
    if (!rep.ok()) return rep;
    const Index e = q.group.identity();
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        if (q.left(e, a) != a) rep.add("left_unit", rackgraph::detail::cat(a));
        if (q.right(a, e) != a) rep.add("right_unit", rackgraph::detail::cat(a));
    }
    return rep;
}

/// Vertices G, arrows G×X with index g·|X| + x, s(g,x) = g, t(g,x) = gπ(x),
/// h·(g,x) = (hg, x), (g,x)·h = (gh, x^h).
inline GroupLikeGraph rack_to_graph(const AugmentedRack& r)
{
    const auto& G = r.group();
    const std::size_t nx = r.size(), ng = G.order();
    GroupLikeGraph q{G, {}, Table(ng, std::vector<Index>(ng * nx)), Table(ng * nx, std::vector<Index>(ng))};
    q.arrows.reserve(ng * nx);
    for (std::size_t g = 0; g < ng; ++g)
        for (std::size_t x = 0; x < nx; ++x) q.arrows.push_back({g, G.mul(g, r.pi(x))});
    for (std::size_t g = 0; g < ng; ++g)
        for (std::size_t x = 0; x < nx; ++x) {
            const Index a = g * nx + x;
            for (std::size_t h = 0; h < ng; ++h) {
                q.left_act[h][a] = G.mul(h, g) * nx + x;
                q.right_act[a][h] = G.mul(g, h) * nx + r.act(x, h);
            }
        }
    return q;
}

/// Arrows leaving the unit, in increasing arrow index.
inline std::vector<Index> unit_arrows(const GroupLikeGraph& q)
{
    std::vector<Index> xs;
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
        if (q.s(a) == q.group.identity()) xs.push_back(a);
    return xs;
}

/// X = s⁻¹(1) with x^g = g⁻¹·x·g and π = t|_X.
inline AugmentedRack graph_to_rack(const GroupLikeGraph& q)
{
    const auto& G = q.group;
    const auto xs = unit_arrows(q);
    std::vector<Index> pos(q.arrow_count(), q.arrow_count());
    for (std::size_t i = 0; i < xs.size(); ++i) pos[xs[i]] = i;
    Table action(xs.size(), std::vector<Index>(G.order()));
    std::vector<Index> pi(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        pi[i] = q.t(xs[i]);
        for (std::size_t g = 0; g < G.order(); ++g) {
            const Index b = q.right(q.left(G.inv(g), xs[i]), g);
            if (pos[b] == q.arrow_count())
                throw Error(rackgraph::detail::cat("conjugate of unit arrow ", xs[i], " by ", g,
                                                   " does not leave the unit"));
            action[i][g] = pos[b];
        }
    }
    return AugmentedRack(G, action, pi);
}

/// Isomorphism of group-like graphs: identity on vertices, a bijection on
/// arrows.
struct GraphIsomorphism {
    std::vector<Index> arrow_map;  // arrow of source graph -> arrow of target graph
};

/// Checks that `iso` carries q onto target, preserving s, t and both actions.
inline ValidationReport verify_isomorphism(const GroupLikeGraph& q, const GroupLikeGraph& target,
                                           const GraphIsomorphism& iso)
{
    using rackgraph::detail::cat;
    ValidationReport rep;
    if (q.group != target.group) {
        rep.add("same_vertex_group", "");
        return rep;
    }
    const std::size_t na = q.arrow_count();
    if (target.arrow_count() != na || iso.arrow_map.size() != na) {
        rep.add("arrow_count", cat(na, " vs ", target.arrow_count()));
        return rep;
    }
    std::vector<bool> hit(na, false);
    for (std::size_t a = 0; a < na; ++a) {
        const Index b = iso.arrow_map[a];
        if (b >= na || hit[b]) {
            rep.add("bijective", cat(a));
            continue;
        }
        hit[b] = true;
        if (target.s(b) != q.s(a)) rep.add("source", cat(a));
        if (target.t(b) != q.t(a)) rep.add("target", cat(a));
    }
    if (!rep.ok()) return rep;
    for (std::size_t a = 0; a < na; ++a)
        for (std::size_t g = 0; g < q.group.order(); ++g) {
            if (iso.arrow_map[q.left(g, a)] != target.left(g, iso.arrow_map[a]))
                rep.add("left_action", cat("(", g, ",", a, ")"));
            if (iso.arrow_map[q.right(a, g)] != target.right(iso.arrow_map[a], g))
                rep.add("right_action", cat("(", a, ",", g, ")"));
        }
    return rep;
}

/// The trivialization a ↦ (s(a), s(a)⁻¹·a), as an isomorphism from q onto
/// rack_to_graph(graph_to_rack(q)). Throws if it fails to be one (which
/// requires non-unital input).
inline GraphIsomorphism roundtrip_graph_iso(const GroupLikeGraph& q)
{
    const auto& G = q.group;
    const auto xs = unit_arrows(q);
    std::vector<Index> pos(q.arrow_count(), q.arrow_count());
    for (std::size_t i = 0; i < xs.size(); ++i) pos[xs[i]] = i;
    GraphIsomorphism iso;
    iso.arrow_map.resize(q.arrow_count());
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const Index g = q.s(a);
        const Index x = q.left(G.inv(g), a);
        if (pos[x] == q.arrow_count())
            throw Error(rackgraph::detail::cat("s(a)^-1 · a does not leave the unit for arrow ", a));
        iso.arrow_map[a] = g * xs.size() + pos[x];
    }
    const auto target = rack_to_graph(graph_to_rack(q));
    const auto rep = verify_isomorphism(q, target, iso);
    if (!rep.ok())
        throw Error("trivialization is not an isomorphism: " + rep.violations.front().identity + " " +
                    rep.violations.front().witness);
    return iso;
}

/// Transport of structure along an arrow relabeling: arrow a of q becomes
/// arrow perm[a] of the result.
inline GroupLikeGraph relabel_arrows(const GroupLikeGraph& q, const std::vector<Index>& perm)
{
    const std::size_t na = q.arrow_count(), ng = q.group.order();
    if (perm.size() != na) throw Error("relabeling has wrong length");
    GroupLikeGraph out{q.group, std::vector<Arrow>(na), Table(ng, std::vector<Index>(na)),
                       Table(na, std::vector<Index>(ng))};
    for (std::size_t a = 0; a < na; ++a) {
        out.arrows[perm[a]] = q.arrows[a];
        for (std::size_t g = 0; g < ng; ++g) {
            out.left_act[g][perm[a]] = perm[q.left(g, a)];
            out.right_act[perm[a]][g] = perm[q.right(a, g)];
        }
    }
    return out;
}

/// Vertices of the connected component of the unit (arrows traversed in
/// either direction).
struct UnitComponent {
    std::vector<Index> vertices;  // sorted
    bool is_connected = false;
    bool equals_generated_subgroup = false;
    bool is_normal = false;
};

inline UnitComponent unit_component(const GroupLikeGraph& q)
{
    const auto& G = q.group;
    const std::size_t n = G.order();
    std::vector<std::vector<Index>> adj(n);
    for (const auto& a : q.arrows) {
        adj[a.s].push_back(a.t);
        adj[a.t].push_back(a.s);
    }
    std::vector<bool> seen(n, false);
    std::vector<Index> stack{G.identity()}, comp;
    seen[G.identity()] = true;
    while (!stack.empty()) {
        const Index v = stack.back();
        stack.pop_back();
        comp.push_back(v);
        for (auto w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    std::sort(comp.begin(), comp.end());
    std::vector<Index> gens;
    for (auto a : unit_arrows(q)) gens.push_back(q.t(a));
    UnitComponent uc;
    uc.vertices = comp;
    uc.is_connected = comp.size() == n;
    uc.equals_generated_subgroup = G.generated_subgroup(gens) == comp;
    uc.is_normal = G.is_normal_subgroup(comp);
    return uc;
}

}  // namespace rackgraph::graphlike
