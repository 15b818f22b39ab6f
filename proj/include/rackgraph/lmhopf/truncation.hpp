#pragma once

// Truncations k[A]/Iⁿ(A) → k[G]/Iⁿ⁺¹(G). Quotients are coordinatized by
// the adapted basis vectors of level below the bound. Tensor products are
// taken modulo their filtration: a basis pair (i, j) survives when
// level(i) + level(j) is below the bound (n for the Δ₁ blocks, n + 1 for
// k[G]⊗k[G]).

#include <vector>

#include "rackgraph/lmhopf/graded.hpp"

namespace rackgraph::lmhopf {

/// Surviving basis pairs of a filtered tensor product.
struct PairBasis {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::size_t dim() const { return pairs.size(); }
    std::size_t find(std::size_t i, std::size_t j) const
    {
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (pairs[k].first == i && pairs[k].second == j) return k;
        return pairs.size();
    }
};

template <class F>
PairBasis pair_basis(const AdaptedBasis<F>& bu, const AdaptedBasis<F>& bv, std::size_t bound)
{
    PairBasis p;
    for (std::size_t i = 0; i < bu.size(); ++i)
        for (std::size_t j = 0; j < bv.size(); ++j)
            if (exactla::level_sum(bu.level(i), bv.level(j)) < bound) p.pairs.emplace_back(i, j);
    return p;
}

template <class F>
struct TruncatedHopf {
    std::size_t n = 0;
    AdaptedBasis<F> basis_A;
    AdaptedBasis<F> basis_G;
    std::vector<std::size_t> quotient_A;  // adapted indices with level < n
    std::vector<std::size_t> quotient_G;  // adapted indices with level < n + 1
    PairBasis gg;                          // k[G]⊗k[G], bound n + 1
    PairBasis ag;                          // k[A]⊗k[G], bound n
    PairBasis ga;                          // k[G]⊗k[A], bound n
    FieldMatrix<F> phi;                    // dim H_n × dim A_n
    FieldMatrix<F> delta0;                 // gg × dim H_n
    FieldMatrix<F> delta1;                 // (ag + ga) × dim A_n
    FieldMatrix<F> s0;
    FieldMatrix<F> s1;
    std::vector<FieldMatrix<F>> left;   // per group element, on A_n
    std::vector<FieldMatrix<F>> right;  // per group element, on A_n
    FieldMatrix<F> counit;              // 1 × dim H_n
    ValidationReport report;            // well-definedness of every induced map

    std::size_t dim_A() const { return quotient_A.size(); }
    std::size_t dim_G() const { return quotient_G.size(); }
};

namespace detail {

template <class F>
std::vector<std::size_t> position_map(const std::vector<std::size_t>& idx, std::size_t n)
{
    std::vector<std::size_t> pos(n, n);
    for (std::size_t k = 0; k < idx.size(); ++k) pos[idx[k]] = k;
    return pos;
}

/// Adapted coordinates of t ∈ U⊗V, as a dense (du·dv) vector.
template <class F>
FieldVector<F> tensor_coords(const F& f, const AdaptedBasis<F>& bu, const AdaptedBasis<F>& bv,
                             const FieldVector<F>& t)
{
    const std::size_t du = bu.size(), dv = bv.size();
    auto tmp = exactla::zero_vector(f, du * dv), out = exactla::zero_vector(f, du * dv);
    const auto& iu = bu.inverse();
    const auto& iv = bv.inverse();
    for (std::size_t u = 0; u < du; ++u)
        for (std::size_t v = 0; v < dv; ++v) {
            if (f.is_zero(t[u * dv + v])) continue;
            for (std::size_t j = 0; j < dv; ++j)
                if (!f.is_zero(iv(j, v))) tmp[u * dv + j] += t[u * dv + v] * iv(j, v);
        }
    for (std::size_t u = 0; u < du; ++u)
        for (std::size_t j = 0; j < dv; ++j) {
            if (f.is_zero(tmp[u * dv + j])) continue;
            for (std::size_t i = 0; i < du; ++i)
                if (!f.is_zero(iu(i, u))) out[i * dv + j] += iu(i, u) * tmp[u * dv + j];
        }
    return out;
}

}  // namespace detail

template <class F>
TruncatedHopf<F> truncated_hopf(const LMBialgebra<F>& b, const FiltrationLevels<F>& fl, std::size_t n)
{
    using rackgraph::detail::cat;
    const auto& f = b.field;
    const std::size_t ng = b.h_dim(), na = b.a_dim();
    auto bA = adapted_A(fl), bG = adapted_G(fl);
    TruncatedHopf<F> t{n, bA, bG, bA.below(n), bG.below(n + 1), pair_basis(bG, bG, n + 1), pair_basis(bA, bG, n),
                       pair_basis(bG, bA, n), {}, {}, {}, {}, {}, {}, {}, {}, {}};
    const auto posA = detail::position_map<F>(t.quotient_A, na), posG = detail::position_map<F>(t.quotient_G, ng);
    const std::size_t qa = t.dim_A(), qg = t.dim_G();
    auto& rep = t.report;

    // projections of adapted coordinates; entries outside the quotient must
    // come from the killed subspace, i.e. lie at level ≥ the bound
    auto project = [&](const FieldVector<F>& coords, const std::vector<std::size_t>& pos, std::size_t q,
                       const AdaptedBasis<F>& basis, std::size_t bound, const char* what, std::size_t col,
                       bool from_killed) {
        auto out = exactla::zero_vector(f, q);
        for (std::size_t k = 0; k < coords.size(); ++k) {
            if (f.is_zero(coords[k])) continue;
            if (pos[k] < q && !from_killed) out[pos[k]] = coords[k];
            if (from_killed && basis.level(k) < bound) rep.add(what, cat("killed basis vector ", col));
        }
        return out;
    };

    t.phi = exactla::zeros(f, qg, qa);
    t.s1 = exactla::zeros(f, qa, qa);
    t.s0 = exactla::zeros(f, qg, qg);
    t.counit = exactla::zeros(f, 1, qg);
    t.delta0 = exactla::zeros(f, t.gg.dim(), qg);
    t.delta1 = exactla::zeros(f, t.ag.dim() + t.ga.dim(), qa);
    t.left.assign(ng, exactla::zeros(f, qa, qa));
    t.right.assign(ng, exactla::zeros(f, qa, qa));
    detail::Ops<F> op{b};

    for (std::size_t k = 0; k < na; ++k) {
        const bool killed = bA.level(k) >= n;
        const auto v = bA.vector(k);
        const std::size_t j = posA[k];
        auto put = [&](FieldMatrix<F>& m, const FieldVector<F>& col) {
            if (!killed)
                for (std::size_t i = 0; i < col.size(); ++i) m(i, j) = col[i];
        };
        put(t.phi, project(bG.coords(f, exactla::apply(f, b.phi, v)), posG, qg, bG, n + 1, "phi_well_defined", k,
                           killed));
        put(t.s1, project(bA.coords(f, exactla::apply(f, b.s1, v)), posA, qa, bA, n, "s1_well_defined", k, killed));
        for (std::size_t g = 0; g < ng; ++g) {
            put(t.left[g], project(bA.coords(f, op.left(op.e_g(g), v)), posA, qa, bA, n, "left_action_well_defined",
                                   k, killed));
            put(t.right[g], project(bA.coords(f, op.right(v, op.e_g(g))), posA, qa, bA, n,
                                    "right_action_well_defined", k, killed));
        }
        const auto d = exactla::apply(f, b.delta1, v);
        const auto cag = detail::tensor_coords(f, bA, bG, op.ag_block(d));
        const auto cga = detail::tensor_coords(f, bG, bA, op.ga_block(d));
        auto col = exactla::zero_vector(f, t.ag.dim() + t.ga.dim());
        for (std::size_t i = 0; i < cag.size(); ++i) {
            if (f.is_zero(cag[i])) continue;
            const std::size_t x = i / ng, h = i % ng;
            if (exactla::level_sum(bA.level(x), bG.level(h)) < n) {
                if (killed) rep.add("delta1_well_defined", cat("killed basis vector ", k));
                else col[t.ag.find(x, h)] = cag[i];
            }
        }
        for (std::size_t i = 0; i < cga.size(); ++i) {
            if (f.is_zero(cga[i])) continue;
            const std::size_t h = i / na, x = i % na;
            if (exactla::level_sum(bG.level(h), bA.level(x)) < n) {
                if (killed) rep.add("delta1_well_defined", cat("killed basis vector ", k));
                else col[t.ag.dim() + t.ga.find(h, x)] = cga[i];
            }
        }
        put(t.delta1, col);
    }
    for (std::size_t k = 0; k < ng; ++k) {
        const bool killed = bG.level(k) >= n + 1;
        const auto v = bG.vector(k);
        const std::size_t j = posG[k];
        auto put = [&](FieldMatrix<F>& m, const FieldVector<F>& col) {
            if (!killed)
                for (std::size_t i = 0; i < col.size(); ++i) m(i, j) = col[i];
        };
        put(t.s0, project(bG.coords(f, exactla::apply(f, b.s0, v)), posG, qg, bG, n + 1, "s0_well_defined", k,
                          killed));
        const auto eps = exactla::apply(f, b.counit, v);
        if (killed && !f.is_zero(eps[0])) rep.add("counit_well_defined", cat("killed basis vector ", k));
        put(t.counit, eps);
        const auto cgg = detail::tensor_coords(f, bG, bG, exactla::apply(f, b.delta0, v));
        auto col = exactla::zero_vector(f, t.gg.dim());
        for (std::size_t i = 0; i < cgg.size(); ++i) {
            if (f.is_zero(cgg[i])) continue;
            const std::size_t x = i / ng, y = i % ng;
            if (exactla::level_sum(bG.level(x), bG.level(y)) < n + 1) {
                if (killed) rep.add("delta0_well_defined", cat("killed basis vector ", k));
                else col[t.gg.find(x, y)] = cgg[i];
            }
        }
        put(t.delta0, col);
    }
    return t;
}

/// Image of a group element or an arrow in a truncation.
template <class F>
FieldVector<F> image_G(const F& f, const TruncatedHopf<F>& t, Index g)
{
    const auto co = t.basis_G.coords(f, exactla::unit_vector(f, t.basis_G.size(), g));
    FieldVector<F> out;
    for (auto k : t.quotient_G) out.push_back(co[k]);
    return out;
}

template <class F>
FieldVector<F> image_A(const F& f, const TruncatedHopf<F>& t, Index a)
{
    const auto co = t.basis_A.coords(f, exactla::unit_vector(f, t.basis_A.size(), a));
    FieldVector<F> out;
    for (auto k : t.quotient_A) out.push_back(co[k]);
    return out;
}

/// v ⊗ w restricted to the surviving pairs of p.
template <class F>
FieldVector<F> pair_product(const F& f, const PairBasis& p, const std::vector<std::size_t>& qu,
                            const std::vector<std::size_t>& qv, const FieldVector<F>& v, const FieldVector<F>& w)
{
    // v and w are quotient coordinates; translate pair (i, j) of adapted indices
    auto pu = detail::position_map<F>(qu, qu.empty() ? 0 : *std::max_element(qu.begin(), qu.end()) + 1);
    auto pv = detail::position_map<F>(qv, qv.empty() ? 0 : *std::max_element(qv.begin(), qv.end()) + 1);
    FieldVector<F> out;
    for (const auto& [i, j] : p.pairs) {
        if (i >= pu.size() || j >= pv.size() || pu[i] >= qu.size() || pv[j] >= qv.size()) {
            out.push_back(f.zero());
            continue;
        }
        out.push_back(v[pu[i]] * w[pv[j]]);
    }
    return out;
}

/// Canonical surjection TH(m) → TH(n), m ≥ n: coordinate selection on the
/// quotients of k[A] and of k[G].
template <class F>
struct TruncationMap {
    FieldMatrix<F> on_A;  // dim A_n × dim A_m
    FieldMatrix<F> on_G;  // dim H_n × dim H_m
};

template <class F>
TruncationMap<F> truncation_map(const F& f, const TruncatedHopf<F>& from, const TruncatedHopf<F>& to)
{
    if (to.n > from.n) throw Error("truncation maps go from deeper to shallower quotients");
    auto select = [&](const std::vector<std::size_t>& src, const std::vector<std::size_t>& dst) {
        auto m = exactla::zeros(f, dst.size(), src.size());
        for (std::size_t i = 0; i < dst.size(); ++i)
            for (std::size_t j = 0; j < src.size(); ++j)
                if (src[j] == dst[i]) m(i, j) = f.one();
        return m;
    };
    return {select(from.quotient_A, to.quotient_A), select(from.quotient_G, to.quotient_G)};
}

/// Whether the surjection commutes with φ, the antipodes and the actions.
template <class F>
ValidationReport verify_truncation_map(const F& f, const TruncatedHopf<F>& from, const TruncatedHopf<F>& to,
                                       const TruncationMap<F>& p)
{
    ValidationReport rep;
    using exactla::multiply;
    if (multiply(f, p.on_G, from.phi) != multiply(f, to.phi, p.on_A)) rep.add("commutes_with_phi", "");
    if (multiply(f, p.on_G, from.s0) != multiply(f, to.s0, p.on_G)) rep.add("commutes_with_s0", "");
    if (multiply(f, p.on_A, from.s1) != multiply(f, to.s1, p.on_A)) rep.add("commutes_with_s1", "");
    for (std::size_t g = 0; g < from.left.size(); ++g) {
        if (multiply(f, p.on_A, from.left[g]) != multiply(f, to.left[g], p.on_A))
            rep.add("commutes_with_left_action", rackgraph::detail::cat("g=", g));
        if (multiply(f, p.on_A, from.right[g]) != multiply(f, to.right[g], p.on_A))
            rep.add("commutes_with_right_action", rackgraph::detail::cat("g=", g));
    }
    if (multiply(f, to.counit, p.on_G) != from.counit) rep.add("commutes_with_counit", "");
    return rep;
}

/// Group-like images of vertices and edge-like images of arrows, and agreement
/// of the induced structure with the graph.
template <class F>
ValidationReport verify_edge_like(const TruncatedHopf<F>& t, const LMBialgebra<F>& b)
{
    using rackgraph::detail::cat;
    const auto& f = b.field;
    ValidationReport rep;
    const std::size_t ng = b.h_dim(), na = b.a_dim();
    std::vector<FieldVector<F>> gbar, abar;
    for (std::size_t g = 0; g < ng; ++g) gbar.push_back(image_G(f, t, g));
    for (std::size_t a = 0; a < na; ++a) abar.push_back(image_A(f, t, a));
    for (std::size_t g = 0; g < ng; ++g) {
        const auto lhs = exactla::apply(f, t.delta0, gbar[g]);
        if (lhs != pair_product(f, t.gg, t.quotient_G, t.quotient_G, gbar[g], gbar[g]))
            rep.add("group_like", cat("g=", g));
        if (exactla::apply(f, t.counit, gbar[g]) != FieldVector<F>{f.one()}) rep.add("counit_group_like", cat("g=", g));
        if (exactla::apply(f, t.s0, gbar[g]) != gbar[b.graph.group.inv(g)]) rep.add("antipode_inverts", cat("g=", g));
    }
    for (std::size_t a = 0; a < na; ++a) {
        const Index s = b.graph.s(a), tt = b.graph.t(a);
        const auto lhs = exactla::apply(f, t.delta1, abar[a]);
        auto rhs = pair_product(f, t.ag, t.quotient_A, t.quotient_G, abar[a], gbar[tt]);
        const auto r2 = pair_product(f, t.ga, t.quotient_G, t.quotient_A, gbar[s], abar[a]);
        rhs.insert(rhs.end(), r2.begin(), r2.end());
        if (lhs != rhs) rep.add("edge_like", cat("a=", a));
        auto phi_expected = gbar[tt];
        for (std::size_t i = 0; i < phi_expected.size(); ++i) phi_expected[i] -= gbar[s][i];
        if (exactla::apply(f, t.phi, abar[a]) != phi_expected) rep.add("phi_is_target_minus_source", cat("a=", a));
        for (std::size_t g = 0; g < ng; ++g) {
            if (exactla::apply(f, t.left[g], abar[a]) != abar[b.graph.left(g, a)])
                rep.add("left_action_agrees", cat("(g=", g, ",a=", a, ")"));
            if (exactla::apply(f, t.right[g], abar[a]) != abar[b.graph.right(a, g)])
                rep.add("right_action_agrees", cat("(a=", a, ",g=", g, ")"));
        }
    }
    return rep;
}

}  // namespace rackgraph::lmhopf
