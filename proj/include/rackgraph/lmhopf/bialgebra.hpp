#pragma once

// The Hopf algebra k[A] → k[G] of a group-like graph, with every structure
// map stored as an explicit matrix over the ground field.
//
// Tensor bases: k[G]⊗k[G] uses g·|G| + h. The target of Δ₁ is
// k[A]⊗k[G] ⊕ k[G]⊗k[A]; a⊗h has index a·|G| + h and h⊗a has index
// |A||G| + h·|A| + a.

#include <string>
#include <vector>

#include "rackgraph/exactla/matrix.hpp"
#include "rackgraph/graphlike/multiplicative.hpp"

namespace rackgraph::lmhopf {

using exactla::FieldMatrix;
using exactla::FieldVector;
using graphlike::GroupLikeGraph;
using racks::Index;

template <class F>
struct LMBialgebra {
    F field;
    GroupLikeGraph graph;
    FieldMatrix<F> phi;     // |G| × |A|
    FieldMatrix<F> delta0;  // |G|² × |G|
    FieldMatrix<F> delta1;  // 2|A||G| × |A|
    FieldMatrix<F> s0;      // |G| × |G|
    FieldMatrix<F> s1;      // |A| × |A|
    FieldMatrix<F> counit;  // 1 × |G|

    std::size_t h_dim() const { return graph.group.order(); }
    std::size_t a_dim() const { return graph.arrow_count(); }
    std::size_t ag_index(Index a, Index h) const { return a * h_dim() + h; }
    std::size_t ga_index(Index h, Index a) const { return a_dim() * h_dim() + h * a_dim() + a; }
};

template <class F>
LMBialgebra<F> build_lm_hopf(const GroupLikeGraph& q, const F& field)
{
    const auto& G = q.group;
    const std::size_t ng = G.order(), na = q.arrow_count();
    LMBialgebra<F> b{field,
                     q,
                     exactla::zeros(field, ng, na),
                     exactla::zeros(field, ng * ng, ng),
                     exactla::zeros(field, 2 * na * ng, na),
                     exactla::zeros(field, ng, ng),
                     exactla::zeros(field, na, na),
                     exactla::zeros(field, 1, ng)};
    const auto one = field.one();
    for (std::size_t a = 0; a < na; ++a) {
        b.phi(q.t(a), a) += one;
        b.phi(q.s(a), a) -= one;
        b.delta1(b.ag_index(a, q.t(a)), a) += one;
        b.delta1(b.ga_index(q.s(a), a), a) += one;
        b.s1(q.right(q.left(G.inv(q.s(a)), a), G.inv(q.t(a))), a) -= one;
    }
    for (std::size_t g = 0; g < ng; ++g) {
        b.delta0(g * ng + g, g) = one;
        b.s0(G.inv(g), g) = one;
        b.counit(0, g) = one;
    }
    return b;
}

namespace detail {

/// Product in k[G].
template <class F>
FieldVector<F> group_algebra_mul(const F& f, const racks::FiniteGroup& G, const FieldVector<F>& u,
                                 const FieldVector<F>& v)
{
    auto out = exactla::zero_vector(f, G.order());
    for (std::size_t g = 0; g < G.order(); ++g) {
        if (f.is_zero(u[g])) continue;
        for (std::size_t h = 0; h < G.order(); ++h)
            if (!f.is_zero(v[h])) out[G.mul(g, h)] += u[g] * v[h];
    }
    return out;
}

template <class F>
struct Ops {
    const LMBialgebra<F>& b;
    using V = FieldVector<F>;

    const F& f() const { return b.field; }
    std::size_t ng() const { return b.h_dim(); }
    std::size_t na() const { return b.a_dim(); }
    const racks::FiniteGroup& G() const { return b.graph.group; }
    V zero(std::size_t n) const { return exactla::zero_vector(f(), n); }

    V mul_g(const V& u, const V& v) const { return group_algebra_mul(f(), G(), u, v); }
    V left(const V& u, const V& w) const  // u ∈ k[G], w ∈ k[A]
    {
        V out = zero(na());
        for (std::size_t g = 0; g < ng(); ++g) {
            if (f().is_zero(u[g])) continue;
            for (std::size_t a = 0; a < na(); ++a)
                if (!f().is_zero(w[a])) out[b.graph.left(g, a)] += u[g] * w[a];
        }
        return out;
    }
    V right(const V& w, const V& u) const
    {
        V out = zero(na());
        for (std::size_t a = 0; a < na(); ++a) {
            if (f().is_zero(w[a])) continue;
            for (std::size_t g = 0; g < ng(); ++g)
                if (!f().is_zero(u[g])) out[b.graph.right(a, g)] += w[a] * u[g];
        }
        return out;
    }

    /// (M ⊗ N)v for v in U ⊗ V (index u·dim V + v') with M: U → U', N: V → V'.
    V tensor(const FieldMatrix<F>& m, const FieldMatrix<F>& n, const V& v) const
    {
        const std::size_t dv = n.cols(), rn = n.rows();
        V out = zero(m.rows() * rn);
        for (std::size_t idx = 0; idx < v.size(); ++idx) {
            if (f().is_zero(v[idx])) continue;
            const std::size_t u = idx / dv, w = idx % dv;
            for (std::size_t i = 0; i < m.rows(); ++i) {
                if (f().is_zero(m(i, u))) continue;
                const auto c = v[idx] * m(i, u);
                for (std::size_t j = 0; j < rn; ++j)
                    if (!f().is_zero(n(j, w))) out[i * rn + j] += c * n(j, w);
            }
        }
        return out;
    }

    V col(const FieldMatrix<F>& m, std::size_t j) const { return m.col(j); }
    V e_g(Index g) const { return exactla::unit_vector(f(), ng(), g); }
    V e_a(Index a) const { return exactla::unit_vector(f(), na(), a); }
    FieldMatrix<F> id(std::size_t n) const { return exactla::identity(f(), n); }

    // split a Δ₁-target vector into its two blocks
    V ag_block(const V& v) const { return V(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(na() * ng())); }
    V ga_block(const V& v) const { return V(v.begin() + static_cast<std::ptrdiff_t>(na() * ng()), v.end()); }
    V join(const V& x, const V& y) const
    {
        V out = x;
        out.insert(out.end(), y.begin(), y.end());
        return out;
    }
};

template <class F>
std::string vec_str(const F& field, const FieldVector<F>& v)
{
    std::string s = "[";
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (field.is_zero(v[i])) continue;
        if (!first) s += ", ";
        first = false;
        s += std::to_string(i) + ":" + exactla::to_string(v[i]);
    }
    return s + "]";
}

}  // namespace detail

/// Exhaustive basis-level check of the bialgebra and antipode identities.
template <class F>
ValidationReport verify_hopf(const LMBialgebra<F>& b)
{
    using rackgraph::detail::cat;
    detail::Ops<F> op{b};
    const auto& f = b.field;
    const std::size_t ng = b.h_dim(), na = b.a_dim();
    ValidationReport rep;
    auto check = [&](bool ok, const char* identity, const std::string& witness) {
        if (!ok) rep.add(identity, witness);
    };
    const auto Ig = op.id(ng), Ia = op.id(na);

    for (std::size_t g = 0; g < ng; ++g) {
        const auto d = op.col(b.delta0, g);
        check(op.tensor(b.delta0, Ig, d) == op.tensor(Ig, b.delta0, d), "delta0_coassociative", cat("g=", g));
        check(op.tensor(b.counit, Ig, d) == op.e_g(g), "counit_left", cat("g=", g));
        check(op.tensor(Ig, b.counit, d) == op.e_g(g), "counit_right", cat("g=", g));
        for (std::size_t h = 0; h < ng; ++h) {
            const auto dh = op.col(b.delta0, h);
            auto prod = op.zero(ng * ng);
            for (std::size_t i = 0; i < d.size(); ++i) {
                if (f.is_zero(d[i])) continue;
                for (std::size_t j = 0; j < dh.size(); ++j)
                    if (!f.is_zero(dh[j]))
                        prod[b.graph.group.mul(i / ng, j / ng) * ng + b.graph.group.mul(i % ng, j % ng)] +=
                            d[i] * dh[j];
            }
            check(op.col(b.delta0, b.graph.group.mul(g, h)) == prod, "delta0_multiplicative",
                  cat("(", g, ",", h, ")"));
        }
        // μ(S₀⊗Id)Δ₀ = μ(Id⊗S₀)Δ₀ = ε(g)·1
        auto lhs = op.zero(ng), rhs = op.zero(ng);
        const auto sd_l = op.tensor(b.s0, Ig, d), sd_r = op.tensor(Ig, b.s0, d);
        for (std::size_t i = 0; i < sd_l.size(); ++i) {
            if (!f.is_zero(sd_l[i])) lhs[b.graph.group.mul(i / ng, i % ng)] += sd_l[i];
            if (!f.is_zero(sd_r[i])) rhs[b.graph.group.mul(i / ng, i % ng)] += sd_r[i];
        }
        auto unit = op.zero(ng);
        unit[b.graph.group.identity()] = b.counit(0, g);
        check(lhs == unit, "antipode_g_left", cat("g=", g));
        check(rhs == unit, "antipode_g_right", cat("g=", g));
    }

    for (std::size_t a = 0; a < na; ++a) {
        const auto d = op.col(b.delta1, a);
        const auto ag = op.ag_block(d), ga = op.ga_block(d);
        const std::string w = cat("a=", a);

        // counit on the coaction
        check(op.tensor(Ia, b.counit, ag) == op.e_a(a), "coaction_counit_right", w);
        check(op.tensor(b.counit, Ia, ga) == op.e_a(a), "coaction_counit_left", w);

        // (Δ⊗Id)Δ₁ = (Id⊗Δ)Δ₁ in AGG ⊕ GAG ⊕ GGA
        {
            auto agg = op.zero(na * ng * ng), gag = op.zero(ng * na * ng), gga = op.zero(ng * ng * na);
            for (std::size_t i = 0; i < ag.size(); ++i) {
                if (f.is_zero(ag[i])) continue;
                const Index x = i / ng, h = i % ng;
                const auto dx = op.col(b.delta1, x);
                for (std::size_t k = 0; k < na * ng; ++k)
                    if (!f.is_zero(dx[k])) agg[k * ng + h] += ag[i] * dx[k];
                for (std::size_t k = 0; k < ng * na; ++k)
                    if (!f.is_zero(dx[na * ng + k])) gag[k * ng + h] += ag[i] * dx[na * ng + k];
            }
            gga = op.tensor(b.delta0, Ia, ga);
            auto agg2 = op.tensor(Ia, b.delta0, ag), gag2 = op.zero(ng * na * ng), gga2 = op.zero(ng * ng * na);
            for (std::size_t i = 0; i < ga.size(); ++i) {
                if (f.is_zero(ga[i])) continue;
                const Index h = i / na, x = i % na;
                const auto dx = op.col(b.delta1, x);
                for (std::size_t k = 0; k < na * ng; ++k)
                    if (!f.is_zero(dx[k])) gag2[h * na * ng + k] += ga[i] * dx[k];
                for (std::size_t k = 0; k < ng * na; ++k)
                    if (!f.is_zero(dx[na * ng + k])) gga2[h * ng * na + k] += ga[i] * dx[na * ng + k];
            }
            check(agg == agg2 && gag == gag2 && gga == gga2, "delta1_coassociative", w);
        }

        for (std::size_t g = 0; g < ng; ++g) {
            const std::string wg = cat("(a=", a, ",g=", g, ")");
            const Index gg = g;
            // Δ₁(a·g) = Δ₁(a)·Δ₀(g) and Δ₁(g·a) = Δ₀(g)·Δ₁(a)
            auto dr = op.zero(2 * na * ng), dl = op.zero(2 * na * ng);
            const auto d0 = op.col(b.delta0, g);
            for (std::size_t j = 0; j < d0.size(); ++j) {
                if (f.is_zero(d0[j])) continue;
                const Index g1 = j / ng, g2 = j % ng;
                for (std::size_t i = 0; i < na * ng; ++i) {
                    if (!f.is_zero(ag[i])) {
                        const Index x = i / ng, h = i % ng;
                        dr[b.ag_index(b.graph.right(x, g1), b.graph.group.mul(h, g2))] += ag[i] * d0[j];
                        dl[b.ag_index(b.graph.left(g1, x), b.graph.group.mul(g2, h))] += ag[i] * d0[j];
                    }
                    if (!f.is_zero(ga[i])) {
                        const Index h = i / na, x = i % na;
                        dr[b.ga_index(b.graph.group.mul(h, g1), b.graph.right(x, g2))] += ga[i] * d0[j];
                        dl[b.ga_index(b.graph.group.mul(g1, h), b.graph.left(g2, x))] += ga[i] * d0[j];
                    }
                }
            }
            check(op.col(b.delta1, b.graph.right(a, gg)) == dr, "delta1_right_module", wg);
            check(op.col(b.delta1, b.graph.left(gg, a)) == dl, "delta1_left_module", wg);
            check(op.col(b.phi, b.graph.right(a, gg)) == op.mul_g(op.col(b.phi, a), op.e_g(gg)), "phi_right_module",
                  wg);
            check(op.col(b.phi, b.graph.left(gg, a)) == op.mul_g(op.e_g(gg), op.col(b.phi, a)), "phi_left_module",
                  wg);
        }

        // Δ₀∘φ = (φ⊗Id + Id⊗φ)∘Δ₁
        {
            auto rhs = op.tensor(b.phi, Ig, ag);
            const auto t2 = op.tensor(Ig, b.phi, ga);
            for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += t2[i];
            check(exactla::apply(f, b.delta0, op.col(b.phi, a)) == rhs, "phi_coaction_compatible", w);
        }

        // μ∘(S⊗Id)₁∘Δ₁ = 0 and μ∘(Id⊗S)₁∘Δ₁ = 0
        {
            auto lhs = op.zero(na), rhs = op.zero(na);
            for (std::size_t i = 0; i < na * ng; ++i) {
                if (!f.is_zero(ag[i])) {
                    const Index x = i / ng, h = i % ng;
                    exactla::axpy(f, ag[i], op.right(op.col(b.s1, x), op.e_g(h)), lhs);
                    exactla::axpy(f, ag[i], op.right(op.e_a(x), op.col(b.s0, h)), rhs);
                }
                if (!f.is_zero(ga[i])) {
                    const Index h = i / na, x = i % na;
                    exactla::axpy(f, ga[i], op.left(op.col(b.s0, h), op.e_a(x)), lhs);
                    exactla::axpy(f, ga[i], op.left(op.e_g(h), op.col(b.s1, x)), rhs);
                }
            }
            check(exactla::is_zero_vector(f, lhs), "antipode_left", w + " residue " + detail::vec_str(f, lhs));
            check(exactla::is_zero_vector(f, rhs), "antipode_right", w + " residue " + detail::vec_str(f, rhs));
        }

        check(exactla::apply(f, b.phi, op.col(b.s1, a)) == exactla::apply(f, b.s0, op.col(b.phi, a)),
              "phi_intertwines_antipodes", w);
    }
    return rep;
}

}  // namespace rackgraph::lmhopf
