#pragma once

#include <vector>

#include "rackgraph/lmhopf/coinvariant.hpp"

namespace rackgraph::lmhopf {

template <class F>
AdaptedBasis<F> adapted_G(const FiltrationLevels<F>& fl)
{
    return AdaptedBasis<F>(fl.levels_G.front().field(), fl.levels_G);
}

template <class F>
AdaptedBasis<F> adapted_A(const FiltrationLevels<F>& fl)
{
    return AdaptedBasis<F>(fl.levels_A.front().field(), fl.levels_A);
}

/// Smallest level sum over nonzero coordinates of t ∈ U⊗V (index u·dim V + v)
/// in adapted bases of U and V.
template <class F>
std::size_t tensor_filtration_degree(const F& f, const AdaptedBasis<F>& bu, const AdaptedBasis<F>& bv,
                                     const FieldVector<F>& t)
{
    const std::size_t du = bu.size(), dv = bv.size();
    // coordinates: (P ⊗ Q)⁻¹ t, done as two passes
    auto tmp = exactla::zero_vector(f, du * dv);
    const auto& iu = bu.inverse();
    const auto& iv = bv.inverse();
    for (std::size_t u = 0; u < du; ++u)
        for (std::size_t v = 0; v < dv; ++v) {
            const auto& x = t[u * dv + v];
            if (f.is_zero(x)) continue;
            for (std::size_t j = 0; j < dv; ++j)
                if (!f.is_zero(iv(j, v))) tmp[u * dv + j] += x * iv(j, v);
        }
    std::size_t deg = AdaptedBasis<F>::infinite_level;
    for (std::size_t j = 0; j < dv; ++j)
        for (std::size_t i = 0; i < du; ++i) {
            auto c = f.zero();
            for (std::size_t u = 0; u < du; ++u)
                if (!f.is_zero(iu(i, u)) && !f.is_zero(tmp[u * dv + j])) c += iu(i, u) * tmp[u * dv + j];
            if (!f.is_zero(c)) deg = std::min(deg, exactla::level_sum(bu.level(i), bv.level(j)));
        }
    return deg;
}

/// (i) dim grⁿk[A] = Σ_{p+q=n} dim grᵖk[G]·dim 𝒫^q(X);
/// (ii) Δ₁′: a ↦ a⊗φ(a) maps Iⁿ(A) into the level-(n+1) part of k[A]⊗k[G];
/// (iii) φ(Iⁿ(A)) ⊆ Iⁿ⁺¹(G);
/// (iv) under k[A] ≅ k[G]⊗k[X], (g,x) ↦ g⊗x, Iⁿ(A) = Σ_{p+q=n} Iᵖ(G)⊗I^q(X).
template <class F>
ValidationReport verify_graded_structure(const LMBialgebra<F>& b, const FiltrationLevels<F>& fl,
                                         const CoinvariantModule<F>& c)
{
    using rackgraph::detail::cat;
    ValidationReport rep;
    const auto& f = b.field;
    const std::size_t ng = b.h_dim(), na = b.a_dim(), nx = ng == 0 ? 0 : na / ng;
    const std::size_t depth = std::max(fl.depth(), c.levels_X.size() - 1) + 1;
    const auto dA = graded_dimensions(fl.levels_A, depth), dG = graded_dimensions(fl.levels_G, depth);
    for (std::size_t n = 0; n <= depth; ++n) {
        std::size_t sum = 0;
        for (std::size_t p = 0; p <= n; ++p) sum += dG[p] * c.dim_P(n - p);
        if (sum != dA[n]) rep.add("graded_dimension_identity", cat("n=", n, ": ", dA[n], " vs ", sum));
    }

    const auto bA = adapted_A(fl), bG = adapted_G(fl);
    for (std::size_t n = 0; n <= depth; ++n) {
        for (const auto& u : fl.A(n).basis_vectors()) {
            auto t = exactla::zero_vector(f, na * ng);
            for (std::size_t a = 0; a < na; ++a) {
                if (f.is_zero(u[a])) continue;
                for (std::size_t g = 0; g < ng; ++g)
                    if (!f.is_zero(b.phi(g, a))) t[a * ng + g] += u[a] * b.phi(g, a);
            }
            const auto deg = tensor_filtration_degree(f, bA, bG, t);
            if (deg < n + 1) rep.add("noncocommutative_part_raises_filtration", cat("n=", n, " degree ", deg));
            if (!fl.G(n + 1).contains(exactla::apply(f, b.phi, u)))
                rep.add("phi_raises_filtration", cat("n=", n));
        }
    }

    if (nx * ng == na) {
        // arrows of a rack graph are indexed g·|X| + x, which already is g⊗x
        for (std::size_t n = 0; n <= depth; ++n) {
            std::vector<FieldVector<F>> gens;
            for (std::size_t p = 0; p <= n; ++p) {
                const auto& lg = fl.G(p);
                const auto& lx = c.levels_X[std::min(n - p, c.levels_X.size() - 1)];
                for (const auto& v : lg.basis_vectors())
                    for (const auto& w : lx.basis_vectors()) {
                        auto t = exactla::zero_vector(f, na);
                        for (std::size_t g = 0; g < ng; ++g)
                            if (!f.is_zero(v[g]))
                                for (std::size_t x = 0; x < nx; ++x)
                                    if (!f.is_zero(w[x])) t[g * nx + x] += v[g] * w[x];
                        gens.push_back(std::move(t));
                    }
            }
            if (Subspace<F>::span(f, na, gens) != fl.A(n)) rep.add("tensor_identification", cat("n=", n));
        }
    } else {
        rep.add("tensor_identification", "arrow count is not |G|·|X|");
    }
    return rep;
}

}  // namespace rackgraph::lmhopf
