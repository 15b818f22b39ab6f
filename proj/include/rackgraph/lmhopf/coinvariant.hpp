#pragma once

#include <vector>

#include "rackgraph/lmhopf/filtration.hpp"

namespace rackgraph::lmhopf {

using exactla::AdaptedBasis;
using racks::AugmentedRack;

/// Filtration Iⁿ(X) of k[X] by iterated x ↦ x^g − x, its graded pieces
/// 𝒫ⁿ(X), and the degree-one map π*: 𝒫ⁿ(X) → grⁿ⁺¹ k[G].
template <class F>
struct CoinvariantModule {
    std::vector<Subspace<F>> levels_X;  // ends with a repeated level
    std::size_t stable_X = 0;
    std::vector<Subspace<F>> levels_G;
    std::vector<std::size_t> graded_dims;  // dim 𝒫ⁿ for n = 0 … depth
    // pi_star[n]: dim grⁿ⁺¹k[G] × dim 𝒫ⁿ, in the adapted bases below
    std::vector<FieldMatrix<F>> pi_star;
    AdaptedBasis<F> basis_X;
    AdaptedBasis<F> basis_G;
    ValidationReport report;

    std::size_t dim_P(std::size_t n) const { return n < graded_dims.size() ? graded_dims[n] : 0; }
};

/// dim Lⁿ − dim Lⁿ⁺¹ along a chain that ends with a repeated level,
/// extended by zero to `depth`.
template <class F>
std::vector<std::size_t> graded_dimensions(const std::vector<Subspace<F>>& chain, std::size_t depth)
{
    std::vector<std::size_t> out;
    for (std::size_t n = 0; n <= depth; ++n) {
        const auto& a = chain[std::min(n, chain.size() - 1)];
        const auto& b = chain[std::min(n + 1, chain.size() - 1)];
        out.push_back(a.dim() - b.dim());
    }
    return out;
}

/// Indices of basis vectors with level exactly n.
template <class F>
std::vector<std::size_t> level_indices(const AdaptedBasis<F>& ab, std::size_t n)
{
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < ab.size(); ++k)
        if (ab.level(k) == n) out.push_back(k);
    return out;
}

template <class F>
CoinvariantModule<F> coinvariant_module(const AugmentedRack& a, const F& f, std::size_t min_depth = 1)
{
    using rackgraph::detail::cat;
    const auto& G = a.group();
    const std::size_t nx = a.size(), ng = G.order();
    std::size_t stable_X = 0, stable_G = 0;
    auto levels_X = detail::iterate_chain<F>(
        Subspace<F>::full(f, nx), min_depth,
        [&](const Subspace<F>& prev) {
            std::vector<FieldVector<F>> gens;
            for (const auto& v : prev.basis_vectors())
                for (std::size_t g = 0; g < ng; ++g) {
                    auto w = exactla::zero_vector(f, nx);
                    for (std::size_t x = 0; x < nx; ++x)
                        if (!f.is_zero(v[x])) {
                            w[a.act(x, g)] += v[x];
                            w[x] -= v[x];
                        }
                    gens.push_back(std::move(w));
                }
            return Subspace<F>::span(f, nx, gens);
        },
        stable_X);
    auto levels_G = augmentation_powers(f, G, levels_X.size(), stable_G);
    const std::size_t depth = std::max(levels_X.size(), levels_G.size()) - 1;
    AdaptedBasis<F> bx(f, levels_X), bg(f, levels_G);

    CoinvariantModule<F> c{levels_X, stable_X, levels_G, graded_dimensions(levels_X, depth), {}, bx, bg, {}};
    const auto orbit_count = racks::orbits(a, racks::OrbitMode::group_action).size();
    if (c.dim_P(0) != orbit_count)
        c.report.add("coinvariants_count_orbits", cat(c.dim_P(0), " vs ", orbit_count, " orbits"));

    // π̃(x) = π(x) − 1, in adapted coordinates of k[G]
    auto pi_tilde = [&](std::size_t k) {
        const auto v = bx.vector(k);
        auto img = exactla::zero_vector(f, ng);
        for (std::size_t x = 0; x < nx; ++x)
            if (!f.is_zero(v[x])) {
                img[a.pi(x)] += v[x];
                img[G.identity()] -= v[x];
            }
        return bg.coords(f, img);
    };
    for (std::size_t n = 0; n <= depth; ++n) {
        const auto cols = level_indices(bx, n), rows = level_indices(bg, n + 1);
        auto m = exactla::zeros(f, rows.size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            const auto co = pi_tilde(cols[j]);
            for (std::size_t k = 0; k < co.size(); ++k)
                if (!f.is_zero(co[k]) && bg.level(k) < n + 1)
                    c.report.add("pi_star_well_defined", cat("degree ", n, " basis vector ", cols[j]));
            for (std::size_t i = 0; i < rows.size(); ++i) m(i, j) = co[rows[i]];
        }
        c.pi_star.push_back(std::move(m));
    }
    for (auto k : level_indices(bx, AdaptedBasis<F>::infinite_level)) {
        const auto co = pi_tilde(k);
        for (std::size_t i = 0; i < co.size(); ++i)
            if (!f.is_zero(co[i]) && bg.level(i) != AdaptedBasis<F>::infinite_level)
                c.report.add("pi_star_well_defined", cat("stable basis vector ", k));
    }
    return c;
}

}  // namespace rackgraph::lmhopf
