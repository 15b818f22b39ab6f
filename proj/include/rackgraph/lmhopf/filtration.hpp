#pragma once

#include <algorithm>
#include <vector>

#include "rackgraph/exactla/subspace.hpp"
#include "rackgraph/lmhopf/bialgebra.hpp"

namespace rackgraph::lmhopf {

using exactla::Subspace;

/// Decreasing chains Iⁿ(G) ⊆ k[G] and Iⁿ(A) ⊆ k[A], computed until both
/// stabilize. Levels beyond the stored ones equal the last stored level.
template <class F>
struct FiltrationLevels {
    std::vector<Subspace<F>> levels_G;  // index 0 = k[G]
    std::vector<Subspace<F>> levels_A;  // index 0 = k[A]
    std::size_t stable_G = 0;           // least s with I^s = I^(s+1)
    std::size_t stable_A = 0;

    const Subspace<F>& G(std::size_t n) const { return levels_G[std::min(n, levels_G.size() - 1)]; }
    const Subspace<F>& A(std::size_t n) const { return levels_A[std::min(n, levels_A.size() - 1)]; }
    std::size_t depth() const { return std::max(levels_G.size(), levels_A.size()) - 1; }
};

namespace detail {

template <class F>
FieldVector<F> g_minus_one(const F& f, std::size_t ng, Index g, Index e)
{
    auto v = exactla::zero_vector(f, ng);
    v[g] += f.one();
    v[e] -= f.one();
    return v;
}

/// A decreasing chain L⁰ ⊇ L¹ ⊇ … with L^{n+1} = step(Lⁿ), run until it
/// repeats; the result ends with the repeated level.
template <class F, class Step>
std::vector<Subspace<F>> iterate_chain(Subspace<F> start, std::size_t min_depth, Step step, std::size_t& stable)
{
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<Subspace<F>> chain{std::move(start)};
    stable = none;
    while (stable == none || chain.size() <= min_depth) {
        auto next = step(chain.back());
        if (stable == none && next == chain.back()) stable = chain.size() - 1;
        chain.push_back(std::move(next));
        if (chain.size() > 4096) throw Error("filtration failed to stabilize");
    }
    return chain;
}

}  // namespace detail

/// Augmentation ideal powers I⁰(G) = k[G], Iⁿ⁺¹(G) = I¹·Iⁿ, until stable.
template <class F>
std::vector<Subspace<F>> augmentation_powers(const F& f, const racks::FiniteGroup& G, std::size_t min_depth,
                                             std::size_t& stable)
{
    const std::size_t ng = G.order();
    std::vector<FieldVector<F>> aug;
    for (std::size_t g = 0; g < ng; ++g)
        if (g != G.identity()) aug.push_back(detail::g_minus_one(f, ng, g, G.identity()));
    return detail::iterate_chain<F>(
        Subspace<F>::full(f, ng), min_depth,
        [&](const Subspace<F>& prev) {
            std::vector<FieldVector<F>> gens;
            for (const auto& w : prev.basis_vectors())
                for (const auto& u : aug) gens.push_back(detail::group_algebra_mul(f, G, u, w));
            return Subspace<F>::span(f, ng, gens);
        },
        stable);
}

/// Iⁿ(G) as above and Iⁿ(A) = I¹(G)·Iⁿ⁻¹(A) + Iⁿ⁻¹(A)·I¹(G) with
/// I⁰(A) = k[A].
template <class F>
FiltrationLevels<F> augmentation_filtration(const LMBialgebra<F>& b, std::size_t min_depth = 1)
{
    detail::Ops<F> op{b};
    const auto& f = b.field;
    const std::size_t ng = b.h_dim(), na = b.a_dim();
    const Index e = b.graph.group.identity();
    std::vector<FieldVector<F>> aug;
    for (std::size_t g = 0; g < ng; ++g)
        if (g != e) aug.push_back(detail::g_minus_one(f, ng, g, e));

    FiltrationLevels<F> out;
    out.levels_G = augmentation_powers(f, b.graph.group, min_depth, out.stable_G);
    out.levels_A = detail::iterate_chain<F>(
        Subspace<F>::full(f, na), min_depth,
        [&](const Subspace<F>& prev) {
            std::vector<FieldVector<F>> gens;
            for (const auto& w : prev.basis_vectors())
                for (const auto& u : aug) {
                    gens.push_back(op.left(u, w));
                    gens.push_back(op.right(w, u));
                }
            return Subspace<F>::span(f, na, gens);
        },
        out.stable_A);
    return out;
}

/// J₁ = ker(k[G] → k[G/G₀]) and J_{n+1} = I¹·Jₙ + Jₙ·I¹, for the unit
/// component G₀. For connected graphs Jₙ = Iⁿ(G).
template <class F>
std::vector<Subspace<F>> relative_levels(const LMBialgebra<F>& b, std::size_t depth)
{
    detail::Ops<F> op{b};
    const auto& f = b.field;
    const auto& G = b.graph.group;
    const std::size_t ng = G.order();
    const auto uc = graphlike::unit_component(b.graph);
    std::vector<Index> coset(ng, ng);
    std::vector<FieldVector<F>> gens;
    for (std::size_t g = 0; g < ng; ++g) {
        if (coset[g] != ng) continue;
        // representative g; the coset gG₀ contributes h − g
        for (auto h0 : uc.vertices) {
            const Index h = G.mul(g, h0);
            coset[h] = g;
            if (h != g) gens.push_back(detail::g_minus_one(f, ng, h, g));
        }
    }
    std::vector<FieldVector<F>> aug;
    for (std::size_t g = 0; g < ng; ++g)
        if (g != G.identity()) aug.push_back(detail::g_minus_one(f, ng, g, G.identity()));
    std::vector<Subspace<F>> out{Subspace<F>::full(f, ng), Subspace<F>::span(f, ng, gens)};
    while (out.size() <= depth + 1) {
        std::vector<FieldVector<F>> next;
        for (const auto& w : out.back().basis_vectors())
            for (const auto& u : aug) {
                next.push_back(op.mul_g(u, w));
                next.push_back(op.mul_g(w, u));
            }
        out.push_back(Subspace<F>::span(f, ng, next));
    }
    return out;
}

/// φ(Iⁿ(A)) = Iⁿ⁺¹(G) when the graph is connected, and = Jₙ₊₁ in general.
template <class F>
ValidationReport verify_connected_lemma(const LMBialgebra<F>& b, const FiltrationLevels<F>& fl)
{
    using rackgraph::detail::cat;
    ValidationReport rep;
    const auto uc = graphlike::unit_component(b.graph);
    const std::size_t depth = fl.depth() + 1;
    const auto rel = relative_levels(b, depth);
    for (std::size_t n = 0; n <= depth; ++n) {
        const auto img = exactla::map_subspace(b.field, b.phi, fl.A(n));
        if (!fl.G(n + 1).contains(img)) rep.add("phi_raises_filtration", cat("n=", n));
        if (img != rel[n + 1]) rep.add("phi_image_is_relative_ideal", cat("n=", n, " dim ", img.dim(), " vs ",
                                                                          rel[n + 1].dim()));
        if (uc.is_connected && img != fl.G(n + 1))
            rep.add("phi_image_is_augmentation_power", cat("n=", n, " dim ", img.dim(), " vs ", fl.G(n + 1).dim()));
    }
    return rep;
}

}  // namespace rackgraph::lmhopf
