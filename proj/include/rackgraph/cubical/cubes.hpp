#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "rackgraph/racks/rack.hpp"

namespace rackgraph::cubical {

using racks::AugmentedRack;
using racks::Index;

/// Product n-cube (g; x₁,…,xₙ), i.e. the word (g,x₁) □ (1,x₂) □ … □ (1,xₙ).
/// n = 0 is the vertex g.
struct ProductCube {
    Index leading = 0;
    std::vector<Index> letters;

    std::size_t dimension() const { return letters.size(); }
    friend bool operator==(const ProductCube& a, const ProductCube& b)
    {
        return a.leading == b.leading && a.letters == b.letters;
    }
};

struct VertexToken {
    Index g;
};
struct ArrowToken {
    Index g;
    Index x;
};
using Token = std::variant<VertexToken, ArrowToken>;
using ArrowWord = std::vector<Token>;

/// Normal form of a □-word: leading = g₁⋯gₘ over all tokens, and the letter
/// of the k-th arrow is x_k conjugated by the product of everything after it.
inline ProductCube normalize_word(const ArrowWord& w, const AugmentedRack& a)
{
    if (w.empty()) throw Error("empty arrow word");
    const auto& G = a.group();
    auto group_part = [](const Token& t) {
        return std::visit([](const auto& v) { return v.g; }, t);
    };
    for (const auto& t : w) {
        if (group_part(t) >= G.order()) throw Error("token references a group element out of range");
        if (auto p = std::get_if<ArrowToken>(&t); p && p->x >= a.size())
            throw Error("token references a rack element out of range");
    }
    ProductCube c;
    c.leading = G.identity();
    // right-to-left sweep: `suffix` is the product of group parts to the right
    Index suffix = G.identity();
    std::vector<Index> rev;
    for (std::size_t k = w.size(); k-- > 0;) {
        if (const auto* p = std::get_if<ArrowToken>(&w[k])) rev.push_back(a.act(p->x, suffix));
        suffix = G.mul(group_part(w[k]), suffix);
    }
    c.leading = suffix;
    c.letters.assign(rev.rbegin(), rev.rend());
    return c;
}

inline ArrowWord to_word(const ProductCube& c, const AugmentedRack& a)
{
    if (c.letters.empty()) return {VertexToken{c.leading}};
    ArrowWord w;
    for (std::size_t k = 0; k < c.letters.size(); ++k)
        w.push_back(ArrowToken{k == 0 ? c.leading : a.group().identity(), c.letters[k]});
    return w;
}

enum class FaceSide { source, target };

/// Face obtained by collapsing factor i (1-based) to its source or target
/// vertex.
inline ProductCube face(const ProductCube& c, std::size_t i, FaceSide eps, const AugmentedRack& a)
{
    if (i < 1 || i > c.dimension())
        throw Error(rackgraph::detail::cat("face index ", i, " out of range for a ", c.dimension(), "-cube"));
    auto w = to_word(c, a);
    const auto arrow = std::get<ArrowToken>(w[i - 1]);
    const Index v = eps == FaceSide::source ? arrow.g : a.group().mul(arrow.g, a.pi(arrow.x));
    w[i - 1] = VertexToken{v};
    return normalize_word(w, a);
}

/// c1 □ c2.
inline ProductCube cube_product(const ProductCube& c1, const ProductCube& c2, const AugmentedRack& a)
{
    auto w = to_word(c1, a);
    const auto w2 = to_word(c2, a);
    w.insert(w.end(), w2.begin(), w2.end());
    return normalize_word(w, a);
}

}  // namespace rackgraph::cubical
