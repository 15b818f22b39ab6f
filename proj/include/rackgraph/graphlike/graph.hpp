#pragma once

#include <cstddef>
#include <vector>

#include "rackgraph/error.hpp"

namespace rackgraph::graphlike {

using Index = std::size_t;

struct Arrow {
    Index s;
    Index t;
    friend bool operator==(const Arrow& a, const Arrow& b) { return a.s == b.s && a.t == b.t; }
};

/// Directed graph with loops and multiple arrows allowed.
struct DirectedMultigraph {
    std::size_t vertex_count = 0;
    std::vector<Arrow> arrows;

    void check() const
    {
        for (std::size_t a = 0; a < arrows.size(); ++a)
            if (arrows[a].s >= vertex_count || arrows[a].t >= vertex_count)
                throw Error(rackgraph::detail::cat("arrow ", a, " has an endpoint out of range"));
    }

    friend bool operator==(const DirectedMultigraph& a, const DirectedMultigraph& b)
    {
        return a.vertex_count == b.vertex_count && a.arrows == b.arrows;
    }
};

inline DirectedMultigraph interval_graph() { return {2, {{0, 1}}}; }
inline DirectedMultigraph point_graph() { return {1, {}}; }

/// Q1 □ Q2. Vertex (v1, v2) has index v1·|V2| + v2. Arrows A1×V2 come
/// first (index a1·|V2| + v2), then V1×A2 (offset + v1·|A2| + a2).
inline DirectedMultigraph cartesian_product(const DirectedMultigraph& q1, const DirectedMultigraph& q2)
{
    const std::size_t n2 = q2.vertex_count;
    DirectedMultigraph out{q1.vertex_count * n2, {}};
    out.arrows.reserve(q1.arrows.size() * n2 + q1.vertex_count * q2.arrows.size());
    for (const auto& a1 : q1.arrows)
        for (std::size_t v2 = 0; v2 < n2; ++v2) out.arrows.push_back({a1.s * n2 + v2, a1.t * n2 + v2});
    for (std::size_t v1 = 0; v1 < q1.vertex_count; ++v1)
        for (const auto& a2 : q2.arrows) out.arrows.push_back({v1 * n2 + a2.s, v1 * n2 + a2.t});
    return out;
}

/// A vertex map and an arrow map between two graphs.
struct GraphMap {
    std::vector<Index> vertices;
    std::vector<Index> arrows;
};

/// Whether m is a bijective graph morphism from a to b.
inline bool is_isomorphism(const DirectedMultigraph& a, const DirectedMultigraph& b, const GraphMap& m)
{
    if (m.vertices.size() != a.vertex_count || a.vertex_count != b.vertex_count) return false;
    if (m.arrows.size() != a.arrows.size() || a.arrows.size() != b.arrows.size()) return false;
    std::vector<bool> hv(b.vertex_count, false), ha(b.arrows.size(), false);
    for (auto v : m.vertices) {
        if (v >= b.vertex_count || hv[v]) return false;
        hv[v] = true;
    }
    for (std::size_t i = 0; i < a.arrows.size(); ++i) {
        const Index j = m.arrows[i];
        if (j >= b.arrows.size() || ha[j]) return false;
        ha[j] = true;
        if (b.arrows[j].s != m.vertices[a.arrows[i].s] || b.arrows[j].t != m.vertices[a.arrows[i].t])
            return false;
    }
    return true;
}

/// The canonical isomorphism (Q1 □ Q2) □ Q3 → Q1 □ (Q2 □ Q3).
inline GraphMap associator(const DirectedMultigraph& q1, const DirectedMultigraph& q2,
                           const DirectedMultigraph& q3)
{
    const std::size_t v1 = q1.vertex_count, v2 = q2.vertex_count, v3 = q3.vertex_count;
    const std::size_t a1 = q1.arrows.size(), a2 = q2.arrows.size(), a3 = q3.arrows.size();
    GraphMap m;
    // ((x,y),z) -> (x,(y,z)): both have index (x·v2 + y)·v3 + z
    m.vertices.resize(v1 * v2 * v3);
    for (std::size_t i = 0; i < m.vertices.size(); ++i) m.vertices[i] = i;

    // left-hand arrow layout: [A(Q1□Q2) × V3] then [V(Q1□Q2) × A3], where
    // A(Q1□Q2) = [A1×V2] ⊔ [V1×A2]
    const std::size_t a12 = a1 * v2 + v1 * a2;
    const std::size_t a23 = a2 * v3 + v2 * a3;
    // right-hand layout: [A1 × V(Q2□Q3)] then [V1 × A(Q2□Q3)]
    auto right_a1 = [&](Index a, Index y, Index z) { return a * (v2 * v3) + y * v3 + z; };
    auto right_v1 = [&](Index x, Index b23) { return a1 * v2 * v3 + x * a23 + b23; };
    m.arrows.resize(a12 * v3 + v1 * v2 * a3);
    for (std::size_t b = 0; b < a12; ++b)
        for (std::size_t z = 0; z < v3; ++z) {
            const Index left = b * v3 + z;
            if (b < a1 * v2) {
                const Index a = b / v2, y = b % v2;
                m.arrows[left] = right_a1(a, y, z);
            } else {
                const Index r = b - a1 * v2, x = r / a2, a = r % a2;
                m.arrows[left] = right_v1(x, a * v3 + z);  // arrow (a, z) of Q2□Q3
            }
        }
    for (std::size_t w = 0; w < v1 * v2; ++w)
        for (std::size_t c = 0; c < a3; ++c) {
            const Index left = a12 * v3 + w * a3 + c;
            const Index x = w / v2, y = w % v2;
            m.arrows[left] = right_v1(x, a2 * v3 + y * a3 + c);  // arrow (y, c) of Q2□Q3
        }
    return m;
}

}  // namespace rackgraph::graphlike
