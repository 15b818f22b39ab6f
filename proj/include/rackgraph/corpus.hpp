#pragma once

// The named sample structures shared by the tests, the acceptance suite and
// `rackgraph corpus`.

#include <string>
#include <utility>
#include <vector>

#include "rackgraph/io/schema.hpp"

namespace rackgraph::corpus {

using racks::AugmentedRack;
using racks::FiniteGroup;
using racks::FiniteRack;

template <class T>
using Named = std::vector<std::pair<std::string, T>>;

inline Named<FiniteGroup> groups()
{
    return {{"C1", racks::cyclic_group(1)},       {"C2", racks::cyclic_group(2)},
            {"C3", racks::cyclic_group(3)},       {"C4", racks::cyclic_group(4)},
            {"S3", racks::symmetric_group(3).group}, {"D4", racks::dihedral_group(4)},
            {"Q8", racks::quaternion_group()}};
}

inline Named<FiniteRack> bare_racks()
{
    Named<FiniteRack> out;
    for (std::size_t k = 1; k <= 3; ++k) out.emplace_back("T" + std::to_string(k), racks::trivial_rack(k));
    for (std::size_t n = 3; n <= 6; ++n) out.emplace_back("R" + std::to_string(n), racks::dihedral_quandle(n));
    return out;
}

/// X = {x}, G = C₂, π(x) = u, trivial action.
inline AugmentedRack c2_toy()
{
    return AugmentedRack(racks::cyclic_group(2), racks::Table{{0, 0}}, {1});
}

/// C₄ acting on the class {u²}; the unit component is the proper
/// subgroup {1, u²}.
inline AugmentedRack c4_square_class() { return racks::conjugacy_class_rack(racks::cyclic_group(4), {2}); }

/// Smallest non-central element of the given order, if any.
inline std::vector<racks::Index> noncentral_seed(const FiniteGroup& g, std::size_t order)
{
    for (std::size_t x = 0; x < g.order(); ++x)
        if (g.element_order(x) == order && g.conjugacy_class(x).size() > 1) return {x};
    return {};
}

/// Conjugation racks of C₂ … Q₈, conjugacy-class racks, the toy and
/// C₄/{u²} samples, trivial racks over the trivial group, and the inner
/// augmentations of the dihedral quandles.
inline Named<AugmentedRack> augmented()
{
    Named<AugmentedRack> out;
    for (auto& [name, g] : groups())
        if (g.order() > 1) out.emplace_back("conj_" + name, racks::conjugation_rack(g));
    const auto s3 = racks::symmetric_group(3).group;
    const auto d4 = racks::dihedral_group(4);
    const auto q8 = racks::quaternion_group();
    out.emplace_back("class_S3_transpositions", racks::conjugacy_class_rack(s3, noncentral_seed(s3, 2)));
    out.emplace_back("class_S3_3cycles", racks::conjugacy_class_rack(s3, noncentral_seed(s3, 3)));
    out.emplace_back("class_D4_reflections", racks::conjugacy_class_rack(d4, noncentral_seed(d4, 2)));
    out.emplace_back("class_Q8_i", racks::conjugacy_class_rack(q8, noncentral_seed(q8, 4)));
    out.emplace_back("class_C4_u2", c4_square_class());
    out.emplace_back("toy_C2", c2_toy());
    for (std::size_t k = 1; k <= 3; ++k) out.emplace_back("trivial_T" + std::to_string(k), racks::trivial_augmented(k));
    for (std::size_t n = 3; n <= 6; ++n)
        out.emplace_back("inner_R" + std::to_string(n), racks::inner_group(racks::dihedral_quandle(n)).augmented);
    return out;
}

inline Named<lmlie::LMLieAlgebra> lm_lie()
{
    return {{"sl2_adjoint", lmlie::adjoint_lm(lmlie::sl2_constants())},
            {"so3_adjoint", lmlie::adjoint_lm(lmlie::so3_constants())},
            {"nilpotent", lmlie::nilpotent_lm()},
            {"one_generator", lmlie::abelian_lm(1)},
            {"line", lmlie::line_lm()}};
}

inline Named<liegraph::MatrixLMLie> matrix_lm()
{
    return {{"so3_matrix", liegraph::so3_adjoint()},
            {"sl2_matrix", liegraph::sl2_adjoint()},
            {"nilpotent_matrix", liegraph::nilpotent_sample()},
            {"trivial_action_matrix", liegraph::trivial_action_sample()}};
}

/// Every sample as a file name and canonical document.
inline Named<io::json> documents()
{
    using io::Kind;
    Named<io::json> out;
    for (auto& [n, g] : groups()) out.emplace_back("group_" + n + ".json", io::with_header(io::to_json(g), Kind::group));
    for (auto& [n, r] : bare_racks()) out.emplace_back("rack_" + n + ".json", io::with_header(io::to_json(r), Kind::rack));
    for (auto& [n, a] : augmented())
        out.emplace_back("aug_" + n + ".json", io::with_header(io::to_json(a), Kind::augmented));
    for (const char* n : {"toy_C2", "class_C4_u2", "conj_S3"})
        for (auto& [m, a] : augmented())
            if (m == n)
                out.emplace_back(std::string("graph_") + n + ".json",
                                 io::with_header(io::to_json(graphlike::rack_to_graph(a)), Kind::graph));
    for (auto& [n, l] : lm_lie()) out.emplace_back("lie_" + n + ".json", io::with_header(io::to_json(l), Kind::lm_lie));
    for (auto& [n, l] : matrix_lm())
        out.emplace_back("mat_" + n + ".json", io::with_header(io::to_json(l), Kind::matrix_lm));
    return out;
}

}  // namespace rackgraph::corpus
