#pragma once

#include <string>
#include <vector>

#include "rackgraph/exactla/smith.hpp"
#include "rackgraph/racks/rack.hpp"

namespace rackgraph::racks {

/// A letter of a group word: generator index with exponent ±1.
struct Letter {
    Index generator;
    int exponent;
    friend bool operator==(const Letter& a, const Letter& b)
    {
        return a.generator == b.generator && a.exponent == b.exponent;
    }
};

using Word = std::vector<Letter>;

/// Group presentation: each relation is a word equal to the identity.
struct Presentation {
    std::vector<std::string> generator_names;
    std::vector<Word> relations;

    std::string render(const Word& w) const
    {
        std::string s;
        for (const auto& l : w) {
            if (!s.empty()) s += ' ';
            s += generator_names.at(l.generator);
            if (l.exponent < 0) s += "^-1";
        }
        return s.empty() ? "1" : s;
    }
};

/// Presentation of the associated group: one generator per element, and
/// for each ordered pair (i, j) the relator τ_i τ_j τ_{i◁j}⁻¹ τ_j⁻¹.
inline Presentation associated_group_presentation(const FiniteRack& r,
                                                  std::vector<std::string> names = {})
{
    if (names.empty())
        for (std::size_t i = 0; i < r.size(); ++i) names.push_back("t" + std::to_string(i));
    if (names.size() != r.size()) throw Error("one generator name per rack element required");
    Presentation p{std::move(names), {}};
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r.size(); ++j)
            p.relations.push_back({{i, 1}, {j, 1}, {r.op(i, j), -1}, {j, -1}});
    return p;
}

inline bool references_only_declared(const Presentation& p)
{
    for (const auto& w : p.relations)
        for (const auto& l : w)
            if (l.generator >= p.generator_names.size() || (l.exponent != 1 && l.exponent != -1))
                return false;
    return true;
}

/// Abelianization Z^free_rank ⊕ ⊕ Z/torsion_i.
struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<exactla::BigInt> torsion;
};

/// Relation matrix (one row per relator, exponent sums per generator)
/// reduced to Smith normal form.
inline AbelianGroup abelianization(const Presentation& p)
{
    const std::size_t n = p.generator_names.size();
    exactla::Matrix<exactla::BigInt> m(p.relations.size(), n, exactla::BigInt(0));
    for (std::size_t i = 0; i < p.relations.size(); ++i)
        for (const auto& l : p.relations[i]) m(i, l.generator) += l.exponent;
    const auto snf = exactla::smith_normal_form(m);
    return {n - snf.rank, snf.torsion()};
}

}  // namespace rackgraph::racks
