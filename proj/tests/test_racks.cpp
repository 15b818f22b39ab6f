#include <gtest/gtest.h>

#include <set>

#include "rackgraph/corpus.hpp"
#include "rackgraph/racks/presentation.hpp"

using namespace rackgraph::racks;

namespace {

// Brute-force check of the right-action and rack laws, written without the
// library's validators.
bool brute_rack(const FiniteRack& r)
{
    const std::size_t n = r.size();
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y)
            for (Index z = 0; z < n; ++z)
                if (r.op(r.op(x, y), z) != r.op(r.op(x, z), r.op(y, z))) return false;
    for (Index y = 0; y < n; ++y) {
        std::set<Index> img;
        for (Index x = 0; x < n; ++x) img.insert(r.op(x, y));
        if (img.size() != n) return false;
    }
    return true;
}

std::size_t count_classes(const FiniteGroup& g)
{
    std::set<std::set<Index>> classes;
    for (Index x = 0; x < g.order(); ++x) {
        std::set<Index> c;
        for (Index h = 0; h < g.order(); ++h) c.insert(g.mul(g.mul(g.inv(h), x), h));
        classes.insert(c);
    }
    return classes.size();
}

}  // namespace

TEST(Groups, NamedGroupsAreGroups)
{
    for (auto& [name, g] : rackgraph::corpus::groups()) {
        EXPECT_TRUE(validate_group_table(g.table()).ok()) << name;
        for (Index a = 0; a < g.order(); ++a) EXPECT_EQ(g.mul(a, g.inv(a)), g.identity()) << name;
    }
    EXPECT_EQ(symmetric_group(3).group.order(), 6u);
    EXPECT_EQ(dihedral_group(4).order(), 8u);
    EXPECT_FALSE(dihedral_group(4).is_abelian());
    EXPECT_FALSE(quaternion_group().is_abelian());
    // Q8 has a unique involution, D4 has five.
    auto involutions = [](const FiniteGroup& g) {
        std::size_t k = 0;
        for (Index a = 0; a < g.order(); ++a) k += g.element_order(a) == 2;
        return k;
    };
    EXPECT_EQ(involutions(quaternion_group()), 1u);
    EXPECT_EQ(involutions(dihedral_group(4)), 5u);
}

TEST(Groups, BadTablesRejected)
{
    EXPECT_TRUE(validate_group_table({{0, 1}, {1, 1}}).mentions("inverse"));
    EXPECT_TRUE(validate_group_table({{1, 0}, {0, 1}}).ok());  // C2 with unit 1
    EXPECT_TRUE(validate_group_table({{0, 1}, {0, 1}}).mentions("identity"));
    EXPECT_THROW(FiniteGroup(Table{{0, 1}, {0, 1}}), rackgraph::Error);
    EXPECT_FALSE(validate_group_table({}).ok());
}

TEST(ValidateRack, DihedralThree)
{
    auto r = dihedral_quandle(3);
    for (Index x = 0; x < 3; ++x)
        for (Index y = 0; y < 3; ++y) EXPECT_EQ(r.op(x, y), (2 * y + 3 - x) % 3);
    EXPECT_TRUE(validate_rack(r).ok());
    EXPECT_TRUE(brute_rack(r));
}

TEST(ValidateRack, TrivialTwo) { EXPECT_TRUE(validate_rack(trivial_rack(2)).ok()); }

TEST(ValidateRack, ConstantColumnsFail)
{
    FiniteRack r(Table{{0, 1}, {0, 1}});
    auto rep = validate_rack(r);
    EXPECT_FALSE(rep.ok());
    EXPECT_TRUE(rep.mentions("translation_bijective"));
    EXPECT_EQ(brute_rack(r), rep.ok());
}

TEST(ValidateRack, AgreesWithBruteForceOnAllSizeTwoAndThreeTables)
{
    for (std::size_t n = 2; n <= 3; ++n) {
        std::size_t total = 1;
        for (std::size_t i = 0; i < n * n; ++i) total *= n;
        std::size_t racks = 0;
        for (std::size_t code = 0; code < total; ++code) {
            Table t(n, std::vector<Index>(n));
            std::size_t c = code;
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y) {
                    t[x][y] = c % n;
                    c /= n;
                }
            FiniteRack r(t);
            const bool ok = validate_rack(r).ok();
            EXPECT_EQ(ok, brute_rack(r));
            racks += ok;
        }
        // Labeled racks: 2 of order 2, 13 of order 3.
        EXPECT_EQ(racks, n == 2 ? 2u : 13u);
    }
}

TEST(ValidateAugmented, ConjugationRacks)
{
    for (auto& [name, a] : rackgraph::corpus::augmented()) {
        EXPECT_TRUE(validate_augmented(a).ok()) << name;
        EXPECT_TRUE(validate_rack(a.derived_rack()).ok()) << name;
        EXPECT_TRUE(brute_rack(a.derived_rack())) << name;
    }
}

TEST(ValidateAugmented, ToyAndSwap)
{
    EXPECT_TRUE(validate_augmented(rackgraph::corpus::c2_toy()).ok());
    auto c2 = cyclic_group(2);
    AugmentedRack swap(c2, Table{{0, 1}, {1, 0}}, {1, 1});
    EXPECT_TRUE(validate_augmented(swap).ok());
    AugmentedRack broken(c2, Table{{0, 1}, {1, 0}}, {1, 0});
    auto rep = validate_augmented(broken);
    EXPECT_TRUE(rep.mentions("equivariance"));
    bool at_x_u = false;
    for (auto& v : rep.violations) at_x_u |= v.identity == "equivariance" && v.witness == "(0,1)";
    EXPECT_TRUE(at_x_u);
}

TEST(ValidateAugmented, MutationsDetected)
{
    auto a = conjugation_rack(symmetric_group(3).group);
    auto act = a.action_table();
    auto pi = a.pi_map();
    auto bad_pi = pi;
    std::swap(bad_pi[1], bad_pi[2]);
    EXPECT_FALSE(validate_augmented(AugmentedRack(a.group(), act, bad_pi)).ok());
    auto bad_act = act;
    bad_act[0][0] = 1;
    bad_act[1][0] = 0;
    EXPECT_TRUE(validate_augmented(AugmentedRack(a.group(), bad_act, pi)).mentions("action_unit"));
    EXPECT_THROW(AugmentedRack(a.group(), act, {0, 1}), rackgraph::Error);
}

TEST(Constructors, ConjugationRacks)
{
    auto c3 = conjugation_rack(cyclic_group(3));
    EXPECT_EQ(c3.derived_rack(), trivial_rack(3));
    for (Index x = 0; x < 3; ++x) EXPECT_EQ(c3.pi(x), x);
    EXPECT_EQ(conjugation_rack(cyclic_group(1)).size(), 1u);
    auto s3 = symmetric_group(3).group;
    EXPECT_EQ(orbits(conjugation_rack(s3), OrbitMode::group_action).size(), 3u);
    EXPECT_EQ(identity_augmentation(s3), conjugation_rack(s3));
    EXPECT_EQ(orbits(identity_augmentation(cyclic_group(2)), OrbitMode::group_action).size(), 2u);
    for (auto& [name, g] : rackgraph::corpus::groups())
        EXPECT_EQ(orbits(conjugation_rack(g), OrbitMode::group_action).size(), count_classes(g)) << name;
}

TEST(Constructors, TranspositionClassIsDihedral)
{
    auto s3 = symmetric_group(3).group;
    auto t = conjugacy_class_rack(s3, rackgraph::corpus::noncentral_seed(s3, 2));
    ASSERT_EQ(t.size(), 3u);
    // Find a relabeling carrying the derived table to 2y − x mod 3.
    auto r = t.derived_rack(), d = dihedral_quandle(3);
    std::vector<Index> p{0, 1, 2};
    bool found = false;
    do {
        bool iso = true;
        for (Index x = 0; x < 3 && iso; ++x)
            for (Index y = 0; y < 3 && iso; ++y) iso = p[r.op(x, y)] == d.op(p[x], p[y]);
        found |= iso;
    } while (std::next_permutation(p.begin(), p.end()));
    EXPECT_TRUE(found);
}

TEST(Constructors, ClassRacks)
{
    auto g = dihedral_group(4);
    auto one = conjugacy_class_rack(g, {g.identity()});
    EXPECT_EQ(one.size(), 1u);
    EXPECT_EQ(one.derived_rack(), trivial_rack(1));
    auto c4 = rackgraph::corpus::c4_square_class();
    EXPECT_EQ(c4.size(), 1u);
    EXPECT_EQ(c4.pi(0), 2u);
    EXPECT_EQ(c4.group().generated_subgroup(c4.pi_map()).size(), 2u);
}

TEST(Orbits, Examples)
{
    auto t = trivial_augmented(3);
    EXPECT_EQ(orbits(t, OrbitMode::group_action).size(), 3u);
    EXPECT_EQ(orbits(t, OrbitMode::inner).size(), 3u);
    auto s3 = symmetric_group(3).group;
    auto tr = conjugacy_class_rack(s3, rackgraph::corpus::noncentral_seed(s3, 2));
    EXPECT_EQ(orbits(tr, OrbitMode::group_action).size(), 1u);
    EXPECT_EQ(orbits(tr, OrbitMode::inner).size(), 1u);
}

TEST(Orbits, InnerRefinesGroupAction)
{
    for (auto& [name, a] : rackgraph::corpus::augmented()) {
        auto go = orbits(a, OrbitMode::group_action), io = orbits(a, OrbitMode::inner);
        EXPECT_GE(io.size(), go.size()) << name;
        std::vector<std::size_t> gid(a.size());
        for (std::size_t k = 0; k < go.size(); ++k)
            for (auto x : go[k]) gid[x] = k;
        for (auto& o : io)
            for (auto x : o) EXPECT_EQ(gid[x], gid[o.front()]) << name;
        EXPECT_EQ(inner_orbits(a.derived_rack()), io) << name;
    }
}

TEST(InnerGroup, Orders)
{
    EXPECT_EQ(inner_group(trivial_rack(4)).group.order(), 1u);
    EXPECT_EQ(inner_group(trivial_rack(1)).group.order(), 1u);
    EXPECT_EQ(inner_group(dihedral_quandle(3)).group.order(), 6u);
    EXPECT_EQ(inner_group(dihedral_quandle(5)).group.order(), 10u);
    // R4: translations 2y − x generate reflections of a square through vertices only.
    EXPECT_EQ(inner_group(dihedral_quandle(4)).group.order(), 4u);
    for (auto& [name, r] : rackgraph::corpus::bare_racks()) {
        auto ig = inner_group(r);
        EXPECT_TRUE(validate_augmented(ig.augmented).ok()) << name;
        EXPECT_EQ(ig.augmented.derived_rack(), r) << name;
    }
    EXPECT_THROW(inner_group(dihedral_quandle(5), 4), rackgraph::Error);
}

TEST(Presentation, Examples)
{
    auto p1 = associated_group_presentation(trivial_rack(1));
    EXPECT_EQ(p1.generator_names.size(), 1u);
    EXPECT_EQ(p1.relations.size(), 1u);
    EXPECT_EQ(abelianization(p1).free_rank, 1u);
    auto p2 = associated_group_presentation(trivial_rack(2), {"a", "b"});
    EXPECT_EQ(p2.relations.size(), 4u);
    EXPECT_EQ(p2.render(p2.relations[1]), "a b a^-1 b^-1");
    EXPECT_EQ(abelianization(p2).free_rank, 2u);
    auto p3 = associated_group_presentation(dihedral_quandle(3));
    EXPECT_EQ(p3.generator_names.size(), 3u);
    EXPECT_EQ(p3.relations.size(), 9u);
    auto ab3 = abelianization(p3);
    EXPECT_EQ(ab3.free_rank, 1u);
    EXPECT_TRUE(ab3.torsion.empty());
    EXPECT_THROW(associated_group_presentation(trivial_rack(2), {"a"}), rackgraph::Error);
}

TEST(Presentation, AbelianizationRankIsInnerOrbitCount)
{
    for (auto& [name, a] : rackgraph::corpus::augmented()) {
        auto r = a.derived_rack();
        auto p = associated_group_presentation(r);
        EXPECT_TRUE(references_only_declared(p)) << name;
        auto ab = abelianization(p);
        EXPECT_EQ(ab.free_rank, inner_orbits(r).size()) << name;
        EXPECT_TRUE(ab.torsion.empty()) << name;
    }
}

TEST(InverseClosed, Examples)
{
    auto s3 = symmetric_group(3).group;
    EXPECT_TRUE(is_inverse_closed(conjugacy_class_rack(s3, rackgraph::corpus::noncentral_seed(s3, 2))));
    EXPECT_FALSE(is_inverse_closed(conjugacy_class_rack(cyclic_group(3), {1})));
    EXPECT_TRUE(is_inverse_closed(rackgraph::corpus::c4_square_class()));
    AugmentedRack twice(cyclic_group(2), Table{{0, 0}, {1, 1}}, {1, 1});
    EXPECT_THROW(is_inverse_closed(twice), rackgraph::Error);
}
