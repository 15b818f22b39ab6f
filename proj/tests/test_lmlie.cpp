#include <gtest/gtest.h>

#include "rackgraph/corpus.hpp"
#include "rackgraph/lmlie/efunctor.hpp"

using namespace rackgraph::lmlie;

namespace {

// Dimensions of the free Lie (super)algebra on n generators of degree 1,
// read off the PBW factorisation of the tensor algebra: ∏ factors = 1/(1 − n t).
std::vector<std::size_t> free_dims(std::size_t n, std::size_t D, bool super)
{
    std::vector<long long> series(D + 1, 0);  // product of the factors found so far
    series[0] = 1;
    std::vector<std::size_t> out{0};
    long long npow = 1;
    for (std::size_t k = 1; k <= D; ++k) {
        npow *= static_cast<long long>(n);
        const long long dk = npow - series[k];
        out.push_back(static_cast<std::size_t>(dk));
        for (long long r = 0; r < dk; ++r) {
            if (super && k % 2 == 1) {
                for (std::size_t i = D; i >= k; --i) series[i] += series[i - k];
            } else {
                for (std::size_t i = k; i <= D; ++i) series[i] += series[i - k];
            }
        }
    }
    return out;
}

QMatrix qmat(std::size_t r, std::size_t c, std::initializer_list<std::tuple<std::size_t, std::size_t, int>> entries)
{
    QMatrix m(r, c, Rational(0));
    for (auto [i, j, v] : entries) m(i, j) = v;
    return m;
}

}  // namespace

TEST(FreeDimsOracle, KnownValues)
{
    EXPECT_EQ(free_dims(2, 5, false), (std::vector<std::size_t>{0, 2, 1, 2, 3, 6}));
    EXPECT_EQ(free_dims(1, 3, true), (std::vector<std::size_t>{0, 1, 1, 0}));
}

TEST(Validate, CorpusAlgebras)
{
    for (auto& [name, l] : rackgraph::corpus::lm_lie()) EXPECT_TRUE(validate_lm_lie(l).ok()) << name;
}

TEST(Validate, BrokenExamples)
{
    auto l = nilpotent_lm();
    l.f(0, 0) = 1;  // f(m₂^a) = f(m₁) = a but [f(m₂), a] = 0
    EXPECT_TRUE(validate_lm_lie(l).mentions("equivariance"));

    auto s = adjoint_lm(sl2_constants());
    s.c[0][1][2] = 2;
    auto rep = validate_lm_lie(s);
    EXPECT_TRUE(rep.mentions("antisymmetry"));

    auto shape = line_lm();
    shape.rho.clear();
    EXPECT_THROW(validate_lm_lie(shape), rackgraph::Error);
}

TEST(Leibniz, NilpotentExample)
{
    auto b = leibniz_bracket(nilpotent_lm());
    ASSERT_EQ(b.dim, 2u);
    EXPECT_EQ(b.bracket[1][1], (QVector{1, 0}));  // [m₂, m₂] = m₂^a = m₁
    EXPECT_EQ(b.bracket[0][1], (QVector{0, 0}));
    EXPECT_EQ(b.bracket[1][0], (QVector{0, 0}));
    EXPECT_FALSE(b.is_antisymmetric());
    EXPECT_TRUE(verify_leibniz(b).ok());
}

TEST(Leibniz, AdjointIsLieBracket)
{
    const auto c = so3_constants();
    auto b = leibniz_bracket(adjoint_lm(c));
    EXPECT_TRUE(b.is_antisymmetric());
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(b.bracket[i][j], c[i][j]);
}

TEST(Leibniz, IdentityFailureDetected)
{
    // [x,x] = y, [x,y] = x, [y,x] = y, [y,y] = 0
    LeibnizAlgebra b{2, {{{0, 1}, {1, 0}}, {{0, 1}, {0, 0}}}};
    // [x,[x,y]] = y but [[x,x],y] − [[x,y],x] = −y
    EXPECT_TRUE(verify_leibniz(b).mentions("right_leibniz"));
}

TEST(EFunctor, LowDegreesBothConventions)
{
    for (auto conv : {SignConvention::graded_koszul, SignConvention::plain})
        for (auto& [name, l] : rackgraph::corpus::lm_lie()) {
            auto t = e_functor(l, 1, conv);
            EXPECT_TRUE(t.stabilized);
            EXPECT_EQ(t.dims(), (std::vector<std::size_t>{l.dim_g, l.dim_m})) << name;
            EXPECT_TRUE(verify_e_truncation(t, l).ok()) << name << " " << convention_name(conv);
        }
}

TEST(EFunctor, FreeOnOddGenerators)
{
    for (std::size_t n : {1, 2}) {
        const std::size_t D = n == 1 ? 4 : 3;
        auto k = e_functor(abelian_lm(n), D, SignConvention::graded_koszul);
        EXPECT_EQ(k.dims(), free_dims(n, D, true)) << n;
        EXPECT_TRUE(verify_e_truncation(k, abelian_lm(n)).ok());
        auto p = e_functor(abelian_lm(n), D, SignConvention::plain);
        EXPECT_EQ(p.dims(), free_dims(n, D, false)) << n;
        EXPECT_TRUE(verify_e_truncation(p, abelian_lm(n)).ok());
    }
    EXPECT_EQ(e_functor(abelian_lm(1), 3).dims(), (std::vector<std::size_t>{0, 1, 1, 0}));
}

TEST(EFunctor, LineKillsEverythingAboveTwo)
{
    // [m,a] = 0 so only [m,m] survives in degree 2, and [m,[m,m]] = 0
    auto t = e_functor(line_lm(), 3);
    EXPECT_EQ(t.dims(), (std::vector<std::size_t>{1, 1, 1, 0}));
    EXPECT_TRUE(verify_e_truncation(t, line_lm()).ok());
    // d[m,m] = [a,m] − [m,a] = 0
    EXPECT_TRUE(is_zero(t.d(2, unit(1, 0))));
}

TEST(EFunctor, DifferentialAndDerivationUpToThree)
{
    for (auto& [name, l] : rackgraph::corpus::lm_lie()) {
        if (l.dim_g > 1) continue;
        auto t = e_functor(l, 3);
        EXPECT_TRUE(t.stabilized) << name;
        EXPECT_EQ(t.dims_previous, t.dims()) << name;
        auto rep = verify_e_truncation(t, l);
        EXPECT_TRUE(rep.ok()) << name << " " << (rep.ok() ? "" : rep.violations.front().identity);
    }
}

TEST(EFunctor, AdjointDegreeTwo)
{
    for (auto& [name, l] : rackgraph::corpus::lm_lie()) {
        if (l.dim_g != 3) continue;
        auto t = e_functor(l, 2);
        EXPECT_TRUE(verify_e_truncation(t, l).ok()) << name;
    }
}

TEST(EFunctor, Errors)
{
    EXPECT_THROW(e_functor(line_lm(), 0), rackgraph::Error);
    EXPECT_THROW(e_functor(line_lm(), 3, SignConvention::graded_koszul, {3, 7}), rackgraph::Error);
    EXPECT_THROW(e_functor(abelian_lm(2), 3, SignConvention::graded_koszul, {0, 4}), rackgraph::Error);
    EXPECT_THROW(parse_convention("signed"), rackgraph::Error);
    EXPECT_EQ(parse_convention("koszul"), SignConvention::graded_koszul);
}

TEST(Morphism, NilpotentOntoLine)
{
    auto src = nilpotent_lm(), dst = line_lm();
    LMMorphism m{qmat(1, 1, {{0, 0, 1}}), qmat(1, 2, {{0, 1, 1}})};
    EXPECT_TRUE(validate_morphism(src, dst, m).ok());
    auto ts = e_functor(src, 3), td = e_functor(dst, 3);
    auto mats = e_morphism(ts, td, m, dst);
    ASSERT_EQ(mats.size(), 4u);
    EXPECT_EQ(mats[1], m.beta);
    EXPECT_TRUE(verify_e_morphism(ts, td, mats).ok());

    LMMorphism bad{qmat(1, 1, {{0, 0, 1}}), qmat(1, 2, {{0, 0, 1}, {0, 1, 1}})};
    EXPECT_TRUE(validate_morphism(src, dst, bad).mentions("commutes_with_f"));
    auto bad_mats = mats;
    bad_mats[1](0, 0) = 1;
    EXPECT_FALSE(verify_e_morphism(ts, td, bad_mats).ok());
}

TEST(Morphism, IdentityOnAdjoint)
{
    auto l = adjoint_lm(so3_constants());
    QMatrix id(3, 3, Rational(0));
    for (std::size_t i = 0; i < 3; ++i) id(i, i) = 1;
    LMMorphism m{id, id};
    EXPECT_TRUE(validate_morphism(l, l, m).ok());
    auto t = e_functor(l, 1);
    auto mats = e_morphism(t, t, m, l);
    EXPECT_EQ(mats[0], id);
    EXPECT_TRUE(verify_e_morphism(t, t, mats).ok());
}

TEST(EFunctor, ZeroModuleStaysInDegreeZero)
{
    LMLieAlgebra l{3, 0, sl2_constants(), std::vector<QMatrix>(3, QMatrix(0, 0, Rational(0))), QMatrix(3, 0, Rational(0))};
    ASSERT_TRUE(validate_lm_lie(l).ok());
    auto t = e_functor(l, 3);
    EXPECT_EQ(t.dims(), (std::vector<std::size_t>{3, 0, 0, 0}));
    EXPECT_TRUE(verify_e_truncation(t, l).ok());
}

TEST(EFunctor, PlainConventionNeedsAbelianImage)
{
    for (auto& [name, l] : rackgraph::corpus::lm_lie()) {
        if (l.dim_g > 1) continue;
        EXPECT_TRUE(verify_e_truncation(e_functor(l, 3, SignConvention::plain), l).ok()) << name;
    }
    // unsigned rule: d²[m,m'] = 2[f(m), f(m')], nonzero for the adjoint sl₂
    auto sl2 = adjoint_lm(sl2_constants());
    auto rep = verify_e_truncation(e_functor(sl2, 3, SignConvention::plain), sl2);
    EXPECT_TRUE(rep.mentions("d_squared_zero"));
}
