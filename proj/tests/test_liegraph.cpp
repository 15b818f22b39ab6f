#include <gtest/gtest.h>

#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "rackgraph/corpus.hpp"

using namespace rackgraph::liegraph;

namespace {

Mat random_matrix(std::mt19937_64& gen, Eigen::Index n, double scale)
{
    std::normal_distribution<double> d(0.0, 1.0);
    Mat a(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) a(i, j) = scale * d(gen);
    return a;
}

double rel_err(const Mat& a, const Mat& b) { return (a - b).norm() / std::max(1.0, b.norm()); }

}  // namespace

TEST(MatrixExp, AgreesWithEigenMatrixFunctions)
{
    std::mt19937_64 gen(17);
    for (double scale : {1e-3, 0.1, 1.0, 4.0, 20.0})
        for (Eigen::Index n : {1, 2, 3, 5, 8}) {
            const Mat a = random_matrix(gen, n, scale);
            const Mat ref = a.exp();
            EXPECT_LT(rel_err(matrix_exp(a), ref), 1e-10) << "scale " << scale << " n " << n;
        }
}

TEST(MatrixExp, NilpotentSeriesTerminates)
{
    Mat n = Mat::Zero(3, 3);
    n(0, 1) = 2;
    n(1, 2) = 3;
    n(0, 2) = -1;
    Mat expect = Mat::Identity(3, 3) + n + n * n / 2.0;
    EXPECT_EQ(matrix_exp(n), expect);
    Mat sq = Mat::Zero(2, 2);
    sq(0, 1) = 5;
    EXPECT_EQ(matrix_exp(sq), Mat::Identity(2, 2) + sq);
    EXPECT_EQ(matrix_exp(Mat::Zero(4, 4)), Mat::Identity(4, 4));
}

TEST(MatrixExp, RotationClosedForm)
{
    for (double t : {0.3, 1.0, 2.5, 10.0}) {
        Mat l = Mat::Zero(3, 3);
        l(0, 1) = -t;
        l(1, 0) = t;
        Mat rot = Mat::Identity(3, 3);
        rot(0, 0) = rot(1, 1) = std::cos(t);
        rot(0, 1) = -std::sin(t);
        rot(1, 0) = std::sin(t);
        EXPECT_LT((matrix_exp(l) - rot).cwiseAbs().maxCoeff(), 1e-13) << t;
    }
}

TEST(MatrixExp, InverseAndErrors)
{
    std::mt19937_64 gen(3);
    const Mat a = random_matrix(gen, 4, 2.0);
    EXPECT_LT((matrix_exp(a) * matrix_exp(-a) - Mat::Identity(4, 4)).norm(), 1e-10);
    EXPECT_THROW(matrix_exp(Mat::Zero(2, 3)), std::invalid_argument);
    Mat bad = Mat::Zero(2, 2);
    bad(0, 0) = std::nan("");
    EXPECT_THROW(matrix_exp(bad), std::overflow_error);
    EXPECT_EQ(matrix_exp(Mat(0, 0)).size(), 0);
}

TEST(Validate, CorpusSamples)
{
    for (auto& [name, l] : rackgraph::corpus::matrix_lm()) EXPECT_TRUE(validate_matrix_lm(l).ok()) << name;
}

TEST(Validate, StructureConstantsOfSo3)
{
    const auto fit = structure_constants(so3_adjoint());
    const auto exact = rackgraph::lmlie::so3_constants();
    EXPECT_LT(fit.residual, 1e-12);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (Eigen::Index k = 0; k < 3; ++k)
                EXPECT_NEAR(fit.c[i][j](k), static_cast<double>(exact[i][j][static_cast<std::size_t>(k)]), 1e-12);
}

TEST(Validate, BrokenInputs)
{
    auto l = so3_adjoint();
    l.rho[0] *= 1.5;
    auto rep = validate_matrix_lm(l);
    EXPECT_TRUE(rep.mentions("module_axiom") || rep.mentions("equivariance"));
    EXPECT_THROW(integrate(l), rackgraph::Error);

    auto dep = trivial_action_sample();
    dep.basis[1] = 2 * dep.basis[0];
    EXPECT_TRUE(validate_matrix_lm(dep).mentions("basis_independent"));

    auto open = trivial_action_sample();
    open.basis[1](0, 1) = 1;  // [D₁, D₁ + E₁₂] = E₁₂ is outside the span
    EXPECT_TRUE(validate_matrix_lm(open).mentions("bracket_closed"));

    auto shape = nilpotent_sample();
    shape.f = Mat::Zero(3, 1);
    EXPECT_TRUE(validate_matrix_lm(shape).mentions("shape"));
}

TEST(Integrate, NumericRackAxioms)
{
    for (auto& [name, l] : rackgraph::corpus::matrix_lm()) {
        auto rep = verify_rack_numeric(integrate(l), 60, 11);
        EXPECT_TRUE(rep.ok) << name << ": " << rep.witness;
        EXPECT_LT(rep.pi_at_zero, 1e-14) << name;
    }
}

TEST(Integrate, SelfDistributivityAgainstEigenExp)
{
    const auto l = so3_adjoint();
    auto tri = [&](const RowVec& x, const RowVec& y) -> RowVec { return x * l.action(y * l.f).exp(); };
    std::mt19937_64 gen(23);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    auto r = integrate(l);
    for (int s = 0; s < 30; ++s) {
        RowVec x(3), y(3), z(3);
        for (int i = 0; i < 3; ++i) {
            x(i) = u(gen);
            y(i) = u(gen);
            z(i) = u(gen);
        }
        EXPECT_LT((tri(tri(x, y), z) - tri(tri(x, z), tri(y, z))).cwiseAbs().maxCoeff(), 1e-10);
        EXPECT_LT((r.op(x, y) - tri(x, y)).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(Integrate, PerturbationDetected)
{
    auto l = so3_adjoint();
    l.rho[2] *= 1.05;
    auto rep = verify_rack_numeric(integrate_unchecked(l), 40, 5);
    EXPECT_FALSE(rep.ok);
    EXPECT_GT(std::max(rep.self_distributivity, rep.equivariance), 1e-6);
}

TEST(Integrate, TrivialActionIsIdentityOperation)
{
    auto r = integrate(trivial_action_sample());
    RowVec x(2), y(2);
    x << 0.5, -1.0;
    y << 0.25, 2.0;
    EXPECT_EQ(r.op(x, y), x);
    // π(y) = exp(diag(y·f)) with y·f = (0.25 + 6, 0.5 − 2)
    const Mat p = r.pi(y);
    EXPECT_NEAR(p(0, 0), std::exp(6.25), 1e-9 * std::exp(6.25));
    EXPECT_NEAR(p(1, 1), std::exp(-1.5), 1e-14);
    EXPECT_EQ(p(0, 1), 0.0);
}

TEST(Derivative, CentralDifferenceRecoversBracket)
{
    const auto exact = rackgraph::lmlie::leibniz_bracket(rackgraph::lmlie::adjoint_lm(rackgraph::lmlie::so3_constants()));
    auto rep = derivative_check(integrate(so3_adjoint()), 1e-3, &exact);
    EXPECT_TRUE(rep.ok);
    EXPECT_FALSE(rep.exact);
    EXPECT_NEAR(rep.ratio, 4.0, 0.5);
    EXPECT_LT(rep.bracket_error, 1e-12);

    const auto sl2 = rackgraph::lmlie::leibniz_bracket(rackgraph::lmlie::adjoint_lm(rackgraph::lmlie::sl2_constants()));
    EXPECT_TRUE(derivative_check(integrate(sl2_adjoint()), 1e-3, &sl2).ok);
}

TEST(Derivative, NilpotentIsExact)
{
    const auto exact = rackgraph::lmlie::leibniz_bracket(rackgraph::lmlie::nilpotent_lm());
    auto rep = derivative_check(integrate(nilpotent_sample()), 1e-3, &exact);
    EXPECT_TRUE(rep.exact);
    EXPECT_TRUE(rep.ok);
    // [m₂, m₂] = m₁ is not antisymmetric
    EXPECT_EQ(integrate(nilpotent_sample()).op(RowVec::Unit(2, 1), RowVec::Unit(2, 1)), (RowVec(2) << 1, 1).finished());
}

TEST(Derivative, WrongBracketRejected)
{
    auto exact = rackgraph::lmlie::leibniz_bracket(rackgraph::lmlie::adjoint_lm(rackgraph::lmlie::so3_constants()));
    exact.bracket[0][1][2] = 2;
    EXPECT_FALSE(derivative_check(integrate(so3_adjoint()), 1e-3, &exact).ok);
    auto small = rackgraph::lmlie::leibniz_bracket(rackgraph::lmlie::line_lm());
    EXPECT_THROW(derivative_check(integrate(so3_adjoint()), 1e-3, &small), rackgraph::Error);
}
