#pragma once

// Integration of a matrix LM Lie algebra f: X → 𝔤 ⊆ gl(m) to the linear
// augmented rack x ◁ y = x·exp(ρ(f(y))), π(x) = exp(f(x)). Vectors of X are
// rows; ρ(a) acts on the right.

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "rackgraph/error.hpp"
#include "rackgraph/liegraph/expm.hpp"
#include "rackgraph/lmlie/algebra.hpp"

namespace rackgraph::liegraph {

struct MatrixLMLie {
    std::size_t m = 0;           // 𝔤 ⊆ gl(m)
    std::vector<Mat> basis;      // basis matrices of 𝔤
    std::size_t dim_x = 0;
    std::vector<Mat> rho;        // per basis element, dim_x × dim_x, x^a = x·rho[a]
    Mat f;                       // dim_x × dim 𝔤, f(x) = x·f in basis coordinates

    std::size_t dim_g() const { return basis.size(); }

    Mat element(const RowVec& coords) const
    {
        Mat out = Mat::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
        for (std::size_t k = 0; k < basis.size(); ++k) out += coords(static_cast<Eigen::Index>(k)) * basis[k];
        return out;
    }

    Mat action(const RowVec& coords) const
    {
        Mat out = Mat::Zero(static_cast<Eigen::Index>(dim_x), static_cast<Eigen::Index>(dim_x));
        for (std::size_t k = 0; k < rho.size(); ++k) out += coords(static_cast<Eigen::Index>(k)) * rho[k];
        return out;
    }
};

struct Tolerances {
    double structure = 1e-10;
    double independence = 1e-10;
};

/// Structure constants c[i][j] (coordinates of [B_i, B_j]) by least squares.
struct StructureFit {
    std::vector<std::vector<RowVec>> c;
    double residual = 0;
};

inline Eigen::VectorXd flatten(const Mat& a) { return Eigen::Map<const Eigen::VectorXd>(a.data(), a.size()); }

inline StructureFit structure_constants(const MatrixLMLie& l)
{
    const auto n = static_cast<Eigen::Index>(l.dim_g());
    StructureFit fit;
    fit.c.assign(l.dim_g(), std::vector<RowVec>(l.dim_g(), RowVec::Zero(n)));
    if (n == 0) return fit;
    Mat basis(static_cast<Eigen::Index>(l.m * l.m), n);
    for (Eigen::Index k = 0; k < n; ++k) basis.col(k) = flatten(l.basis[static_cast<std::size_t>(k)]);
    const auto qr = basis.colPivHouseholderQr();
    for (std::size_t i = 0; i < l.dim_g(); ++i)
        for (std::size_t j = 0; j < l.dim_g(); ++j) {
            const Mat comm = l.basis[i] * l.basis[j] - l.basis[j] * l.basis[i];
            const Eigen::VectorXd target = flatten(comm);
            const Eigen::VectorXd sol = qr.solve(target);
            fit.residual = std::max(fit.residual, (basis * sol - target).norm());
            fit.c[i][j] = sol.transpose();
        }
    return fit;
}

/// Matrix of y ↦ [y, B_a] on row coordinate vectors.
inline Mat right_ad(const StructureFit& fit, std::size_t a)
{
    const auto n = static_cast<Eigen::Index>(fit.c.size());
    Mat out(n, n);
    for (Eigen::Index k = 0; k < n; ++k) out.row(k) = fit.c[static_cast<std::size_t>(k)][a];
    return out;
}

/// Independence, closure, R_[a,b] = R_a R_b − R_b R_a, and f(x·R_a) = [f(x), a].
inline ValidationReport validate_matrix_lm(const MatrixLMLie& l, Tolerances tol = {})
{
    using rackgraph::detail::cat;
    ValidationReport rep;
    const auto dx = static_cast<Eigen::Index>(l.dim_x), ng = static_cast<Eigen::Index>(l.dim_g());
    for (const auto& b : l.basis)
        if (b.rows() != static_cast<Eigen::Index>(l.m) || b.cols() != static_cast<Eigen::Index>(l.m)) {
            rep.add("shape", "basis matrix");
            return rep;
        }
    if (l.rho.size() != l.dim_g()) rep.add("shape", "one action matrix per basis element");
    for (const auto& r : l.rho)
        if (r.rows() != dx || r.cols() != dx) rep.add("shape", "action matrix");
    if (l.f.rows() != dx || l.f.cols() != ng) rep.add("shape", "f");
    if (!rep.ok()) return rep;

    if (ng > 0) {
        Mat basis(static_cast<Eigen::Index>(l.m * l.m), ng);
        for (Eigen::Index k = 0; k < ng; ++k) basis.col(k) = flatten(l.basis[static_cast<std::size_t>(k)]);
        Eigen::JacobiSVD<Mat> svd(basis);
        if (svd.singularValues()(ng - 1) < tol.independence) rep.add("basis_independent", "");
    }
    const auto fit = structure_constants(l);
    if (fit.residual > tol.structure) rep.add("bracket_closed", cat("residual ", fit.residual));
    for (std::size_t a = 0; a < l.dim_g(); ++a) {
        for (std::size_t b = 0; b < l.dim_g(); ++b) {
            const Mat lhs = l.action(fit.c[a][b]);
            const Mat rhs = l.rho[a] * l.rho[b] - l.rho[b] * l.rho[a];
            const double r = (lhs - rhs).norm();
            if (r > tol.structure) rep.add("module_axiom", cat("(", a, ",", b, ") residual ", r));
        }
        const double r = (l.rho[a] * l.f - l.f * right_ad(fit, a)).norm();
        if (r > tol.structure) rep.add("equivariance", cat("a=", a, " residual ", r));
    }
    return rep;
}

class LinearLieRack {
public:
    explicit LinearLieRack(MatrixLMLie l) : l_(std::move(l)) {}

    /// Checks the input first; throws with the first violation.
    static LinearLieRack integrate(MatrixLMLie l, Tolerances tol = {})
    {
        const auto rep = validate_matrix_lm(l, tol);
        if (!rep.ok())
            throw Error("matrix LM Lie algebra fails validation: " + rep.violations.front().identity + " " +
                        rep.violations.front().witness);
        return LinearLieRack(std::move(l));
    }

    const MatrixLMLie& algebra() const { return l_; }
    RowVec f(const RowVec& x) const { return x * l_.f; }
    Mat pi(const RowVec& x) const { return matrix_exp(l_.element(f(x))); }
    Mat translation(const RowVec& y) const { return matrix_exp(l_.action(f(y))); }
    RowVec op(const RowVec& x, const RowVec& y) const { return x * translation(y); }

private:
    MatrixLMLie l_;
};

inline LinearLieRack integrate(const MatrixLMLie& l, Tolerances tol = {}) { return LinearLieRack::integrate(l, tol); }

/// Skips validation; used to probe deliberately broken inputs.
inline LinearLieRack integrate_unchecked(const MatrixLMLie& l) { return LinearLieRack(l); }

struct NumericReport {
    double self_distributivity = 0;
    double equivariance = 0;
    double pi_at_zero = 0;
    double linearity = 0;
    std::size_t samples = 0;
    std::string witness;  // worst sample of the first failing check
    bool ok = true;
};

inline NumericReport verify_rack_numeric(const LinearLieRack& r, std::size_t samples = 100, std::uint64_t seed = 1,
                                         double tol = 1e-9)
{
    const auto& l = r.algebra();
    const auto dx = static_cast<Eigen::Index>(l.dim_x);
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    auto sample = [&] {
        RowVec v(dx);
        for (Eigen::Index i = 0; i < dx; ++i) v(i) = unif(gen);
        return v;
    };
    NumericReport rep;
    rep.samples = samples;
    rep.pi_at_zero = (r.pi(RowVec::Zero(dx)) - Mat::Identity(static_cast<Eigen::Index>(l.m),
                                                               static_cast<Eigen::Index>(l.m)))
                         .cwiseAbs()
                         .maxCoeff();
    std::string sd_w, eq_w, lin_w;
    for (std::size_t s = 0; s < samples; ++s) {
        const RowVec x = sample(), y = sample(), z = sample(), x2 = sample();
        const double alpha = unif(gen), beta = unif(gen);
        const double sd = (r.op(r.op(x, y), z) - r.op(r.op(x, z), r.op(y, z))).cwiseAbs().maxCoeff();
        const Mat gy = r.pi(y);
        const double eq = (r.pi(r.op(x, y)) - gy.inverse() * r.pi(x) * gy).cwiseAbs().maxCoeff();
        const double lin =
            (r.op(alpha * x + beta * x2, y) - alpha * r.op(x, y) - beta * r.op(x2, y)).cwiseAbs().maxCoeff();
        auto note = [&](double v, double& worst, std::string& w) {
            if (v > worst) {
                worst = v;
                w = rackgraph::detail::cat("sample ", s);
            }
        };
        note(sd, rep.self_distributivity, sd_w);
        note(eq, rep.equivariance, eq_w);
        note(lin, rep.linearity, lin_w);
    }
    if (rep.pi_at_zero > 1e-14) {
        rep.ok = false;
        rep.witness = "pi(0) differs from the identity";
    } else if (rep.self_distributivity > tol) {
        rep.ok = false;
        rep.witness = "self_distributivity at " + sd_w;
    } else if (rep.equivariance > tol) {
        rep.ok = false;
        rep.witness = "equivariance at " + eq_w;
    } else if (rep.linearity > 1e-12) {
        rep.ok = false;
        rep.witness = "linearity at " + lin_w;
    }
    return rep;
}

struct DerivativeReport {
    double h = 0;
    double error_h = 0;       // max deviation at step h
    double error_half = 0;    // at step h/2
    double ratio = 0;         // error_h / error_half
    double bracket_error = 0; // x·ρ(f(y)) against the exact Leibniz bracket, if given
    bool exact = false;       // both errors below 1e-12: no convergence rate to measure
    bool ok = true;
};

/// Central difference of t ↦ x ◁ (t·y) at 0 against x·ρ(f(y)) = [x, y],
/// on the basis pairs (x, y) = (e_i, e_j).
inline DerivativeReport derivative_check(const LinearLieRack& r, double h = 1e-3,
                                         const lmlie::LeibnizAlgebra* exact = nullptr)
{
    const auto& l = r.algebra();
    const auto dx = static_cast<Eigen::Index>(l.dim_x);
    DerivativeReport rep;
    rep.h = h;
    auto err_at = [&](double step) {
        double worst = 0;
        for (Eigen::Index i = 0; i < dx; ++i)
            for (Eigen::Index j = 0; j < dx; ++j) {
                const RowVec x = RowVec::Unit(dx, i), y = RowVec::Unit(dx, j);
                const RowVec fd = (r.op(x, step * y) - r.op(x, -step * y)) / (2 * step);
                const RowVec lin = x * l.action(r.f(y));
                worst = std::max(worst, (fd - lin).cwiseAbs().maxCoeff());
            }
        return worst;
    };
    rep.error_h = err_at(h);
    rep.error_half = err_at(h / 2);
    rep.exact = rep.error_h < 1e-12 && rep.error_half < 1e-12;
    rep.ratio = rep.error_half > 0 ? rep.error_h / rep.error_half : 0;
    if (!rep.exact) rep.ok = rep.ratio >= 3 && rep.ratio <= 5;
    if (exact != nullptr) {
        if (exact->dim != l.dim_x) throw Error("Leibniz algebra dimension mismatch");
        for (Eigen::Index i = 0; i < dx; ++i)
            for (Eigen::Index j = 0; j < dx; ++j) {
                const RowVec lin = RowVec::Unit(dx, i) * l.action(r.f(RowVec::Unit(dx, j)));
                const auto& br = exact->bracket[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                for (Eigen::Index k = 0; k < dx; ++k)
                    rep.bracket_error = std::max(
                        rep.bracket_error, std::abs(lin(k) - static_cast<double>(br[static_cast<std::size_t>(k)])));
            }
        if (rep.bracket_error > 1e-12) rep.ok = false;
    }
    return rep;
}

/// Matrix form of an exact LM Lie algebra: ρ in the row convention is the
/// transpose of the column-convention action, and f likewise.
inline MatrixLMLie from_lm_lie(const lmlie::LMLieAlgebra& l, std::size_t m, const std::vector<Mat>& basis)
{
    if (basis.size() != l.dim_g) throw Error("one basis matrix per element of g required");
    MatrixLMLie out{m, basis, l.dim_m, {}, Mat::Zero(static_cast<Eigen::Index>(l.dim_m),
                                                      static_cast<Eigen::Index>(l.dim_g))};
    for (std::size_t a = 0; a < l.dim_g; ++a) {
        Mat r(static_cast<Eigen::Index>(l.dim_m), static_cast<Eigen::Index>(l.dim_m));
        for (std::size_t i = 0; i < l.dim_m; ++i)
            for (std::size_t j = 0; j < l.dim_m; ++j)
                r(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = static_cast<double>(l.rho[a](i, j));
        out.rho.push_back(std::move(r));
    }
    for (std::size_t k = 0; k < l.dim_g; ++k)
        for (std::size_t j = 0; j < l.dim_m; ++j)
            out.f(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = static_cast<double>(l.f(k, j));
    return out;
}

// Samples.

/// so(3) in gl(3) with [L_i, L_j] = ε_ijk L_k, acting on ℝ³ by the adjoint
/// action, f = id.
inline MatrixLMLie so3_adjoint()
{
    auto eps = [](int i, int j, int k) { return static_cast<double>((i - j) * (j - k) * (k - i)) / 2.0; };
    MatrixLMLie l{3, {}, 3, {}, Mat::Identity(3, 3)};
    for (int a = 0; a < 3; ++a) {
        Mat b(3, 3), r(3, 3);
        for (int k = 0; k < 3; ++k)
            for (int c = 0; c < 3; ++c) {
                b(k, c) = -eps(a, k, c);
                r(k, c) = eps(k, a, c);
            }
        l.basis.push_back(b);
        l.rho.push_back(r);
    }
    return l;
}

/// sl₂ in gl(2), basis (e, f, h), adjoint action, f = id.
inline MatrixLMLie sl2_adjoint()
{
    Mat e(2, 2), f(2, 2), h(2, 2);
    e << 0, 1, 0, 0;
    f << 0, 0, 1, 0;
    h << 1, 0, 0, -1;
    return from_lm_lie(lmlie::adjoint_lm(lmlie::sl2_constants()), 2, {e, f, h});
}

/// 𝔤 = span{N} with N² = 0; X = ℝ², m₂^a = m₁, f(m₂) = a.
inline MatrixLMLie nilpotent_sample()
{
    Mat n(2, 2);
    n << 0, 1, 0, 0;
    return from_lm_lie(lmlie::nilpotent_lm(), 2, {n});
}

/// Diagonal 2×2 matrices acting trivially on ℝ², with a generic f.
inline MatrixLMLie trivial_action_sample()
{
    Mat d1 = Mat::Zero(2, 2), d2 = Mat::Zero(2, 2);
    d1(0, 0) = 1;
    d2(1, 1) = 1;
    Mat f(2, 2);
    f << 1, 2, 3, -1;
    return MatrixLMLie{2, {d1, d2}, 2, {Mat::Zero(2, 2), Mat::Zero(2, 2)}, f};
}

}  // namespace rackgraph::liegraph
