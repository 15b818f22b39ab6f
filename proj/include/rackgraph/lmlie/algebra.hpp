#pragma once

// Lie algebras (M → 𝔤) in the Loday–Pirashvili category, by structure
// constants over ℚ. Action matrices use the column convention: column j
// of rho[a] holds the coordinates of m_j^a.

#include <vector>

#include "rackgraph/exactla/matrix.hpp"
#include "rackgraph/exactla/scalar.hpp"

namespace rackgraph::lmlie {

using exactla::Matrix;
using exactla::Rational;
using QMatrix = Matrix<Rational>;
using QVector = std::vector<Rational>;

struct LMLieAlgebra {
    std::size_t dim_g = 0;
    std::size_t dim_m = 0;
    std::vector<std::vector<QVector>> c;  // c[i][j] = coordinates of [e_i, e_j]
    std::vector<QMatrix> rho;             // dim_g matrices, dim_m × dim_m
    QMatrix f;                            // dim_g × dim_m; column j = f(m_j)

    QVector bracket(const QVector& x, const QVector& y) const
    {
        QVector out(dim_g, Rational(0));
        for (std::size_t i = 0; i < dim_g; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < dim_g; ++j) {
                if (y[j] == 0) continue;
                for (std::size_t k = 0; k < dim_g; ++k) out[k] += x[i] * y[j] * c[i][j][k];
            }
        }
        return out;
    }

    /// m^a for m ∈ M, a ∈ 𝔤.
    QVector act(const QVector& m, const QVector& a) const
    {
        QVector out(dim_m, Rational(0));
        for (std::size_t k = 0; k < dim_g; ++k) {
            if (a[k] == 0) continue;
            for (std::size_t j = 0; j < dim_m; ++j) {
                if (m[j] == 0) continue;
                for (std::size_t i = 0; i < dim_m; ++i) out[i] += a[k] * m[j] * rho[k](i, j);
            }
        }
        return out;
    }

    QVector apply_f(const QVector& m) const
    {
        QVector out(dim_g, Rational(0));
        for (std::size_t j = 0; j < dim_m; ++j)
            if (m[j] != 0)
                for (std::size_t k = 0; k < dim_g; ++k) out[k] += m[j] * f(k, j);
        return out;
    }

    void check_shape() const
    {
        auto bad = [](const char* what) { throw Error(std::string("LM Lie algebra: ") + what + " has wrong shape"); };
        if (c.size() != dim_g) bad("structure constants");
        for (const auto& row : c) {
            if (row.size() != dim_g) bad("structure constants");
            for (const auto& v : row)
                if (v.size() != dim_g) bad("structure constants");
        }
        if (rho.size() != dim_g) bad("action");
        for (const auto& r : rho)
            if (r.rows() != dim_m || r.cols() != dim_m) bad("action");
        if (f.rows() != dim_g || f.cols() != dim_m) bad("f");
    }
};

inline QVector unit(std::size_t n, std::size_t i)
{
    QVector v(n, Rational(0));
    v.at(i) = 1;
    return v;
}

inline QVector add(QVector a, const QVector& b, const Rational& s = 1)
{
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
    return a;
}

inline bool is_zero(const QVector& v)
{
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

/// Antisymmetry and Jacobi for 𝔤; m^[a,b] = (m^a)^b − (m^b)^a;
/// f(m^a) = [f(m), a]. All on basis elements.
inline ValidationReport validate_lm_lie(const LMLieAlgebra& l)
{
    using rackgraph::detail::cat;
    l.check_shape();
    ValidationReport rep;
    const std::size_t ng = l.dim_g, nm = l.dim_m;
    auto e = [&](std::size_t i) { return unit(ng, i); };
    auto m = [&](std::size_t i) { return unit(nm, i); };
    for (std::size_t i = 0; i < ng; ++i)
        for (std::size_t j = 0; j < ng; ++j)
            if (!is_zero(add(l.bracket(e(i), e(j)), l.bracket(e(j), e(i)))))
                rep.add("antisymmetry", cat("(", i, ",", j, ")"));
    for (std::size_t i = 0; i < ng; ++i)
        for (std::size_t j = 0; j < ng; ++j)
            for (std::size_t k = 0; k < ng; ++k) {
                auto s = l.bracket(e(i), l.bracket(e(j), e(k)));
                s = add(s, l.bracket(e(j), l.bracket(e(k), e(i))));
                s = add(s, l.bracket(e(k), l.bracket(e(i), e(j))));
                if (!is_zero(s)) rep.add("jacobi", cat("(", i, ",", j, ",", k, ")"));
            }
    for (std::size_t x = 0; x < nm; ++x)
        for (std::size_t a = 0; a < ng; ++a) {
            for (std::size_t b = 0; b < ng; ++b) {
                const auto lhs = l.act(m(x), l.bracket(e(a), e(b)));
                const auto rhs = add(l.act(l.act(m(x), e(a)), e(b)), l.act(l.act(m(x), e(b)), e(a)), -1);
                if (lhs != rhs) rep.add("module_axiom", cat("(m", x, ",", a, ",", b, ")"));
            }
            if (l.apply_f(l.act(m(x), e(a))) != l.bracket(l.apply_f(m(x)), e(a)))
                rep.add("equivariance", cat("(m", x, ",", a, ")"));
        }
    return rep;
}

struct LeibnizAlgebra {
    std::size_t dim = 0;
    std::vector<std::vector<QVector>> bracket;  // bracket[i][j] = [m_i, m_j]

    QVector apply(const QVector& x, const QVector& y) const
    {
        QVector out(dim, Rational(0));
        for (std::size_t i = 0; i < dim; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < dim; ++j)
                if (y[j] != 0)
                    for (std::size_t k = 0; k < dim; ++k) out[k] += x[i] * y[j] * bracket[i][j][k];
        }
        return out;
    }

    bool is_antisymmetric() const
    {
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                if (!is_zero(add(bracket[i][j], bracket[j][i]))) return false;
        return true;
    }
};

/// [x, y, z] right Leibniz identity [x,[y,z]] = [[x,y],z] − [[x,z],y].
inline ValidationReport verify_leibniz(const LeibnizAlgebra& b)
{
    ValidationReport rep;
    for (std::size_t i = 0; i < b.dim; ++i)
        for (std::size_t j = 0; j < b.dim; ++j)
            for (std::size_t k = 0; k < b.dim; ++k) {
                const auto x = unit(b.dim, i), y = unit(b.dim, j), z = unit(b.dim, k);
                const auto lhs = b.apply(x, b.apply(y, z));
                const auto rhs = add(b.apply(b.apply(x, y), z), b.apply(b.apply(x, z), y), -1);
                if (lhs != rhs) rep.add("right_leibniz", rackgraph::detail::cat("(", i, ",", j, ",", k, ")"));
            }
    return rep;
}

/// [m, n] = m^{f(n)}. Throws if the result fails the Leibniz identity.
inline LeibnizAlgebra leibniz_bracket(const LMLieAlgebra& l)
{
    LeibnizAlgebra b;
    b.dim = l.dim_m;
    b.bracket.assign(l.dim_m, std::vector<QVector>(l.dim_m));
    for (std::size_t i = 0; i < l.dim_m; ++i)
        for (std::size_t j = 0; j < l.dim_m; ++j)
            b.bracket[i][j] = l.act(unit(l.dim_m, i), l.apply_f(unit(l.dim_m, j)));
    const auto rep = verify_leibniz(b);
    if (!rep.ok())
        throw Error("derived bracket fails the Leibniz identity at " + rep.violations.front().witness);
    return b;
}

// Samples.

/// sl₂ with basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = −2f.
inline std::vector<std::vector<QVector>> sl2_constants()
{
    std::vector<std::vector<QVector>> c(3, std::vector<QVector>(3, QVector(3, Rational(0))));
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, int v) {
        c[i][j][k] = v;
        c[j][i][k] = -v;
    };
    set(0, 1, 2, 1);
    set(2, 0, 0, 2);
    set(2, 1, 1, -2);
    return c;
}

/// so(3) with [e_i, e_j] = ε_ijk e_k.
inline std::vector<std::vector<QVector>> so3_constants()
{
    std::vector<std::vector<QVector>> c(3, std::vector<QVector>(3, QVector(3, Rational(0))));
    for (std::size_t i = 0; i < 3; ++i) {
        const std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
        c[i][j][k] = 1;
        c[j][i][k] = -1;
    }
    return c;
}

/// M = 𝔤 with m^a = [m, a] and f = id.
inline LMLieAlgebra adjoint_lm(const std::vector<std::vector<QVector>>& c)
{
    const std::size_t n = c.size();
    LMLieAlgebra l{n, n, c, std::vector<QMatrix>(n, QMatrix(n, n, Rational(0))), QMatrix(n, n, Rational(0))};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) l.rho[a](i, j) = c[j][a][i];
    for (std::size_t i = 0; i < n; ++i) l.f(i, i) = 1;
    return l;
}

/// 𝔤 = span{a} abelian, M = k², m₁^a = 0, m₂^a = m₁, f(m₁) = 0, f(m₂) = a.
inline LMLieAlgebra nilpotent_lm()
{
    LMLieAlgebra l{1, 2, {{QVector{Rational(0)}}}, {QMatrix(2, 2, Rational(0))}, QMatrix(1, 2, Rational(0))};
    l.rho[0](0, 1) = 1;
    l.f(0, 1) = 1;
    return l;
}

/// 𝔤 = 0, M = kⁿ.
inline LMLieAlgebra abelian_lm(std::size_t n)
{
    return LMLieAlgebra{0, n, {}, {}, QMatrix(0, n, Rational(0))};
}

/// 𝔤 = span{a}, M = k, trivial action, f(m) = a.
inline LMLieAlgebra line_lm()
{
    LMLieAlgebra l{1, 1, {{QVector{Rational(0)}}}, {QMatrix(1, 1, Rational(0))}, QMatrix(1, 1, Rational(0))};
    l.f(0, 0) = 1;
    return l;
}

}  // namespace rackgraph::lmlie
