#pragma once

// Smith normal form of integer matrices. Elimination runs first on
// overflow-checked 64-bit integers and restarts on arbitrary-precision
// integers if any intermediate value leaves the 64-bit range.

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rackgraph/exactla/matrix.hpp"
#include "rackgraph/exactla/scalar.hpp"

namespace rackgraph::exactla {

struct SmithResult {
    std::size_t rank = 0;
    std::vector<BigInt> divisors;  // d_1 | d_2 | … | d_rank, all positive

    /// Divisors greater than one.
    std::vector<BigInt> torsion() const
    {
        std::vector<BigInt> out;
        for (const auto& d : divisors)
            if (d > 1) out.push_back(d);
        return out;
    }
};

namespace detail {

struct Overflow : std::overflow_error {
    Overflow() : std::overflow_error("int64 overflow") {}
};

/// int64 with trapping arithmetic.
struct CheckedI64 {
    std::int64_t v = 0;

    CheckedI64() = default;
    CheckedI64(std::int64_t x) : v(x) {}

    friend CheckedI64 operator+(CheckedI64 a, CheckedI64 b)
    {
        std::int64_t r;
        if (__builtin_add_overflow(a.v, b.v, &r)) throw Overflow();
        return r;
    }
    friend CheckedI64 operator-(CheckedI64 a, CheckedI64 b)
    {
        std::int64_t r;
        if (__builtin_sub_overflow(a.v, b.v, &r)) throw Overflow();
        return r;
    }
    friend CheckedI64 operator*(CheckedI64 a, CheckedI64 b)
    {
        std::int64_t r;
        if (__builtin_mul_overflow(a.v, b.v, &r)) throw Overflow();
        return r;
    }
    friend CheckedI64 operator/(CheckedI64 a, CheckedI64 b)
    {
        if (a.v == INT64_MIN && b.v == -1) throw Overflow();
        return a.v / b.v;
    }
    friend CheckedI64 operator%(CheckedI64 a, CheckedI64 b)
    {
        if (b.v == -1) return 0;
        return a.v % b.v;
    }
    CheckedI64 operator-() const
    {
        if (v == INT64_MIN) throw Overflow();
        return -v;
    }
    friend bool operator==(CheckedI64 a, CheckedI64 b) { return a.v == b.v; }
    friend bool operator!=(CheckedI64 a, CheckedI64 b) { return a.v != b.v; }
    friend bool operator<(CheckedI64 a, CheckedI64 b) { return a.v < b.v; }
};

inline CheckedI64 abs_int(CheckedI64 a) { return a.v < 0 ? -a : a; }
inline BigInt abs_int(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }
inline bool is_zero_int(CheckedI64 a) { return a.v == 0; }
inline bool is_zero_int(const BigInt& a) { return a == 0; }
inline BigInt to_big(CheckedI64 a) { return BigInt(a.v); }
inline BigInt to_big(const BigInt& a) { return a; }

template <class Int>
Int gcd_int(Int a, Int b)
{
    a = abs_int(a);
    b = abs_int(b);
    while (!is_zero_int(b)) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// Diagonalizes m in place by unimodular row and column operations,
/// picking the smallest-magnitude entry of the remaining block as pivot.
/// Returns the (unnormalized) diagonal.
template <class Int>
std::vector<Int> diagonalize(Matrix<Int>& m)
{
    const std::size_t nr = m.rows(), nc = m.cols();
    std::vector<Int> diag;
    for (std::size_t t = 0; t < nr && t < nc; ++t) {
        while (true) {
            // smallest nonzero |entry| in the block [t.., t..]
            bool found = false;
            std::size_t pi = t, pj = t;
            Int best = 0;
            for (std::size_t i = t; i < nr; ++i)
                for (std::size_t j = t; j < nc; ++j) {
                    const Int& e = m(i, j);
                    if (is_zero_int(e)) continue;
                    Int a = abs_int(e);
                    if (!found || a < best) {
                        found = true;
                        best = a;
                        pi = i;
                        pj = j;
                        if (best == Int(1)) goto picked;
                    }
                }
        picked:
            if (!found) return diag;
            m.swap_rows(t, pi);
            m.swap_cols(t, pj);
            const Int p = m(t, t);
            bool clean = true;
            for (std::size_t i = t + 1; i < nr; ++i) {
                if (is_zero_int(m(i, t))) continue;
                const Int q = m(i, t) / p;
                for (std::size_t j = t; j < nc; ++j)
                    if (!is_zero_int(m(t, j))) m(i, j) = m(i, j) - q * m(t, j);
                if (!is_zero_int(m(i, t))) clean = false;
            }
            for (std::size_t j = t + 1; j < nc; ++j) {
                if (is_zero_int(m(t, j))) continue;
                const Int q = m(t, j) / p;
                for (std::size_t i = t; i < nr; ++i)
                    if (!is_zero_int(m(i, t))) m(i, j) = m(i, j) - q * m(i, t);
                if (!is_zero_int(m(t, j))) clean = false;
            }
            if (clean) break;  // row and column t cleared
        }
        diag.push_back(m(t, t));
    }
    return diag;
}

/// Turns a diagonal into the invariant-factor chain using
/// diag(a, b) ~ diag(gcd(a,b), lcm(a,b)).
inline std::vector<BigInt> invariant_factors(std::vector<BigInt> d)
{
    for (auto& x : d) x = abs_int(x);
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            if (d[j] % d[i] == 0) continue;
            const BigInt g = gcd_int(d[i], d[j]);
            const BigInt l = d[i] / g * d[j];
            d[i] = g;
            d[j] = l;
        }
    return d;
}

template <class Int, class Source>
SmithResult smith_with(const Source& fill)
{
    Matrix<Int> m = fill(Int(0));
    auto diag = diagonalize(m);
    std::vector<BigInt> big;
    big.reserve(diag.size());
    for (const auto& d : diag) big.push_back(to_big(d));
    SmithResult r;
    r.divisors = invariant_factors(std::move(big));
    r.rank = r.divisors.size();
    return r;
}

}  // namespace detail

/// Rank and invariant factors of an integer matrix. `fill(zero)` must return
/// the matrix with entries of the type of `zero` (CheckedI64 or BigInt).
template <class Fill>
SmithResult smith_normal_form_from(const Fill& fill)
{
    try {
        return detail::smith_with<detail::CheckedI64>(fill);
    } catch (const detail::Overflow&) {
        return detail::smith_with<BigInt>(fill);
    }
}

inline SmithResult smith_normal_form(const Matrix<BigInt>& m)
{
    return smith_normal_form_from([&m](auto zero) {
        using Int = decltype(zero);
        Matrix<Int> out(m.rows(), m.cols(), zero);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                if constexpr (std::is_same_v<Int, BigInt>) {
                    out(i, j) = m(i, j);
                } else {
                    if (m(i, j) > INT64_MAX || m(i, j) < INT64_MIN) throw detail::Overflow();
                    out(i, j) = Int(static_cast<std::int64_t>(m(i, j)));
                }
            }
        return out;
    });
}

inline Matrix<BigInt> int_matrix(const std::vector<std::vector<long long>>& rows)
{
    const std::size_t nr = rows.size(), nc = rows.empty() ? 0 : rows.front().size();
    Matrix<BigInt> m(nr, nc, BigInt(0));
    for (std::size_t i = 0; i < nr; ++i) {
        if (rows[i].size() != nc) throw Error("ragged integer matrix");
        for (std::size_t j = 0; j < nc; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

}  // namespace rackgraph::exactla
