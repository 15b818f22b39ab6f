#pragma once

// Exact scalars: arbitrary-precision integers and rationals, residues modulo
// a prime, and the small field-descriptor objects the templated algorithms
// are parameterized on.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "rackgraph/error.hpp"

namespace rackgraph::exactla {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_prime(std::uint64_t p)
{
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Residue class modulo a prime. The modulus travels with the value so that
/// mixing residues of different fields is caught.
class ModP {
public:
    ModP(std::uint32_t value, std::uint32_t p) : v_(value % p), p_(p) {}

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    friend ModP operator+(ModP a, ModP b) { return ModP(a.check(b), (a.v_ + b.v_) % a.p_, 0); }
    friend ModP operator-(ModP a, ModP b) { return ModP(a.check(b), (a.v_ + a.p_ - b.v_) % a.p_, 0); }
    friend ModP operator*(ModP a, ModP b)
    {
        return ModP(a.check(b),
                    static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v_) * b.v_ % a.p_), 0);
    }
    friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
    ModP operator-() const { return ModP(p_, (p_ - v_) % p_, 0); }
    ModP& operator+=(ModP b) { return *this = *this + b; }
    ModP& operator-=(ModP b) { return *this = *this - b; }
    ModP& operator*=(ModP b) { return *this = *this * b; }
    friend bool operator==(ModP a, ModP b) { return a.v_ == b.v_ && a.p_ == b.p_; }
    friend bool operator!=(ModP a, ModP b) { return !(a == b); }

    ModP inverse() const
    {
        if (v_ == 0) throw Error("division by zero in prime field");
        // extended Euclid on (v, p)
        std::int64_t r0 = p_, r1 = v_, s0 = 0, s1 = 1;
        while (r1 != 0) {
            std::int64_t q = r0 / r1;
            std::int64_t t = r0 - q * r1;
            r0 = r1;
            r1 = t;
            t = s0 - q * s1;
            s0 = s1;
            s1 = t;
        }
        std::int64_t inv = s0 % static_cast<std::int64_t>(p_);
        if (inv < 0) inv += p_;
        return ModP(static_cast<std::uint32_t>(inv), p_);
    }

private:
    ModP(std::uint32_t p, std::uint32_t reduced, int) : v_(reduced), p_(p) {}

    std::uint32_t check(const ModP& b) const
    {
        if (p_ != b.p_) throw Error("mixed prime-field moduli");
        return p_;
    }

    std::uint32_t v_;
    std::uint32_t p_;
};

inline std::string to_string(const ModP& a) { return std::to_string(a.value()); }
inline std::string to_string(const Rational& a) { return a.str(); }
inline std::string to_string(const BigInt& a) { return a.str(); }

/// Characteristic-zero field of rationals.
struct RationalField {
    using value_type = Rational;

    value_type zero() const { return Rational(0); }
    value_type one() const { return Rational(1); }
    value_type from_int(long long v) const { return Rational(v); }
    bool is_zero(const value_type& v) const { return v == 0; }
    value_type inverse(const value_type& v) const
    {
        if (v == 0) throw Error("division by zero in rationals");
        return 1 / v;
    }
    std::uint32_t characteristic() const { return 0; }
    std::string name() const { return "q"; }
};

/// The prime field F_p.
struct PrimeField {
    using value_type = ModP;

    explicit PrimeField(std::uint32_t modulus) : p(modulus)
    {
        if (!is_prime(modulus)) throw Error(rackgraph::detail::cat("modulus ", modulus, " is not prime"));
    }

    value_type zero() const { return ModP(0, p); }
    value_type one() const { return ModP(1, p); }
    value_type from_int(long long v) const
    {
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += p;
        return ModP(static_cast<std::uint32_t>(r), p);
    }
    bool is_zero(const value_type& v) const { return v.is_zero(); }
    value_type inverse(const value_type& v) const { return v.inverse(); }
    std::uint32_t characteristic() const { return p; }
    std::string name() const { return "f" + std::to_string(p); }

    std::uint32_t p;
};

/// Runtime description of a ground field, as selected on the command line.
struct FieldSpec {
    enum class Kind { rationals, prime_field };
    Kind kind = Kind::rationals;
    std::uint32_t p = 0;

    static FieldSpec rationals() { return {}; }
    static FieldSpec prime(std::uint32_t p)
    {
        if (!is_prime(p)) throw Error(rackgraph::detail::cat("modulus ", p, " is not prime"));
        return {Kind::prime_field, p};
    }

    /// Accepts "q", "f2", "f3", "f<p>".
    static FieldSpec parse(const std::string& s)
    {
        if (s == "q" || s == "Q") return rationals();
        if (s.size() >= 2 && (s[0] == 'f' || s[0] == 'F')) {
            std::uint64_t p = 0;
            for (std::size_t i = 1; i < s.size(); ++i) {
                if (s[i] < '0' || s[i] > '9' || p > 1000000000ULL)
                    throw Error("bad field spec '" + s + "'");
                p = p * 10 + static_cast<std::uint64_t>(s[i] - '0');
            }
            if (p > 0xffffffffULL) throw Error("bad field spec '" + s + "'");
            return prime(static_cast<std::uint32_t>(p));
        }
        throw Error("bad field spec '" + s + "' (expected q or f<p>)");
    }

    std::string name() const { return kind == Kind::rationals ? "q" : "f" + std::to_string(p); }
};

/// Calls fn with a RationalField or PrimeField matching the spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn)
{
    if (spec.kind == FieldSpec::Kind::rationals) return fn(RationalField{});
    return fn(PrimeField(spec.p));
}

}  // namespace rackgraph::exactla
