#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "algdeg/errors.hpp"

namespace algdeg {

enum class FieldKind { Rationals, PrimeField };

/// Which exact field the computation runs over: Q, or F_p for a prime p.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }
    static FieldSpec prime_field(std::uint32_t p);

    FieldKind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == FieldKind::Rationals; }
    bool is_prime_field() const { return kind_ == FieldKind::PrimeField; }

    /// The prime p; only meaningful for prime fields.
    std::uint32_t prime() const;

    /// True iff the field characteristic divides m (char 0 divides only 0).
    bool char_divides(long long m) const;

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.kind_ == b.kind_ && a.p_ == b.p_;
    }
    friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }

private:
    FieldSpec(FieldKind kind, std::uint32_t p) : kind_(kind), p_(p) {}

    FieldKind kind_;
    std::uint32_t p_;
};

/// An exact field element in canonical form: a reduced fraction with positive
/// denominator over Q, or a residue in [0, p) over F_p.  Immutable value
/// semantics; all arithmetic is exact.
class FieldScalar {
public:
    /// Default-constructs rational zero (needed by containers).
    FieldScalar() : spec_(FieldSpec::rationals()), v_(mpq_class(0)) {}

    static FieldScalar zero(const FieldSpec& fs);
    static FieldScalar one(const FieldSpec& fs);

    /// The element num/den of the field.  Throws ZeroDenominator, or
    /// NonInvertibleDenominator when den vanishes mod p.
    static FieldScalar of(const FieldSpec& fs, long long num, long long den = 1);

    /// Reinterpret an exact rational in the field (reduces mod p when prime).
    static FieldScalar from_rational(const FieldSpec& fs, const mpq_class& q);

    const FieldSpec& spec() const { return spec_; }
    bool is_zero() const;
    bool is_one() const;

    FieldScalar operator-() const;
    FieldScalar& operator+=(const FieldScalar& o);
    FieldScalar& operator-=(const FieldScalar& o);
    FieldScalar& operator*=(const FieldScalar& o);
    FieldScalar& operator/=(const FieldScalar& o);

    friend FieldScalar operator+(FieldScalar a, const FieldScalar& b) { return a += b; }
    friend FieldScalar operator-(FieldScalar a, const FieldScalar& b) { return a -= b; }
    friend FieldScalar operator*(FieldScalar a, const FieldScalar& b) { return a *= b; }
    friend FieldScalar operator/(FieldScalar a, const FieldScalar& b) { return a /= b; }

    /// Multiplicative inverse; throws DivisionByZero on zero.
    FieldScalar inverse() const;

    /// Integer power; negative exponents go through the inverse.
    FieldScalar pow(long long e) const;

    /// Canonical text form: "num/den" or "num" over Q, the residue over F_p.
    std::string str() const;

    /// Inverse of str(); accepts "a" and "a/b" over either field.
    static FieldScalar parse(const FieldSpec& fs, std::string_view text);

    /// The rational value; only valid over Q.
    const mpq_class& rational() const;

    /// The residue in [0, p); only valid over F_p.
    std::uint64_t residue() const;

    friend bool operator==(const FieldScalar& a, const FieldScalar& b);
    friend bool operator!=(const FieldScalar& a, const FieldScalar& b) { return !(a == b); }

    /// Total order (spec first, then canonical value); used for container keys.
    int cmp(const FieldScalar& o) const;
    friend bool operator<(const FieldScalar& a, const FieldScalar& b) { return a.cmp(b) < 0; }

private:
    FieldScalar(const FieldSpec& fs, mpq_class q) : spec_(fs), v_(std::move(q)) {}
    FieldScalar(const FieldSpec& fs, std::uint64_t r) : spec_(fs), v_(r) {}

    void require_same_spec(const FieldScalar& o) const;

    FieldSpec spec_;
    std::variant<mpq_class, std::uint64_t> v_;
};

/// True iff the characteristic of fs divides m.
bool char_divides(const FieldSpec& fs, long long m);

/// The element num/den of the field (same contract as FieldScalar::of).
inline FieldScalar scalar(const FieldSpec& fs, long long num, long long den = 1) {
    return FieldScalar::of(fs, num, den);
}

inline FieldScalar scalar_inverse(const FieldScalar& x) { return x.inverse(); }

} // namespace algdeg
