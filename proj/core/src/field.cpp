#include "algdeg/field.hpp"

#include <cctype>

namespace algdeg {

namespace {

bool is_prime_u32(std::uint32_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t mod_pos(long long v, std::uint64_t p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return static_cast<std::uint64_t>(r);
}

// Extended Euclid on the residue; p prime so every nonzero residue inverts.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    long long t = 0, new_t = 1;
    long long r = static_cast<long long>(p), new_r = static_cast<long long>(a);
    while (new_r != 0) {
        long long q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t mpz_mod_u64(const mpz_class& z, std::uint64_t p) {
    mpz_class r = z % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
}

} // namespace

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
    if (p >= (1u << 31))
        throw InvalidField("prime modulus must be below 2^31");
    if (!is_prime_u32(p))
        throw InvalidField("modulus " + std::to_string(p) + " is not prime");
    return FieldSpec(FieldKind::PrimeField, p);
}

std::uint32_t FieldSpec::prime() const {
    if (kind_ != FieldKind::PrimeField)
        throw InvalidField("field has no finite characteristic");
    return p_;
}

bool FieldSpec::char_divides(long long m) const {
    if (kind_ == FieldKind::Rationals) return m == 0;
    return m % static_cast<long long>(p_) == 0;
}

bool char_divides(const FieldSpec& fs, long long m) { return fs.char_divides(m); }

FieldScalar FieldScalar::zero(const FieldSpec& fs) {
    if (fs.is_rationals()) return FieldScalar(fs, mpq_class(0));
    return FieldScalar(fs, std::uint64_t{0});
}

FieldScalar FieldScalar::one(const FieldSpec& fs) {
    if (fs.is_rationals()) return FieldScalar(fs, mpq_class(1));
    return FieldScalar(fs, std::uint64_t{1});
}

FieldScalar FieldScalar::of(const FieldSpec& fs, long long num, long long den) {
    if (den == 0) throw ZeroDenominator();
    if (fs.is_rationals()) {
        mpq_class q{mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))};
        q.canonicalize();
        return FieldScalar(fs, std::move(q));
    }
    const std::uint64_t p = fs.prime();
    const std::uint64_t d = mod_pos(den, p);
    if (d == 0)
        throw NonInvertibleDenominator("denominator " + std::to_string(den) +
                                       " vanishes mod " + std::to_string(p));
    const std::uint64_t n = mod_pos(num, p);
    return FieldScalar(fs, (n * mod_inverse(d, p)) % p);
}

FieldScalar FieldScalar::from_rational(const FieldSpec& fs, const mpq_class& q) {
    if (fs.is_rationals()) {
        mpq_class c = q;
        c.canonicalize();
        return FieldScalar(fs, std::move(c));
    }
    const std::uint64_t p = fs.prime();
    mpq_class c = q;
    c.canonicalize();
    const std::uint64_t d = mpz_mod_u64(c.get_den(), p);
    if (d == 0)
        throw NonInvertibleDenominator("denominator vanishes mod " + std::to_string(p));
    const std::uint64_t n = mpz_mod_u64(c.get_num(), p);
    return FieldScalar(fs, (n * mod_inverse(d, p)) % p);
}

bool FieldScalar::is_zero() const {
    if (spec_.is_rationals()) return sgn(std::get<mpq_class>(v_)) == 0;
    return std::get<std::uint64_t>(v_) == 0;
}

bool FieldScalar::is_one() const {
    if (spec_.is_rationals()) return std::get<mpq_class>(v_) == 1;
    return std::get<std::uint64_t>(v_) == 1;
}

void FieldScalar::require_same_spec(const FieldScalar& o) const {
    if (spec_ != o.spec_)
        throw DimensionMismatch("scalars live in different fields");
}

FieldScalar FieldScalar::operator-() const {
    if (spec_.is_rationals()) return FieldScalar(spec_, mpq_class(-std::get<mpq_class>(v_)));
    const std::uint64_t p = spec_.prime();
    const std::uint64_t r = std::get<std::uint64_t>(v_);
    return FieldScalar(spec_, r == 0 ? 0 : p - r);
}

FieldScalar& FieldScalar::operator+=(const FieldScalar& o) {
    require_same_spec(o);
    if (spec_.is_rationals()) {
        std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
    } else {
        const std::uint64_t p = spec_.prime();
        v_ = (std::get<std::uint64_t>(v_) + std::get<std::uint64_t>(o.v_)) % p;
    }
    return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& o) {
    require_same_spec(o);
    if (spec_.is_rationals()) {
        std::get<mpq_class>(v_) -= std::get<mpq_class>(o.v_);
    } else {
        const std::uint64_t p = spec_.prime();
        v_ = (std::get<std::uint64_t>(v_) + p - std::get<std::uint64_t>(o.v_)) % p;
    }
    return *this;
}

FieldScalar& FieldScalar::operator*=(const FieldScalar& o) {
    require_same_spec(o);
    if (spec_.is_rationals()) {
        std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
    } else {
        const std::uint64_t p = spec_.prime();
        v_ = (std::get<std::uint64_t>(v_) * std::get<std::uint64_t>(o.v_)) % p;
    }
    return *this;
}

FieldScalar& FieldScalar::operator/=(const FieldScalar& o) {
    *this *= o.inverse();
    return *this;
}

FieldScalar FieldScalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (spec_.is_rationals())
        return FieldScalar(spec_, mpq_class(1 / std::get<mpq_class>(v_)));
    return FieldScalar(spec_, mod_inverse(std::get<std::uint64_t>(v_), spec_.prime()));
}

FieldScalar FieldScalar::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldScalar acc = one(spec_);
    FieldScalar base = *this;
    unsigned long long n = static_cast<unsigned long long>(e);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

std::string FieldScalar::str() const {
    if (spec_.is_rationals()) return std::get<mpq_class>(v_).get_str();
    return std::to_string(std::get<std::uint64_t>(v_));
}

FieldScalar FieldScalar::parse(const FieldSpec& fs, std::string_view text) {
    if (text.empty()) throw ParseError("empty scalar");
    // Accept [-]digits[/digits] only.
    std::size_t pos = text[0] == '-' ? 1 : 0;
    bool seen_digit = false, seen_slash = false;
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            seen_digit = true;
        } else if (text[i] == '/' && !seen_slash && seen_digit && i + 1 < text.size()) {
            seen_slash = true;
            seen_digit = false;
        } else {
            throw ParseError("malformed scalar \"" + std::string(text) + "\"");
        }
    }
    if (!seen_digit) throw ParseError("malformed scalar \"" + std::string(text) + "\"");
    mpq_class q;
    if (q.set_str(std::string(text), 10) != 0)
        throw ParseError("malformed scalar \"" + std::string(text) + "\"");
    if (sgn(q.get_den()) == 0) throw ZeroDenominator();
    return from_rational(fs, q);
}

const mpq_class& FieldScalar::rational() const {
    if (!spec_.is_rationals())
        throw InvalidField("scalar is not rational");
    return std::get<mpq_class>(v_);
}

std::uint64_t FieldScalar::residue() const {
    if (!spec_.is_prime_field())
        throw InvalidField("scalar is not a prime-field residue");
    return std::get<std::uint64_t>(v_);
}

bool operator==(const FieldScalar& a, const FieldScalar& b) {
    if (a.spec_ != b.spec_) return false;
    if (a.spec_.is_rationals())
        return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
    return std::get<std::uint64_t>(a.v_) == std::get<std::uint64_t>(b.v_);
}

int FieldScalar::cmp(const FieldScalar& o) const {
    if (spec_.kind() != o.spec_.kind())
        return spec_.kind() == FieldKind::Rationals ? -1 : 1;
    if (spec_.is_prime_field() && spec_.prime() != o.spec_.prime())
        return spec_.prime() < o.spec_.prime() ? -1 : 1;
    if (spec_.is_rationals())
        return ::cmp(std::get<mpq_class>(v_), std::get<mpq_class>(o.v_));
    const auto x = std::get<std::uint64_t>(v_), y = std::get<std::uint64_t>(o.v_);
    return x < y ? -1 : (x > y ? 1 : 0);
}

} // namespace algdeg
