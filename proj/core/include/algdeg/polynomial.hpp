#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "algdeg/field.hpp"

namespace algdeg {

using VarId = std::uint32_t;

/// A power product of named indeterminates; exponent map kept sorted with no
/// zero exponents, so equal monomials compare equal.
class Monomial {
public:
    Monomial() = default; // the constant monomial 1

    static Monomial variable(VarId v, unsigned e = 1);

    Monomial times(const Monomial& o) const;

    unsigned degree() const;
    unsigned exponent(VarId v) const;
    bool is_constant() const { return factors_.empty(); }

    const std::vector<std::pair<VarId, unsigned>>& factors() const { return factors_; }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.factors_ == b.factors_;
    }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        return a.factors_ < b.factors_;
    }

private:
    std::vector<std::pair<VarId, unsigned>> factors_;
};

/// Exact multivariate polynomial: canonical term map, no zero coefficients.
class Polynomial {
public:
    explicit Polynomial(const FieldSpec& fs) : spec_(fs) {}

    static Polynomial constant(const FieldScalar& c);
    static Polynomial variable(const FieldSpec& fs, VarId v);

    const FieldSpec& spec() const { return spec_; }
    bool is_zero() const { return terms_.empty(); }

    Polynomial& add_term(const Monomial& m, const FieldScalar& c);
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const FieldScalar& c) const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    const std::map<Monomial, FieldScalar>& terms() const { return terms_; }

    /// The single term of a one-term polynomial; throws NotAMonomial otherwise.
    std::pair<Monomial, FieldScalar> sole_term() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.spec_ == b.spec_ && a.terms_ == b.terms_;
    }

private:
    FieldSpec spec_;
    std::map<Monomial, FieldScalar> terms_;
};

} // namespace algdeg
