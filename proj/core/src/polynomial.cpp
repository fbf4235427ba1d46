#include "algdeg/polynomial.hpp"

#include <algorithm>

namespace algdeg {

Monomial Monomial::variable(VarId v, unsigned e) {
    Monomial m;
    if (e > 0) m.factors_.push_back({v, e});
    return m;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial out;
    auto a = factors_.begin(), b = o.factors_.begin();
    while (a != factors_.end() || b != o.factors_.end()) {
        if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            out.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            out.factors_.push_back(*b++);
        } else {
            out.factors_.push_back({a->first, a->second + b->second});
            ++a;
            ++b;
        }
    }
    return out;
}

unsigned Monomial::degree() const {
    unsigned d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
}

unsigned Monomial::exponent(VarId v) const {
    for (const auto& [w, e] : factors_)
        if (w == v) return e;
    return 0;
}

Polynomial Polynomial::constant(const FieldScalar& c) {
    Polynomial p(c.spec());
    p.add_term(Monomial{}, c);
    return p;
}

Polynomial Polynomial::variable(const FieldSpec& fs, VarId v) {
    Polynomial p(fs);
    p.add_term(Monomial::variable(v), FieldScalar::one(fs));
    return p;
}

Polynomial& Polynomial::add_term(const Monomial& m, const FieldScalar& c) {
    if (c.spec() != spec_)
        throw DimensionMismatch("coefficient field differs from polynomial field");
    if (c.is_zero()) return *this;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial out(spec_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            out.add_term(ma.times(mb), ca * cb);
    return out;
}

Polynomial Polynomial::scaled(const FieldScalar& c) const {
    Polynomial out(spec_);
    for (const auto& [m, coeff] : terms_) out.add_term(m, coeff * c);
    return out;
}

std::pair<Monomial, FieldScalar> Polynomial::sole_term() const {
    if (terms_.size() != 1)
        throw NotAMonomial("polynomial has " + std::to_string(terms_.size()) +
                           " terms, expected exactly one");
    return *terms_.begin();
}

} // namespace algdeg
