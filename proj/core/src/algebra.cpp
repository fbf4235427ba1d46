#include "algdeg/algebra.hpp"

namespace algdeg {

CoordinateVector::CoordinateVector(std::size_t n, const FieldSpec& fs)
    : spec_(fs), coords_(n, FieldScalar::zero(fs)) {
    if (n < 1) throw DimensionTooSmall("coordinate vectors need n >= 1");
}

CoordinateVector CoordinateVector::unit(std::size_t n, const FieldSpec& fs, std::size_t i) {
    CoordinateVector v(n, fs);
    v.set(i, FieldScalar::one(fs));
    return v;
}

const FieldScalar& CoordinateVector::at(std::size_t i) const {
    if (i < 1 || i > coords_.size())
        throw IndexOutOfRange("coordinate index " + std::to_string(i) + " out of range");
    return coords_[i - 1];
}

void CoordinateVector::set(std::size_t i, FieldScalar v) {
    if (i < 1 || i > coords_.size())
        throw IndexOutOfRange("coordinate index " + std::to_string(i) + " out of range");
    if (v.spec() != spec_)
        throw DimensionMismatch("coordinate field differs from vector field");
    coords_[i - 1] = std::move(v);
}

bool CoordinateVector::is_zero() const {
    for (const auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

CoordinateVector CoordinateVector::operator+(const CoordinateVector& o) const {
    if (spec_ != o.spec_ || coords_.size() != o.coords_.size())
        throw DimensionMismatch("coordinate vector mismatch");
    CoordinateVector out = *this;
    for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] += o.coords_[i];
    return out;
}

CoordinateVector CoordinateVector::operator-(const CoordinateVector& o) const {
    if (spec_ != o.spec_ || coords_.size() != o.coords_.size())
        throw DimensionMismatch("coordinate vector mismatch");
    CoordinateVector out = *this;
    for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] -= o.coords_[i];
    return out;
}

CoordinateVector CoordinateVector::scaled(const FieldScalar& c) const {
    CoordinateVector out = *this;
    for (auto& x : out.coords_) x *= c;
    return out;
}

CoordinateVector product(const StructureVector& lambda, const CoordinateVector& x,
                         const CoordinateVector& y) {
    const std::size_t n = lambda.n();
    if (x.n() != n || y.n() != n || x.spec() != lambda.spec() || y.spec() != lambda.spec())
        throw DimensionMismatch("product operands do not match the structure vector");
    CoordinateVector out(n, lambda.spec());
    for (std::size_t i = 1; i <= n; ++i) {
        if (x.at(i).is_zero()) continue;
        for (std::size_t j = 1; j <= n; ++j) {
            if (y.at(j).is_zero()) continue;
            const FieldScalar xy = x.at(i) * y.at(j);
            for (std::size_t k = 1; k <= n; ++k) {
                const FieldScalar& l = lambda.at(i, j, k);
                if (l.is_zero()) continue;
                out.set(k, out.at(k) + xy * l);
            }
        }
    }
    return out;
}

bool is_skew(const StructureVector& lambda) {
    const std::size_t n = lambda.n();
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t k = 1; k <= n; ++k)
            if (!lambda.at(i, i, k).is_zero()) return false;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            for (std::size_t k = 1; k <= n; ++k)
                if (!(lambda.at(i, j, k) + lambda.at(j, i, k)).is_zero()) return false;
    return true;
}

bool is_lie(const StructureVector& lambda) {
    if (!is_skew(lambda)) return false;
    const std::size_t n = lambda.n();
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t l = 1; l <= n; ++l)
                for (std::size_t m = 1; m <= n; ++m) {
                    FieldScalar s = FieldScalar::zero(lambda.spec());
                    for (std::size_t k = 1; k <= n; ++k) {
                        s += lambda.at(i, j, k) * lambda.at(k, l, m);
                        s += lambda.at(j, l, k) * lambda.at(k, i, m);
                        s += lambda.at(l, i, k) * lambda.at(k, j, m);
                    }
                    if (!s.is_zero()) return false;
                }
    return true;
}

bool is_metabelian(const StructureVector& lambda) {
    const std::size_t n = lambda.n();
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t k = 1; k <= n; ++k)
                for (std::size_t m = 1; m <= n; ++m) {
                    FieldScalar s = FieldScalar::zero(lambda.spec());
                    for (std::size_t l = 1; l <= n; ++l)
                        s += lambda.at(i, j, l) * lambda.at(l, k, m);
                    if (!s.is_zero()) return false;
                }
    return true;
}

bool is_commutative(const StructureVector& lambda) {
    const std::size_t n = lambda.n();
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            for (std::size_t k = 1; k <= n; ++k)
                if (!(lambda.at(i, j, k) == lambda.at(j, i, k))) return false;
    return true;
}

FieldScalar ad_trace(const StructureVector& lambda, std::size_t i) {
    const std::size_t n = lambda.n();
    if (i < 1 || i > n)
        throw IndexOutOfRange("basis index " + std::to_string(i) + " out of range");
    FieldScalar s = FieldScalar::zero(lambda.spec());
    for (std::size_t j = 1; j <= n; ++j) s += lambda.at(i, j, j);
    return s;
}

bool is_unimodular(const StructureVector& lambda) {
    for (std::size_t i = 1; i <= lambda.n(); ++i)
        if (!ad_trace(lambda, i).is_zero()) return false;
    return true;
}

namespace {

// Middle-index flattening: row j lists lambda_ijk over columns (i,k).  Its
// kernel on the left is the right annihilator.
FlatMatrix right_annihilator_matrix(const StructureVector& lambda) {
    const std::size_t n = lambda.n();
    FlatMatrix m(n, n * n, lambda.spec());
    for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t k = 1; k <= n; ++k)
                m.set(j, (i - 1) * n + k, lambda.at(i, j, k));
    return m;
}

} // namespace

AnnDims ann_dims(const StructureVector& lambda) {
    const std::size_t n = lambda.n();
    const FlatMatrix a = lambda.flatten_a();
    const FlatMatrix r = right_annihilator_matrix(lambda);
    const std::size_t left = n - a.rank();
    const std::size_t right = n - r.rank();
    const std::size_t both = n - a.hstack(r).rank();
    return AnnDims{left, right, both};
}

std::size_t square_dim(const StructureVector& lambda) {
    return lambda.flatten_b().rank();
}

namespace {

// Indeterminate layout for the identity checks: x_i -> 0..n-1, y_j -> n..2n-1.
Polynomial coordinate_poly(const FieldSpec& fs, VarId base, std::size_t i) {
    return Polynomial::variable(fs, base + static_cast<VarId>(i - 1));
}

// Coordinates of [x,y] as polynomials in the chosen indeterminates.
std::vector<Polynomial> bracket_polys(const StructureVector& lambda, VarId x_base,
                                      VarId y_base) {
    const std::size_t n = lambda.n();
    const FieldSpec& fs = lambda.spec();
    std::vector<Polynomial> z(n, Polynomial(fs));
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t k = 1; k <= n; ++k) {
                const FieldScalar& c = lambda.at(i, j, k);
                if (c.is_zero()) continue;
                const Monomial m = Monomial::variable(x_base + static_cast<VarId>(i - 1))
                                       .times(Monomial::variable(y_base + static_cast<VarId>(j - 1)));
                z[k - 1].add_term(m, c);
            }
    return z;
}

} // namespace

bool satisfies_star_star(const StructureVector& lambda) {
    const std::size_t n = lambda.n();
    const FieldSpec& fs = lambda.spec();
    // Rows (x, [x,x]): the squares stay in span(x) iff every 2x2 minor is the
    // zero polynomial.
    const std::vector<Polynomial> w = bracket_polys(lambda, 0, 0);
    for (std::size_t a = 1; a <= n; ++a)
        for (std::size_t b = a + 1; b <= n; ++b) {
            Polynomial minor = coordinate_poly(fs, 0, a) * w[b - 1];
            minor -= coordinate_poly(fs, 0, b) * w[a - 1];
            if (!minor.is_zero()) return false;
        }
    return true;
}

bool satisfies_star(const StructureVector& lambda) {
    const std::size_t n = lambda.n();
    const FieldSpec& fs = lambda.spec();
    if (fs.is_prime_field() && fs.prime() <= 3)
        throw FieldTooSmall("deciding the span condition needs p > 3, got p = " +
                            std::to_string(fs.prime()));
    if (!satisfies_star_star(lambda)) return false;
    const VarId y_base = static_cast<VarId>(n);
    const std::vector<Polynomial> z = bracket_polys(lambda, 0, y_base);
    for (std::size_t a = 1; a <= n; ++a)
        for (std::size_t b = a + 1; b <= n; ++b)
            for (std::size_t c = b + 1; c <= n; ++c) {
                // det of rows (x, y, [x,y]) on columns (a,b,c), expanded along x.
                auto two_by_two = [&](std::size_t p, std::size_t q) {
                    Polynomial d = coordinate_poly(fs, y_base, p) * z[q - 1];
                    d -= coordinate_poly(fs, y_base, q) * z[p - 1];
                    return d;
                };
                Polynomial det = coordinate_poly(fs, 0, a) * two_by_two(b, c);
                det -= coordinate_poly(fs, 0, b) * two_by_two(a, c);
                det += coordinate_poly(fs, 0, c) * two_by_two(a, b);
                if (!det.is_zero()) return false;
            }
    return true;
}

InvariantProfile invariant_profile(const StructureVector& lambda) {
    InvariantProfile p;
    p.rank_a = lambda.flatten_a().rank();
    p.rank_b = lambda.flatten_b().rank();
    p.ann = ann_dims(lambda);
    p.square = p.rank_b;
    p.skew = is_skew(lambda);
    p.lie = is_lie(lambda);
    p.metabelian = is_metabelian(lambda);
    p.commutative = is_commutative(lambda);
    p.unimodular = is_unimodular(lambda);
    p.star_star = satisfies_star_star(lambda);
    if (!lambda.spec().is_prime_field() || lambda.spec().prime() > 3)
        p.star = satisfies_star(lambda);
    return p;
}

} // namespace algdeg
