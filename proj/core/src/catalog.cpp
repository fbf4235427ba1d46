#include "algdeg/catalog.hpp"

namespace algdeg {
namespace catalog {

StructureVector abelian(std::size_t n, const FieldSpec& fs) {
    return StructureVector(n, fs);
}

StructureVector rho(std::size_t n, const FieldSpec& fs) {
    if (n < 3) throw DimensionTooSmall("rho needs n >= 3");
    StructureVector v(n, fs);
    const FieldScalar one = FieldScalar::one(fs);
    for (std::size_t i = 1; i <= n - 1; ++i) {
        v.set(i, n, i, one);
        v.set(n, i, i, -one);
    }
    return v;
}

StructureVector eta(std::size_t n, const FieldSpec& fs) {
    if (n < 3) throw DimensionTooSmall("eta needs n >= 3");
    StructureVector v(n, fs);
    const FieldScalar one = FieldScalar::one(fs);
    v.set(1, 2, 3, one);
    v.set(2, 1, 3, -one);
    return v;
}

StructureVector delta(std::size_t n, const FieldSpec& fs) {
    if (n < 2) throw DimensionTooSmall("delta needs n >= 2");
    StructureVector v(n, fs);
    v.set(1, 1, 2, FieldScalar::one(fs));
    return v;
}

StructureVector epsilon(std::size_t n, const FieldSpec& fs, const FieldScalar& alpha) {
    if (n < 2) throw DimensionTooSmall("epsilon needs n >= 2");
    if (alpha.spec() != fs) throw DimensionMismatch("alpha lives in a different field");
    StructureVector v(n, fs);
    const FieldScalar one = FieldScalar::one(fs);
    v.set(1, 1, 1, one);
    for (std::size_t i = 2; i <= n; ++i) {
        v.set(1, i, i, alpha);
        v.set(i, 1, i, one - alpha);
    }
    return v;
}

StructureVector lambda_hat(std::size_t r, std::size_t s, std::size_t t, std::size_t n,
                           const FieldSpec& fs) {
    if (n < 3) throw DimensionTooSmall("lambda_hat needs n >= 3");
    if (!(r >= 1 && s <= n && t >= 1 && t <= n && r < s && t != r && t != s))
        throw BadIndices("lambda_hat needs r < s and t outside {r,s}");
    StructureVector v(n, fs);
    const FieldScalar one = FieldScalar::one(fs);
    v.set(r, s, t, one);
    v.set(s, r, t, -one);
    return v;
}

StructureVector lambda_tilde(std::size_t r, std::size_t s, std::size_t t, std::size_t n,
                             const FieldSpec& fs) {
    if (n < 3) throw DimensionTooSmall("lambda_tilde needs n >= 3");
    if (!(r >= 1 && r <= n && s >= 1 && s <= n && t >= 1 && t <= n && s != t && r != s &&
          r != t))
        throw BadIndices("lambda_tilde needs s != t and r outside {s,t}");
    StructureVector v(n, fs);
    const FieldScalar one = FieldScalar::one(fs);
    v.set(r, s, s, one);
    v.set(t, r, t, one);
    v.set(r, t, t, -one);
    v.set(s, r, s, -one);
    return v;
}

StructureVector k2_member(const FieldSpec& fs, const FieldScalar& alpha,
                          const FieldScalar& beta) {
    if (alpha.spec() != fs || beta.spec() != fs)
        throw DimensionMismatch("parameters live in a different field");
    StructureVector v(2, fs);
    v.set(1, 2, 1, beta);
    v.set(1, 2, 2, alpha);
    v.set(2, 1, 1, -beta);
    v.set(2, 1, 2, -alpha);
    return v;
}

StructureVector g_family(const FieldSpec& fs, const FieldScalar& alpha,
                         const std::vector<FieldScalar>& betas) {
    const std::size_t n = betas.size();
    if (n < 2) throw DimensionTooSmall("g_family needs n >= 2");
    if (alpha.spec() != fs) throw DimensionMismatch("alpha lives in a different field");
    StructureVector v(n, fs);
    const FieldScalar one = FieldScalar::one(fs);
    for (std::size_t i = 1; i <= n; ++i) {
        if (betas[i - 1].spec() != fs)
            throw DimensionMismatch("beta lives in a different field");
        v.set(i, i, i, betas[i - 1]);
        for (std::size_t j = 1; j <= n; ++j) {
            if (i == j) continue;
            v.set(i, j, j, alpha * betas[i - 1]);
            v.set(i, j, i, (one - alpha) * betas[j - 1]);
        }
    }
    return v;
}

} // namespace catalog
} // namespace algdeg
