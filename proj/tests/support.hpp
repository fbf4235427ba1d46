#pragma once

// Shared test helpers: deterministic generators and independent oracles.
// Oracles deliberately avoid the code paths they check: rank goes through
// minor determinants, annihilators through exhaustive products, inverses
// through exhaustive search.

#include <random>
#include <vector>

#include "algdeg/action.hpp"
#include "algdeg/algebra.hpp"
#include "algdeg/structure_vector.hpp"

namespace testsup {

using namespace algdeg;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}

    std::size_t below(std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(g_);
    }
    long long range(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(g_);
    }
    bool chance(double p) { return std::uniform_real_distribution<>(0.0, 1.0)(g_) < p; }

private:
    std::mt19937_64 g_;
};

inline FieldScalar random_scalar(Rng& rng, const FieldSpec& fs) {
    if (fs.is_prime_field())
        return FieldScalar::of(fs, rng.range(0, fs.prime() - 1));
    return FieldScalar::of(fs, rng.range(-4, 4), rng.range(1, 3));
}

inline FieldScalar random_nonzero_scalar(Rng& rng, const FieldSpec& fs) {
    for (;;) {
        FieldScalar s = random_scalar(rng, fs);
        if (!s.is_zero()) return s;
    }
}

inline StructureVector random_vector(Rng& rng, std::size_t n, const FieldSpec& fs,
                                     double density = 0.3) {
    StructureVector v(n, fs);
    for (std::size_t m = 1; m <= v.size(); ++m)
        if (rng.chance(density)) v.set_flat(m, random_scalar(rng, fs));
    return v;
}

inline StructureVector random_skew_vector(Rng& rng, std::size_t n, const FieldSpec& fs,
                                          double density = 0.4) {
    StructureVector v(n, fs);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            for (std::size_t k = 1; k <= n; ++k)
                if (rng.chance(density)) {
                    FieldScalar s = random_scalar(rng, fs);
                    v.set(i, j, k, s);
                    v.set(j, i, k, -s);
                }
    return v;
}

inline CoordinateVector random_coordinate_vector(Rng& rng, std::size_t n, const FieldSpec& fs) {
    CoordinateVector v(n, fs);
    for (std::size_t i = 1; i <= n; ++i) v.set(i, random_scalar(rng, fs));
    return v;
}

/// Product of a few elementary matrices: always invertible, always exact.
inline BasisChange random_basis_change(Rng& rng, std::size_t n, const FieldSpec& fs) {
    BasisChange g = BasisChange::identity(n, fs);
    const std::size_t steps = 3 + rng.below(5);
    for (std::size_t s = 0; s < steps; ++s) {
        switch (rng.below(3)) {
            case 0: {
                std::size_t i = 1 + rng.below(n), j = 1 + rng.below(n);
                if (i == j) j = j % n + 1;
                g = g.then(BasisChange::transvection(n, fs, i, j, random_nonzero_scalar(rng, fs)));
                break;
            }
            case 1: {
                std::vector<FieldScalar> d(n, FieldScalar::one(fs));
                d[rng.below(n)] = random_nonzero_scalar(rng, fs);
                g = g.then(BasisChange::diagonal(d));
                break;
            }
            default: {
                std::size_t a = 1 + rng.below(n), b = 1 + rng.below(n);
                if (a == b) b = b % n + 1;
                g = g.then(BasisChange::permutation_matrix(Permutation::transposition(n, a, b), fs));
                break;
            }
        }
    }
    return g;
}

/// Rank via the minor-determinant criterion: the largest k with some
/// nonvanishing k x k minor.  Exponential; for small oracle matrices only.
std::size_t rank_by_minors(const FlatMatrix& m);

/// dim of the left annihilator by definition: the kernel of y -> [y, -],
/// assembled from products with unit vectors and ranked by minors.
std::size_t ann_left_by_products(const StructureVector& lambda);
std::size_t ann_right_by_products(const StructureVector& lambda);
std::size_t ann_two_sided_by_products(const StructureVector& lambda);

/// dim of the span of all unit products, ranked by minors.
std::size_t square_dim_by_products(const StructureVector& lambda);

/// Exhaustive multiplicative inverse over F_p.
std::uint64_t inverse_by_search(std::uint64_t a, std::uint64_t p);

/// Pointwise span containment of [x,y] in span(x,y) over a small grid.
bool star_pointwise_on_grid(const StructureVector& lambda);

} // namespace testsup
