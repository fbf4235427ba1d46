#pragma once

#include <optional>

#include "algdeg/polynomial.hpp"
#include "algdeg/structure_vector.hpp"

namespace algdeg {

/// Coordinates of an algebra element with respect to the working basis.
class CoordinateVector {
public:
    CoordinateVector(std::size_t n, const FieldSpec& fs);

    /// The i-th standard basis vector, 1-based.
    static CoordinateVector unit(std::size_t n, const FieldSpec& fs, std::size_t i);

    std::size_t n() const { return coords_.size(); }
    const FieldSpec& spec() const { return spec_; }

    const FieldScalar& at(std::size_t i) const;
    void set(std::size_t i, FieldScalar v);

    bool is_zero() const;

    CoordinateVector operator+(const CoordinateVector& o) const;
    CoordinateVector operator-(const CoordinateVector& o) const;
    CoordinateVector scaled(const FieldScalar& c) const;

    friend bool operator==(const CoordinateVector& a, const CoordinateVector& b) {
        return a.spec_ == b.spec_ && a.coords_ == b.coords_;
    }

private:
    FieldSpec spec_;
    std::vector<FieldScalar> coords_;
};

/// The algebra product: coordinate k of [x,y] is sum_{i,j} x_i y_j lambda_ijk.
CoordinateVector product(const StructureVector& lambda, const CoordinateVector& x,
                         const CoordinateVector& y);

/// lambda_iik = 0 and lambda_ijk + lambda_jik = 0 throughout; equivalent to
/// [x,x] = 0 for every x.
bool is_skew(const StructureVector& lambda);

/// Skew plus the Jacobi identity on basis triples.
bool is_lie(const StructureVector& lambda);

/// All triple products [[x,y],z] vanish.
bool is_metabelian(const StructureVector& lambda);

bool is_commutative(const StructureVector& lambda);

/// trace of ad applied to the i-th basis vector: sum_j lambda_ijj.
FieldScalar ad_trace(const StructureVector& lambda, std::size_t i);

/// Every adjoint map is traceless.
bool is_unimodular(const StructureVector& lambda);

struct AnnDims {
    std::size_t left, right, two_sided;
    friend bool operator==(const AnnDims&, const AnnDims&) = default;
};

/// Dimensions of the left / right / two-sided annihilators.
AnnDims ann_dims(const StructureVector& lambda);

/// Dimension of the span of all products.
std::size_t square_dim(const StructureVector& lambda);

/// Every square [x,x] lies in the span of x, decided as an exact polynomial
/// identity (all 2x2 minors of the rows (x, [x,x]) vanish identically).
bool satisfies_star_star(const StructureVector& lambda);

/// Every product [x,y] lies in the span of x and y: the 2x2 criterion above
/// plus vanishing of all 3x3 minors of the rows (x, y, [x,y]).  Over a prime
/// field this is reliable only for p > 3 (per-variable degrees reach 3);
/// below that FieldTooSmall is thrown.
bool satisfies_star(const StructureVector& lambda);

/// Everything basis-independent the library computes for one vector, bundled
/// for orbit-invariance checks and reports.  star is absent when the field is
/// too small to decide it.
struct InvariantProfile {
    std::size_t rank_a = 0, rank_b = 0;
    AnnDims ann{0, 0, 0};
    std::size_t square = 0;
    bool skew = false, lie = false, metabelian = false, commutative = false,
         unimodular = false;
    bool star_star = false;
    std::optional<bool> star;
    friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;
};

InvariantProfile invariant_profile(const StructureVector& lambda);

} // namespace algdeg
