#pragma once

#include <cstdint>
#include <vector>

#include "algdeg/grading.hpp"
#include "algdeg/structure_vector.hpp"

namespace algdeg {

/// A bijection of {1..n}, stored as the image list.
class Permutation {
public:
    explicit Permutation(std::vector<std::size_t> images);

    static Permutation identity(std::size_t n);
    static Permutation transposition(std::size_t n, std::size_t a, std::size_t b);
    /// The n-cycle 1 -> 2 -> ... -> n -> 1.
    static Permutation cycle(std::size_t n);

    std::size_t n() const { return img_.size(); }
    std::size_t of(std::size_t i) const;
    Permutation inverse() const;

private:
    std::vector<std::size_t> img_;
};

/// An invertible change of basis: the matrix columns are the new basis
/// vectors in old coordinates.  The exact inverse is computed once and
/// checked at construction.
class BasisChange {
public:
    explicit BasisChange(FlatMatrix matrix);

    static BasisChange identity(std::size_t n, const FieldSpec& fs);
    static BasisChange permutation_matrix(const Permutation& sigma, const FieldSpec& fs);
    static BasisChange diagonal(const std::vector<FieldScalar>& d);
    /// Identity plus t in position (i,j), i != j.
    static BasisChange transvection(std::size_t n, const FieldSpec& fs, std::size_t i,
                                    std::size_t j, const FieldScalar& t);

    std::size_t n() const { return mat_.rows(); }
    const FieldSpec& spec() const { return mat_.spec(); }
    const FlatMatrix& matrix() const { return mat_; }
    const FlatMatrix& inv_matrix() const { return inv_; }

    /// Composite change: acting by *this then by o.
    BasisChange then(const BasisChange& o) const;

private:
    BasisChange(FlatMatrix m, FlatMatrix inv) : mat_(std::move(m)), inv_(std::move(inv)) {}

    FlatMatrix mat_;
    FlatMatrix inv_;
};

/// The right action: the structure vector of the same algebra with respect to
/// the transformed basis.  Entry (a,b,c) of the result is
/// sum_{p,q,r} g_pa g_qb lambda_pqr (g^-1)_cr.
StructureVector act(const StructureVector& lambda, const BasisChange& g);

/// Fast path for permutation matrices: entry (i,j,k) becomes
/// lambda_{sigma(i) sigma(j) sigma(k)}.
StructureVector act_permutation(const StructureVector& lambda, const Permutation& sigma);

/// Fast path for the diagonal matrix diag(tau^{q_1}, ..., tau^{q_n}): entry
/// (i,j,k) is scaled by tau^{q_i + q_j - q_k}.
StructureVector scale_basis(const StructureVector& lambda, const WeightVector& q,
                            const FieldScalar& tau);

/// A fully enumerated orbit over a small prime field.  Members are stored
/// compactly as residue tuples in flat order.
class OrbitEnumeration {
public:
    OrbitEnumeration(StructureVector representative, std::vector<std::vector<std::uint32_t>> members,
                     unsigned long group_order);

    const StructureVector& representative() const { return rep_; }
    std::size_t size() const { return members_.size(); }
    unsigned long group_order() const { return group_order_; }

    bool contains(const StructureVector& v) const;
    StructureVector member(std::size_t idx) const;

private:
    StructureVector rep_;
    std::vector<std::vector<std::uint32_t>> members_; // sorted
    unsigned long group_order_;
};

/// The full orbit of lambda, by sweeping every invertible matrix over F_p.
/// Guarded to n <= 3 and p <= 3; larger inputs throw EnumerationTooLarge.
OrbitEnumeration enumerate_orbit(const StructureVector& lambda);

/// Same orbit computed by closure under a generating set (transvections and
/// diagonal rescalings); used to cross-check the sweep.
OrbitEnumeration enumerate_orbit_bfs(const StructureVector& lambda);

/// True iff mu lies in the orbit of lambda (same enumeration guard).
bool are_isomorphic(const StructureVector& lambda, const StructureVector& mu);

} // namespace algdeg
