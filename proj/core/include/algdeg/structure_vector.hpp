#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "algdeg/matrix.hpp"

namespace algdeg {

/// A 1-based index triple (i,j,k) with 1 <= i,j,k <= n.
struct Triple {
    std::size_t i, j, k;
    auto operator<=>(const Triple&) const = default;
};

/// Flat position of (i,j,k): m = (i-1)n^2 + (j-1)n + k, 1-based.
std::size_t index_of(std::size_t i, std::size_t j, std::size_t k, std::size_t n);
std::size_t index_of(const Triple& t, std::size_t n);

/// Inverse of index_of.
Triple triple_of(std::size_t m, std::size_t n);

/// The n^3-tuple of structure constants of an n-dimensional algebra relative
/// to an ordered basis, in the fixed flat ordering above.  Immutable-style
/// value; the central object of the library.
class StructureVector {
public:
    /// The zero vector (the abelian structure).  n >= 2.
    StructureVector(std::size_t n, const FieldSpec& fs);

    std::size_t n() const { return n_; }
    const FieldSpec& spec() const { return spec_; }
    std::size_t size() const { return entries_.size(); }

    const FieldScalar& at(std::size_t i, std::size_t j, std::size_t k) const;
    const FieldScalar& at(const Triple& t) const { return at(t.i, t.j, t.k); }
    const FieldScalar& at_flat(std::size_t m) const;

    void set(std::size_t i, std::size_t j, std::size_t k, FieldScalar v);
    void set_flat(std::size_t m, FieldScalar v);

    bool is_zero() const;

    StructureVector operator+(const StructureVector& o) const;
    StructureVector operator-(const StructureVector& o) const;
    StructureVector scaled(const FieldScalar& c) const;

    /// In-place this -= c * o; the workhorse of row reduction.
    void sub_scaled(const StructureVector& o, const FieldScalar& c);

    /// n x n^2 matrix whose row l lists the flat entries (l-1)n^2 + m; the
    /// vector is recovered by concatenating its rows.  Its rank gives
    /// n - dim of the left annihilator.
    FlatMatrix flatten_a() const;

    /// n x n^2 matrix whose (l,m) entry sits at flat position (m-1)n + l; its
    /// rank is the dimension of the span of all products.
    FlatMatrix flatten_b() const;

    const std::vector<FieldScalar>& entries() const { return entries_; }

    friend bool operator==(const StructureVector& a, const StructureVector& b);
    friend bool operator!=(const StructureVector& a, const StructureVector& b) {
        return !(a == b);
    }

    /// Total order for container keys.
    int cmp(const StructureVector& o) const;
    friend bool operator<(const StructureVector& a, const StructureVector& b) {
        return a.cmp(b) < 0;
    }

private:
    void require_compatible(const StructureVector& o) const;

    std::size_t n_;
    FieldSpec spec_;
    std::vector<FieldScalar> entries_;
};

/// Exact rank of a flattening (or any exact matrix).
inline std::size_t rank(const FlatMatrix& m) { return m.rank(); }

} // namespace algdeg
