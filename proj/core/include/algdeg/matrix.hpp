#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "algdeg/field.hpp"

namespace algdeg {

struct Rref;

/// Dense row-major matrix of exact field elements.  Indices are 1-based to
/// match the rest of the library.
class FlatMatrix {
public:
    FlatMatrix(std::size_t rows, std::size_t cols, const FieldSpec& fs);

    static FlatMatrix identity(std::size_t n, const FieldSpec& fs);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& spec() const { return spec_; }

    const FieldScalar& at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, FieldScalar v);

    FlatMatrix multiply(const FlatMatrix& o) const;
    FlatMatrix transpose() const;

    /// Glue o to the right of this matrix (same row count).
    FlatMatrix hstack(const FlatMatrix& o) const;
    /// Glue o below this matrix (same column count).
    FlatMatrix vstack(const FlatMatrix& o) const;

    /// Rank by exact Gaussian elimination: columns scanned left to right,
    /// pivot = first row with a nonzero entry.
    std::size_t rank() const;

    Rref rref() const;

    /// Exact inverse, or nullopt when singular.
    std::optional<FlatMatrix> inverse() const;

    bool is_identity() const;

    friend bool operator==(const FlatMatrix& a, const FlatMatrix& b);
    friend bool operator!=(const FlatMatrix& a, const FlatMatrix& b) { return !(a == b); }

private:
    std::size_t idx(std::size_t r, std::size_t c) const;

    std::size_t rows_, cols_;
    FieldSpec spec_;
    std::vector<FieldScalar> data_;
};

struct Rref {
    FlatMatrix matrix;
    std::vector<std::size_t> pivot_cols; // 1-based, ascending
    std::size_t rank;
};

} // namespace algdeg
