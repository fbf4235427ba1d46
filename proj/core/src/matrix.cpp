#include "algdeg/matrix.hpp"

namespace algdeg {

FlatMatrix::FlatMatrix(std::size_t rows, std::size_t cols, const FieldSpec& fs)
    : rows_(rows), cols_(cols), spec_(fs), data_(rows * cols, FieldScalar::zero(fs)) {
    if (rows == 0 || cols == 0)
        throw DimensionMismatch("matrix dimensions must be positive");
}

FlatMatrix FlatMatrix::identity(std::size_t n, const FieldSpec& fs) {
    FlatMatrix m(n, n, fs);
    for (std::size_t i = 1; i <= n; ++i) m.set(i, i, FieldScalar::one(fs));
    return m;
}

std::size_t FlatMatrix::idx(std::size_t r, std::size_t c) const {
    if (r < 1 || r > rows_ || c < 1 || c > cols_)
        throw IndexOutOfRange("matrix index (" + std::to_string(r) + "," +
                              std::to_string(c) + ") out of range");
    return (r - 1) * cols_ + (c - 1);
}

const FieldScalar& FlatMatrix::at(std::size_t r, std::size_t c) const {
    return data_[idx(r, c)];
}

void FlatMatrix::set(std::size_t r, std::size_t c, FieldScalar v) {
    if (v.spec() != spec_)
        throw DimensionMismatch("entry field differs from matrix field");
    data_[idx(r, c)] = std::move(v);
}

FlatMatrix FlatMatrix::multiply(const FlatMatrix& o) const {
    if (cols_ != o.rows_ || spec_ != o.spec_)
        throw DimensionMismatch("matrix product shape mismatch");
    FlatMatrix out(rows_, o.cols_, spec_);
    for (std::size_t r = 1; r <= rows_; ++r)
        for (std::size_t k = 1; k <= cols_; ++k) {
            const FieldScalar& a = at(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 1; c <= o.cols_; ++c) {
                const FieldScalar& b = o.at(k, c);
                if (b.is_zero()) continue;
                out.data_[(r - 1) * out.cols_ + (c - 1)] += a * b;
            }
        }
    return out;
}

FlatMatrix FlatMatrix::transpose() const {
    FlatMatrix out(cols_, rows_, spec_);
    for (std::size_t r = 1; r <= rows_; ++r)
        for (std::size_t c = 1; c <= cols_; ++c)
            out.set(c, r, at(r, c));
    return out;
}

FlatMatrix FlatMatrix::hstack(const FlatMatrix& o) const {
    if (rows_ != o.rows_ || spec_ != o.spec_)
        throw DimensionMismatch("hstack row mismatch");
    FlatMatrix out(rows_, cols_ + o.cols_, spec_);
    for (std::size_t r = 1; r <= rows_; ++r) {
        for (std::size_t c = 1; c <= cols_; ++c) out.set(r, c, at(r, c));
        for (std::size_t c = 1; c <= o.cols_; ++c) out.set(r, cols_ + c, o.at(r, c));
    }
    return out;
}

FlatMatrix FlatMatrix::vstack(const FlatMatrix& o) const {
    if (cols_ != o.cols_ || spec_ != o.spec_)
        throw DimensionMismatch("vstack column mismatch");
    FlatMatrix out(rows_ + o.rows_, cols_, spec_);
    for (std::size_t r = 1; r <= rows_; ++r)
        for (std::size_t c = 1; c <= cols_; ++c) out.set(r, c, at(r, c));
    for (std::size_t r = 1; r <= o.rows_; ++r)
        for (std::size_t c = 1; c <= cols_; ++c) out.set(rows_ + r, c, o.at(r, c));
    return out;
}

std::size_t FlatMatrix::rank() const {
    return rref().rank;
}

Rref FlatMatrix::rref() const {
    FlatMatrix m = *this;
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 1;
    for (std::size_t c = 1; c <= cols_ && pivot_row <= rows_; ++c) {
        std::size_t sel = 0;
        for (std::size_t r = pivot_row; r <= rows_; ++r) {
            if (!m.at(r, c).is_zero()) {
                sel = r;
                break;
            }
        }
        if (sel == 0) continue;
        if (sel != pivot_row)
            for (std::size_t cc = 1; cc <= cols_; ++cc)
                std::swap(m.data_[(sel - 1) * cols_ + (cc - 1)],
                          m.data_[(pivot_row - 1) * cols_ + (cc - 1)]);
        const FieldScalar inv = m.at(pivot_row, c).inverse();
        for (std::size_t cc = c; cc <= cols_; ++cc)
            m.data_[(pivot_row - 1) * cols_ + (cc - 1)] *= inv;
        for (std::size_t r = 1; r <= rows_; ++r) {
            if (r == pivot_row) continue;
            const FieldScalar f = m.at(r, c);
            if (f.is_zero()) continue;
            for (std::size_t cc = c; cc <= cols_; ++cc) {
                FieldScalar t = f * m.at(pivot_row, cc);
                m.data_[(r - 1) * cols_ + (cc - 1)] -= t;
            }
        }
        pivots.push_back(c);
        ++pivot_row;
    }
    const std::size_t rk = pivots.size();
    return Rref{std::move(m), std::move(pivots), rk};
}

std::optional<FlatMatrix> FlatMatrix::inverse() const {
    if (rows_ != cols_)
        throw DimensionMismatch("only square matrices invert");
    Rref r = hstack(identity(rows_, spec_)).rref();
    if (r.rank < rows_ || r.pivot_cols.back() > rows_) return std::nullopt;
    FlatMatrix inv(rows_, cols_, spec_);
    for (std::size_t i = 1; i <= rows_; ++i)
        for (std::size_t j = 1; j <= cols_; ++j)
            inv.set(i, j, r.matrix.at(i, cols_ + j));
    return inv;
}

bool FlatMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 1; r <= rows_; ++r)
        for (std::size_t c = 1; c <= cols_; ++c) {
            if (r == c ? !at(r, c).is_one() : !at(r, c).is_zero()) return false;
        }
    return true;
}

bool operator==(const FlatMatrix& a, const FlatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.spec_ == b.spec_ &&
           a.data_ == b.data_;
}

} // namespace algdeg
