#include "algdeg/structure_vector.hpp"

namespace algdeg {

std::size_t index_of(std::size_t i, std::size_t j, std::size_t k, std::size_t n) {
    if (i < 1 || i > n || j < 1 || j > n || k < 1 || k > n)
        throw IndexOutOfRange("triple (" + std::to_string(i) + "," + std::to_string(j) +
                              "," + std::to_string(k) + ") out of range for n=" +
                              std::to_string(n));
    return (i - 1) * n * n + (j - 1) * n + k;
}

std::size_t index_of(const Triple& t, std::size_t n) { return index_of(t.i, t.j, t.k, n); }

Triple triple_of(std::size_t m, std::size_t n) {
    if (m < 1 || m > n * n * n)
        throw IndexOutOfRange("flat index " + std::to_string(m) + " out of range for n=" +
                              std::to_string(n));
    const std::size_t t = m - 1;
    return Triple{t / (n * n) + 1, (t / n) % n + 1, t % n + 1};
}

StructureVector::StructureVector(std::size_t n, const FieldSpec& fs)
    : n_(n), spec_(fs), entries_(n * n * n, FieldScalar::zero(fs)) {
    if (n < 2) throw DimensionTooSmall("structure vectors need n >= 2");
}

const FieldScalar& StructureVector::at(std::size_t i, std::size_t j, std::size_t k) const {
    return entries_[index_of(i, j, k, n_) - 1];
}

const FieldScalar& StructureVector::at_flat(std::size_t m) const {
    if (m < 1 || m > entries_.size())
        throw IndexOutOfRange("flat index " + std::to_string(m) + " out of range");
    return entries_[m - 1];
}

void StructureVector::set(std::size_t i, std::size_t j, std::size_t k, FieldScalar v) {
    if (v.spec() != spec_)
        throw DimensionMismatch("entry field differs from vector field");
    entries_[index_of(i, j, k, n_) - 1] = std::move(v);
}

void StructureVector::set_flat(std::size_t m, FieldScalar v) {
    if (m < 1 || m > entries_.size())
        throw IndexOutOfRange("flat index " + std::to_string(m) + " out of range");
    if (v.spec() != spec_)
        throw DimensionMismatch("entry field differs from vector field");
    entries_[m - 1] = std::move(v);
}

bool StructureVector::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

void StructureVector::require_compatible(const StructureVector& o) const {
    if (n_ != o.n_ || spec_ != o.spec_)
        throw DimensionMismatch("structure vectors have different dimension or field");
}

StructureVector StructureVector::operator+(const StructureVector& o) const {
    require_compatible(o);
    StructureVector out = *this;
    for (std::size_t m = 0; m < entries_.size(); ++m) out.entries_[m] += o.entries_[m];
    return out;
}

StructureVector StructureVector::operator-(const StructureVector& o) const {
    require_compatible(o);
    StructureVector out = *this;
    for (std::size_t m = 0; m < entries_.size(); ++m) out.entries_[m] -= o.entries_[m];
    return out;
}

StructureVector StructureVector::scaled(const FieldScalar& c) const {
    StructureVector out = *this;
    for (auto& e : out.entries_) e *= c;
    return out;
}

void StructureVector::sub_scaled(const StructureVector& o, const FieldScalar& c) {
    require_compatible(o);
    if (c.is_zero()) return;
    for (std::size_t m = 0; m < entries_.size(); ++m) {
        if (o.entries_[m].is_zero()) continue;
        entries_[m] -= c * o.entries_[m];
    }
}

FlatMatrix StructureVector::flatten_a() const {
    FlatMatrix m(n_, n_ * n_, spec_);
    for (std::size_t l = 1; l <= n_; ++l)
        for (std::size_t c = 1; c <= n_ * n_; ++c)
            m.set(l, c, entries_[(l - 1) * n_ * n_ + c - 1]);
    return m;
}

FlatMatrix StructureVector::flatten_b() const {
    FlatMatrix m(n_, n_ * n_, spec_);
    for (std::size_t l = 1; l <= n_; ++l)
        for (std::size_t c = 1; c <= n_ * n_; ++c)
            m.set(l, c, entries_[(c - 1) * n_ + l - 1]);
    return m;
}

bool operator==(const StructureVector& a, const StructureVector& b) {
    return a.n_ == b.n_ && a.spec_ == b.spec_ && a.entries_ == b.entries_;
}

int StructureVector::cmp(const StructureVector& o) const {
    if (n_ != o.n_) return n_ < o.n_ ? -1 : 1;
    for (std::size_t m = 0; m < entries_.size(); ++m) {
        const int c = entries_[m].cmp(o.entries_[m]);
        if (c != 0) return c;
    }
    return 0;
}

} // namespace algdeg
