#include "support.hpp"

#include <algorithm>

namespace testsup {

namespace {

FieldScalar det(const FlatMatrix& m, const std::vector<std::size_t>& rows,
                const std::vector<std::size_t>& cols) {
    // Laplace expansion along the first selected row; k <= 4 in practice.
    const std::size_t k = rows.size();
    if (k == 1) return m.at(rows[0], cols[0]);
    FieldScalar acc = FieldScalar::zero(m.spec());
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t c = 0; c < k; ++c) {
        const FieldScalar& pivot = m.at(rows[0], cols[c]);
        if (pivot.is_zero()) continue;
        std::vector<std::size_t> sub_cols;
        for (std::size_t cc = 0; cc < k; ++cc)
            if (cc != c) sub_cols.push_back(cols[cc]);
        FieldScalar term = pivot * det(m, sub_rows, sub_cols);
        if (c % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

bool some_nonzero_minor(const FlatMatrix& m, std::size_t k) {
    std::vector<std::size_t> rows(k), cols(k);
    std::vector<bool> row_mask(m.rows(), false), col_mask(m.cols(), false);
    std::fill(row_mask.begin(), row_mask.begin() + k, true);
    bool found = false;
    do {
        std::size_t ri = 0;
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (row_mask[r]) rows[ri++] = r + 1;
        std::fill(col_mask.begin(), col_mask.end(), false);
        std::fill(col_mask.begin(), col_mask.begin() + k, true);
        do {
            std::size_t ci = 0;
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (col_mask[c]) cols[ci++] = c + 1;
            if (!det(m, rows, cols).is_zero()) {
                found = true;
                break;
            }
        } while (std::prev_permutation(col_mask.begin(), col_mask.end()));
        if (found) break;
    } while (std::prev_permutation(row_mask.begin(), row_mask.end()));
    return found;
}

} // namespace

std::size_t rank_by_minors(const FlatMatrix& m) {
    const std::size_t bound = std::min(m.rows(), m.cols());
    for (std::size_t k = bound; k >= 1; --k)
        if (some_nonzero_minor(m, k)) return k;
    return 0;
}

namespace {

// Rows = the maps' matrices assembled from unit-vector products.
FlatMatrix left_map_matrix(const StructureVector& lambda) {
    const std::size_t n = lambda.n();
    const FieldSpec& fs = lambda.spec();
    FlatMatrix m(n, n * n, fs);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            const CoordinateVector prod = product(lambda, CoordinateVector::unit(n, fs, i),
                                                  CoordinateVector::unit(n, fs, j));
            for (std::size_t k = 1; k <= n; ++k) m.set(i, (j - 1) * n + k, prod.at(k));
        }
    }
    return m;
}

FlatMatrix right_map_matrix(const StructureVector& lambda) {
    const std::size_t n = lambda.n();
    const FieldSpec& fs = lambda.spec();
    FlatMatrix m(n, n * n, fs);
    for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t i = 1; i <= n; ++i) {
            const CoordinateVector prod = product(lambda, CoordinateVector::unit(n, fs, i),
                                                  CoordinateVector::unit(n, fs, j));
            for (std::size_t k = 1; k <= n; ++k) m.set(j, (i - 1) * n + k, prod.at(k));
        }
    }
    return m;
}

} // namespace

std::size_t ann_left_by_products(const StructureVector& lambda) {
    return lambda.n() - rank_by_minors(left_map_matrix(lambda));
}

std::size_t ann_right_by_products(const StructureVector& lambda) {
    return lambda.n() - rank_by_minors(right_map_matrix(lambda));
}

std::size_t ann_two_sided_by_products(const StructureVector& lambda) {
    return lambda.n() - rank_by_minors(left_map_matrix(lambda).hstack(right_map_matrix(lambda)));
}

std::size_t square_dim_by_products(const StructureVector& lambda) {
    const std::size_t n = lambda.n();
    const FieldSpec& fs = lambda.spec();
    FlatMatrix m(n * n, n, fs);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            const CoordinateVector prod = product(lambda, CoordinateVector::unit(n, fs, i),
                                                  CoordinateVector::unit(n, fs, j));
            for (std::size_t k = 1; k <= n; ++k) m.set((i - 1) * n + j, k, prod.at(k));
        }
    return rank_by_minors(m);
}

std::uint64_t inverse_by_search(std::uint64_t a, std::uint64_t p) {
    for (std::uint64_t k = 1; k < p; ++k)
        if (a * k % p == 1) return k;
    return 0;
}

bool star_pointwise_on_grid(const StructureVector& lambda) {
    const std::size_t n = lambda.n();
    const FieldSpec& fs = lambda.spec();
    std::vector<FieldScalar> vals;
    for (long long v : {0, 1, -1, 2}) vals.push_back(FieldScalar::of(fs, v));

    std::vector<std::size_t> ix(n, 0), iy(n, 0);
    auto bump = [&](std::vector<std::size_t>& idx) {
        std::size_t pos = n;
        while (pos > 0 && idx[pos - 1] + 1 == vals.size()) idx[--pos] = 0;
        if (pos == 0) return false;
        ++idx[pos - 1];
        return true;
    };
    do {
        CoordinateVector x(n, fs);
        for (std::size_t i = 0; i < n; ++i) x.set(i + 1, vals[ix[i]]);
        if (x.is_zero()) continue;
        std::fill(iy.begin(), iy.end(), 0);
        do {
            CoordinateVector y(n, fs);
            for (std::size_t i = 0; i < n; ++i) y.set(i + 1, vals[iy[i]]);
            if (y.is_zero()) continue;
            const CoordinateVector z = product(lambda, x, y);
            FlatMatrix m(3, n, fs);
            for (std::size_t k = 1; k <= n; ++k) {
                m.set(1, k, x.at(k));
                m.set(2, k, y.at(k));
                m.set(3, k, z.at(k));
            }
            if (m.rank() == 3) return false;
        } while (bump(iy));
    } while (bump(ix));
    return true;
}

} // namespace testsup
