#include "algdeg/modspan.hpp"

#include <algorithm>
#include <deque>

#include "algdeg/algebra.hpp"
#include "algdeg/catalog.hpp"

namespace algdeg {

SubspaceBasis::SubspaceBasis(std::size_t n, const FieldSpec& fs) : n_(n), spec_(fs) {
    if (n < 2) throw DimensionTooSmall("subspaces need n >= 2");
}

StructureVector SubspaceBasis::reduce(const StructureVector& v) const {
    if (v.n() != n_ || v.spec() != spec_)
        throw DimensionMismatch("vector does not match the subspace ambient space");
    StructureVector r = v;
    for (std::size_t idx = 0; idx < rows_.size(); ++idx) {
        const FieldScalar c = r.at_flat(pivots_[idx]);
        r.sub_scaled(rows_[idx], c);
    }
    return r;
}

bool SubspaceBasis::contains(const StructureVector& v) const {
    return reduce(v).is_zero();
}

bool SubspaceBasis::insert(const StructureVector& v) {
    StructureVector r = reduce(v);
    std::size_t pivot = 0;
    for (std::size_t m = 1; m <= r.size(); ++m) {
        if (!r.at_flat(m).is_zero()) {
            pivot = m;
            break;
        }
    }
    if (pivot == 0) return false;
    r = r.scaled(r.at_flat(pivot).inverse());
    // Clear the new pivot coordinate from the existing rows, then keep the
    // rows ordered by pivot position.
    for (std::size_t idx = 0; idx < rows_.size(); ++idx) {
        const FieldScalar c = rows_[idx].at_flat(pivot);
        rows_[idx].sub_scaled(r, c);
    }
    const auto where = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    const std::size_t at = static_cast<std::size_t>(where - pivots_.begin());
    pivots_.insert(where, pivot);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(r));
    return true;
}

bool in_P(const StructureVector& lambda) {
    if (!is_skew(lambda)) return false;
    const std::size_t n = lambda.n();
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t k = 1; k <= n; ++k)
                if (k != i && k != j && !lambda.at(i, j, k).is_zero()) return false;
    for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t k = i + 1; k <= n; ++k) {
                if (j == i || j == k) continue;
                if (!(lambda.at(i, j, i) == lambda.at(k, j, k))) return false;
            }
    return true;
}

bool in_U(const StructureVector& lambda) {
    return is_skew(lambda) && is_unimodular(lambda);
}

std::size_t dim_P(std::size_t n) {
    if (n < 3) throw DimensionTooSmall("dim_P needs n >= 3");
    return n;
}

std::size_t dim_U(std::size_t n) {
    if (n < 3) throw DimensionTooSmall("dim_U needs n >= 3");
    return n * (n - 2) * (n + 1) / 2;
}

std::size_t dim_Sk(std::size_t n) {
    if (n < 3) throw DimensionTooSmall("dim_Sk needs n >= 3");
    return n * n * (n - 1) / 2;
}

namespace {

FlatMatrix constraints_from_rows(const std::vector<std::vector<std::pair<std::size_t, int>>>& rows,
                                 std::size_t n, const FieldSpec& fs) {
    FlatMatrix m(rows.size(), n * n * n, fs);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [col, coeff] : rows[r])
            m.set(r + 1, col, FieldScalar::of(fs, coeff));
    return m;
}

std::vector<std::vector<std::pair<std::size_t, int>>> sk_rows(std::size_t n) {
    std::vector<std::vector<std::pair<std::size_t, int>>> rows;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t k = 1; k <= n; ++k)
            rows.push_back({{index_of(i, i, k, n), 1}});
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            for (std::size_t k = 1; k <= n; ++k)
                rows.push_back({{index_of(i, j, k, n), 1}, {index_of(j, i, k, n), 1}});
    return rows;
}

} // namespace

FlatMatrix constraint_matrix_sk(std::size_t n, const FieldSpec& fs) {
    return constraints_from_rows(sk_rows(n), n, fs);
}

FlatMatrix constraint_matrix_p(std::size_t n, const FieldSpec& fs) {
    auto rows = sk_rows(n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t k = 1; k <= n; ++k)
                if (k != i && k != j) rows.push_back({{index_of(i, j, k, n), 1}});
    for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t k = i + 1; k <= n; ++k) {
                if (j == i || j == k) continue;
                rows.push_back({{index_of(i, j, i, n), 1}, {index_of(k, j, k, n), -1}});
            }
    return constraints_from_rows(rows, n, fs);
}

FlatMatrix constraint_matrix_u(std::size_t n, const FieldSpec& fs) {
    auto rows = sk_rows(n);
    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<std::pair<std::size_t, int>> trace_row;
        for (std::size_t j = 1; j <= n; ++j) trace_row.push_back({index_of(i, j, j, n), 1});
        rows.push_back(std::move(trace_row));
    }
    return constraints_from_rows(rows, n, fs);
}

std::size_t solution_dim_sk(std::size_t n, const FieldSpec& fs) {
    return n * n * n - constraint_matrix_sk(n, fs).rank();
}

std::size_t solution_dim_p(std::size_t n, const FieldSpec& fs) {
    return n * n * n - constraint_matrix_p(n, fs).rank();
}

std::size_t solution_dim_u(std::size_t n, const FieldSpec& fs) {
    return n * n * n - constraint_matrix_u(n, fs).rank();
}

namespace {

std::vector<BasisChange> span_generators(std::size_t n, const FieldSpec& fs) {
    std::vector<BasisChange> gens;
    for (std::size_t i = 1; i + 1 <= n; ++i)
        gens.push_back(
            BasisChange::permutation_matrix(Permutation::transposition(n, i, i + 1), fs));
    gens.push_back(BasisChange::permutation_matrix(Permutation::cycle(n), fs));

    std::vector<FieldScalar> shear_params, scale_params;
    if (fs.is_rationals()) {
        for (long long t : {1, 2, 3, 4, 5}) shear_params.push_back(FieldScalar::of(fs, t));
        for (long long u : {2, 3, 4, 5}) scale_params.push_back(FieldScalar::of(fs, u));
    } else {
        for (std::uint32_t t = 1; t < fs.prime(); ++t)
            shear_params.push_back(FieldScalar::of(fs, t));
        for (std::uint32_t u = 2; u < fs.prime(); ++u)
            scale_params.push_back(FieldScalar::of(fs, u));
    }
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            if (i == j) continue;
            for (const auto& t : shear_params)
                gens.push_back(BasisChange::transvection(n, fs, i, j, t));
        }
    for (std::size_t i = 1; i <= n; ++i)
        for (const auto& u : scale_params) {
            std::vector<FieldScalar> d(n, FieldScalar::one(fs));
            d[i - 1] = u;
            gens.push_back(BasisChange::diagonal(d));
        }
    return gens;
}

} // namespace

SubspaceBasis fg_span(const StructureVector& lambda) {
    const std::size_t n = lambda.n();
    if (n > 6) throw DimensionTooLarge("span saturation is guarded to n <= 6");
    const FieldSpec& fs = lambda.spec();
    const std::vector<BasisChange> gens = span_generators(n, fs);

    SubspaceBasis span(n, fs);
    std::deque<StructureVector> work;
    if (span.insert(lambda)) work.push_back(lambda);
    while (!work.empty()) {
        const StructureVector v = std::move(work.front());
        work.pop_front();
        for (const auto& g : gens) {
            StructureVector w = act(v, g);
            if (span.insert(w)) work.push_back(std::move(w));
        }
    }
    return span;
}

CompositionReport composition_branch(std::size_t n, const FieldSpec& fs) {
    if (n < 3) throw DimensionTooSmall("composition analysis needs n >= 3");
    const SubspaceBasis rho_span = fg_span(catalog::rho(n, fs));
    const SubspaceBasis eta_span = fg_span(catalog::eta(n, fs));

    CompositionReport r{n,     fs,    fs.char_divides(static_cast<long long>(n) - 1),
                        rho_span.dim(), eta_span.dim(), dim_Sk(n),
                        0,     false, false,
                        false, false};

    // dim(A cap B) = dim A + dim B - dim(A + B).
    SubspaceBasis joint(n, fs);
    for (const auto& v : rho_span.basis()) joint.insert(v);
    for (const auto& v : eta_span.basis()) joint.insert(v);
    r.intersection_dim = rho_span.dim() + eta_span.dim() - joint.dim();

    r.rho_in_eta_span = eta_span.contains(catalog::rho(n, fs));
    r.rho_span_inside_eta_span = true;
    for (const auto& v : rho_span.basis())
        if (!eta_span.contains(v)) {
            r.rho_span_inside_eta_span = false;
            break;
        }

    r.direct_sum_verified =
        r.intersection_dim == 0 && r.dim_rho_span + r.dim_eta_span == r.dim_sk;
    r.chain_verified = r.rho_in_eta_span && r.rho_span_inside_eta_span;
    return r;
}

} // namespace algdeg
