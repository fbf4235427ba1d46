#include "algdeg/degen.hpp"

#include <algorithm>

#include "algdeg/catalog.hpp"
#include "algdeg/modspan.hpp"

namespace algdeg {

namespace {

StructureVector acted_source(const DegenerationVerdict& v) {
    return v.basis ? act(v.from, *v.basis) : v.from;
}

DegenerationVerdict make_grading_witness(DegenerationVerdict::Kind kind,
                                         const StructureVector& from, BasisChange basis,
                                         WeightVector q, std::size_t ideal_dim = 0) {
    const StructureVector acted = act(from, basis);
    if (!hypothesis_holds(acted, q))
        throw InternalError("witness construction left support below weight zero");
    StructureVector to = truncate(acted, q);
    DegenerationVerdict v{kind,
                          from,
                          std::move(to),
                          std::move(q),
                          std::move(basis),
                          ideal_dim,
                          {},
                          {},
                          {}};
    if (!v.self_verify()) throw InternalError("witness failed its own re-verification");
    return v;
}

// Per-coordinate sample values for deterministic witness-point searches.
// Small fields are swept whole; otherwise six small representatives suffice
// because the failing minors have per-variable degree at most 3.
std::vector<FieldScalar> sample_values(const FieldSpec& fs) {
    std::vector<FieldScalar> vals;
    if (fs.is_prime_field() && fs.prime() <= 3) {
        for (std::uint32_t r = 0; r < fs.prime(); ++r)
            vals.push_back(FieldScalar::of(fs, r));
        return vals;
    }
    for (long long v : {0, 1, -1, 2, -2, 3}) {
        FieldScalar s = FieldScalar::of(fs, v);
        if (std::find(vals.begin(), vals.end(), s) == vals.end()) vals.push_back(s);
    }
    return vals;
}

// Odometer over the sample grid; calls fn on every vector, zero included.
// fn returns true to stop.
template <typename Fn>
bool for_each_sample_vector(std::size_t n, const FieldSpec& fs, Fn&& fn) {
    const std::vector<FieldScalar> vals = sample_values(fs);
    std::vector<std::size_t> idx(n, 0);
    for (;;) {
        CoordinateVector x(n, fs);
        for (std::size_t i = 0; i < n; ++i) x.set(i + 1, vals[idx[i]]);
        if (fn(x)) return true;
        std::size_t pos = n;
        while (pos > 0 && idx[pos - 1] + 1 == vals.size()) idx[--pos] = 0;
        if (pos == 0) return false;
        ++idx[pos - 1];
    }
}

FlatMatrix rows_matrix(const std::vector<CoordinateVector>& rows, std::size_t n,
                       const FieldSpec& fs) {
    FlatMatrix m(rows.size(), n, fs);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 1; c <= n; ++c) m.set(r + 1, c, rows[r].at(c));
    return m;
}

// Columns = the given vectors, greedily completed with standard basis vectors.
BasisChange basis_from_vectors(const std::vector<CoordinateVector>& lead, std::size_t n,
                               const FieldSpec& fs) {
    std::vector<CoordinateVector> cols = lead;
    for (std::size_t i = 1; i <= n && cols.size() < n; ++i) {
        cols.push_back(CoordinateVector::unit(n, fs, i));
        if (rows_matrix(cols, n, fs).rank() != cols.size()) cols.pop_back();
    }
    if (cols.size() != n) throw InternalError("could not complete to a basis");
    FlatMatrix g(n, n, fs);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 1; i <= n; ++i) g.set(i, j + 1, cols[j].at(i));
    return BasisChange(std::move(g));
}

std::optional<std::pair<CoordinateVector, CoordinateVector>> find_pair_outside_span(
    const StructureVector& lambda) {
    const std::size_t n = lambda.n();
    const FieldSpec& fs = lambda.spec();
    std::optional<std::pair<CoordinateVector, CoordinateVector>> hit;
    for_each_sample_vector(n, fs, [&](const CoordinateVector& x) {
        if (x.is_zero()) return false;
        return for_each_sample_vector(n, fs, [&](const CoordinateVector& y) {
            if (y.is_zero()) return false;
            const CoordinateVector z = product(lambda, x, y);
            if (z.is_zero()) return false;
            if (rows_matrix({x, y, z}, n, fs).rank() == 3) {
                hit = {x, y};
                return true;
            }
            return false;
        });
    });
    return hit;
}

std::optional<CoordinateVector> find_square_outside_line(const StructureVector& lambda) {
    const std::size_t n = lambda.n();
    const FieldSpec& fs = lambda.spec();
    std::optional<CoordinateVector> hit;
    for_each_sample_vector(n, fs, [&](const CoordinateVector& x) {
        if (x.is_zero()) return false;
        const CoordinateVector w = product(lambda, x, x);
        if (w.is_zero()) return false;
        if (rows_matrix({x, w}, n, fs).rank() == 2) {
            hit = x;
            return true;
        }
        return false;
    });
    return hit;
}

// Unchecked constructions: valid whenever the needed pointwise facts hold at
// the adapted basis (they do under the callers' preconditions); every result
// still passes make_grading_witness's re-verification.

std::optional<DegenerationVerdict> heisenberg_witness_unchecked(const StructureVector& lambda) {
    const std::size_t n = lambda.n();
    const FieldSpec& fs = lambda.spec();
    const auto pair = find_pair_outside_span(lambda);
    if (!pair) return std::nullopt;
    const CoordinateVector z = product(lambda, pair->first, pair->second);
    const BasisChange g = basis_from_vectors({pair->first, pair->second, z}, n, fs);
    std::vector<long long> w(n, 2);
    w[0] = w[1] = 1;
    DegenerationVerdict v = make_grading_witness(DegenerationVerdict::Kind::WitnessGrading,
                                                 lambda, g, WeightVector(std::move(w)));
    if (v.to != catalog::eta(n, fs))
        throw InternalError("pair-adapted truncation is not the expected structure");
    return v;
}

std::optional<DegenerationVerdict> dn_witness_unchecked(const StructureVector& lambda) {
    const std::size_t n = lambda.n();
    const FieldSpec& fs = lambda.spec();
    const auto x = find_square_outside_line(lambda);
    if (!x) return std::nullopt;
    const CoordinateVector w = product(lambda, *x, *x);
    const BasisChange g = basis_from_vectors({*x, w}, n, fs);
    std::vector<long long> q(n, 2);
    q[0] = 1;
    DegenerationVerdict v = make_grading_witness(DegenerationVerdict::Kind::WitnessGrading,
                                                 lambda, g, WeightVector(std::move(q)));
    if (v.to != catalog::delta(n, fs))
        throw InternalError("square-adapted truncation is not the expected structure");
    return v;
}

// Scalar d with w = d * x, for x != 0; nullopt when w is off the line.
std::optional<FieldScalar> proportion(const CoordinateVector& x, const CoordinateVector& w) {
    const FieldSpec& fs = x.spec();
    FieldScalar d = FieldScalar::zero(fs);
    for (std::size_t i = 1; i <= x.n(); ++i)
        if (!x.at(i).is_zero()) {
            d = w.at(i) / x.at(i);
            break;
        }
    for (std::size_t i = 1; i <= x.n(); ++i)
        if (!(w.at(i) == d * x.at(i))) return std::nullopt;
    return d;
}

} // namespace

bool DegenerationVerdict::self_verify() const {
    if (kind != Kind::WitnessGrading && kind != Kind::WitnessIdeal) return true;
    if (!weights) return false;
    const StructureVector acted = acted_source(*this);
    return hypothesis_holds(acted, *weights) && truncate(acted, *weights) == to;
}

DegenerationVerdict necessary_conditions(const StructureVector& lambda,
                                         const StructureVector& mu) {
    if (lambda.n() != mu.n() || lambda.spec() != mu.spec())
        throw DimensionMismatch("vectors live in different spaces");

    auto blocked = [&](const std::string& cond, const std::string& a, const std::string& b) {
        return DegenerationVerdict{DegenerationVerdict::Kind::Blocked,
                                   lambda,
                                   mu,
                                   std::nullopt,
                                   std::nullopt,
                                   0,
                                   cond,
                                   a,
                                   b};
    };

    const AnnDims al = ann_dims(lambda), am = ann_dims(mu);
    if (am.left < al.left)
        return blocked("left annihilator dimension must not decrease",
                       std::to_string(al.left), std::to_string(am.left));
    if (am.right < al.right)
        return blocked("right annihilator dimension must not decrease",
                       std::to_string(al.right), std::to_string(am.right));
    const std::size_t sl = square_dim(lambda), sm = square_dim(mu);
    if (sm > sl)
        return blocked("product-span dimension must not increase", std::to_string(sl),
                       std::to_string(sm));

    struct ClosedClass {
        const char* name;
        bool (*test)(const StructureVector&);
    };
    const ClosedClass classes[] = {
        {"squares vanish (skew)", &is_skew},
        {"Lie", &is_lie},
        {"metabelian", &is_metabelian},
        {"commutative", &is_commutative},
        {"unimodular", &is_unimodular},
        {"rho-closure P", &in_P},
    };
    for (const auto& c : classes) {
        const bool inl = c.test(lambda);
        if (inl && !c.test(mu))
            return blocked(std::string("closed class \"") + c.name +
                               "\" membership must carry over",
                           "true", "false");
    }
    return DegenerationVerdict{DegenerationVerdict::Kind::Inconclusive,
                               lambda,
                               mu,
                               std::nullopt,
                               std::nullopt,
                               0,
                               {},
                               {},
                               {}};
}

DegenerationVerdict witness_to_abelian(const StructureVector& lambda) {
    return make_grading_witness(DegenerationVerdict::Kind::WitnessGrading, lambda,
                                BasisChange::identity(lambda.n(), lambda.spec()),
                                WeightVector::constant(lambda.n(), 1));
}

DegenerationVerdict witness_ideal(const StructureVector& lambda,
                                  const std::vector<CoordinateVector>& ideal) {
    const std::size_t n = lambda.n();
    const FieldSpec& fs = lambda.spec();
    const std::size_t m = ideal.size();
    if (m < 1 || m >= n)
        throw NotAnIdeal("ideal must be a proper nonzero subspace");
    for (const auto& v : ideal)
        if (v.n() != n || v.spec() != fs)
            throw DimensionMismatch("ideal vectors do not match the structure vector");
    FlatMatrix span = rows_matrix(ideal, n, fs);
    if (span.rank() != m) throw NotAnIdeal("ideal vectors are linearly dependent");

    const Rref rr = span.rref();
    auto inside = [&](const CoordinateVector& v) {
        std::vector<FieldScalar> r(n, FieldScalar::zero(fs));
        for (std::size_t c = 1; c <= n; ++c) r[c - 1] = v.at(c);
        for (std::size_t row = 0; row < rr.rank; ++row) {
            const std::size_t pc = rr.pivot_cols[row];
            const FieldScalar f = r[pc - 1];
            if (f.is_zero()) continue;
            for (std::size_t c = 1; c <= n; ++c) r[c - 1] -= f * rr.matrix.at(row + 1, c);
        }
        for (const auto& e : r)
            if (!e.is_zero()) return false;
        return true;
    };
    for (const auto& w : ideal)
        for (std::size_t i = 1; i <= n; ++i) {
            const CoordinateVector e = CoordinateVector::unit(n, fs, i);
            if (!inside(product(lambda, w, e)) || !inside(product(lambda, e, w)))
                throw NotAnIdeal("products escape the claimed ideal");
        }

    const BasisChange g = basis_from_vectors(ideal, n, fs);
    std::vector<long long> q(n, 1);
    for (std::size_t i = 0; i < m; ++i) q[i] = 0;
    return make_grading_witness(DegenerationVerdict::Kind::WitnessIdeal, lambda, g,
                                WeightVector(std::move(q)), m);
}

DegenerationVerdict witness_to_heisenberg(const StructureVector& lambda) {
    if (lambda.n() < 3)
        throw PreconditionFailed("the pair-adapted witness needs n >= 3");
    if (!satisfies_star_star(lambda))
        throw PreconditionFailed("squares must stay in the span of their element");
    if (satisfies_star(lambda))
        throw PreconditionFailed("every product already stays in the span of its factors");
    auto v = heisenberg_witness_unchecked(lambda);
    if (!v) throw InternalError("no failing sample pair found despite the identity failing");
    return *v;
}

DegenerationVerdict witness_to_dn(const StructureVector& lambda) {
    if (satisfies_star_star(lambda))
        throw PreconditionFailed("every square already stays on the line of its element");
    auto v = dn_witness_unchecked(lambda);
    if (!v) throw InternalError("no failing sample found despite the identity failing");
    return *v;
}

EAlphaWitness witness_to_e_alpha(const StructureVector& lambda) {
    const std::size_t n = lambda.n();
    const FieldSpec& fs = lambda.spec();
    if (is_skew(lambda))
        throw PreconditionFailed("the idempotent normalization needs a non-skew structure");
    if (!satisfies_star(lambda))
        throw PreconditionFailed("products must stay in the span of their factors");

    // Some sample vector has a nonzero square: the unit vectors and their
    // pairwise sums already witness non-skewness.
    std::optional<CoordinateVector> seed;
    for_each_sample_vector(n, fs, [&](const CoordinateVector& x) {
        if (x.is_zero()) return false;
        if (product(lambda, x, x).is_zero()) return false;
        seed = x;
        return true;
    });
    if (!seed) throw InternalError("no sample vector with a nonzero square");

    const auto c = proportion(*seed, product(lambda, *seed, *seed));
    if (!c || c->is_zero())
        throw InternalError("square is off its element's line despite the identity");
    std::vector<CoordinateVector> basis{seed->scaled(c->inverse())};
    const BasisChange completion = basis_from_vectors(basis, n, fs);

    // Scale every completed vector with a nonzero square to an idempotent,
    // then order them right after the leading one.
    std::vector<CoordinateVector> idempotents, nulls;
    for (std::size_t j = 2; j <= n; ++j) {
        CoordinateVector f(n, fs);
        for (std::size_t i = 1; i <= n; ++i) f.set(i, completion.matrix().at(i, j));
        const auto d = proportion(f, product(lambda, f, f));
        if (!d) throw InternalError("square is off its element's line despite the identity");
        if (d->is_zero())
            nulls.push_back(std::move(f));
        else
            idempotents.push_back(f.scaled(d->inverse()));
    }
    for (const auto& e : idempotents) basis.push_back(basis.front() - e);
    for (const auto& e : nulls) basis.push_back(e);

    const BasisChange g = basis_from_vectors(basis, n, fs);
    std::vector<long long> q(n, 1);
    q[0] = 0;
    DegenerationVerdict v = make_grading_witness(DegenerationVerdict::Kind::WitnessGrading,
                                                 lambda, g, WeightVector(std::move(q)));
    const FieldScalar alpha = v.to.at(1, 2, 2);
    if (v.to != catalog::epsilon(n, fs, alpha))
        throw InternalError("normalized truncation is not in the expected family");
    return EAlphaWitness{std::move(v), alpha};
}

std::string label_name(LabelKind k) {
    switch (k) {
        case LabelKind::Abelian: return "Abelian";
        case LabelKind::R_n: return "R_n";
        case LabelKind::H_n: return "H_n";
        case LabelKind::D_n: return "D_n";
        case LabelKind::E_n_alpha: return "E_n(alpha)";
        case LabelKind::NotLevelOne: return "NotLevelOne";
        case LabelKind::Dim2Family: return "Dim2Family";
    }
    return "?";
}

ClassificationLabel classify(const StructureVector& lambda) {
    const std::size_t n = lambda.n();
    const FieldSpec& fs = lambda.spec();

    if (lambda.is_zero()) return {LabelKind::Abelian, std::nullopt, std::nullopt, {}};
    if (n == 2) return {LabelKind::Dim2Family, std::nullopt, std::nullopt, {}};

    auto not_level_one = [&](std::optional<DegenerationVerdict> w, const char* missing) {
        ClassificationLabel l{LabelKind::NotLevelOne, std::nullopt, std::nullopt, {}};
        if (w)
            l.witness = std::move(*w);
        else
            l.note = missing;
        return l;
    };

    if (is_skew(lambda)) {
        if (in_P(lambda)) return {LabelKind::R_n, std::nullopt, std::nullopt, {}};
        if (is_metabelian(lambda) && ann_dims(lambda).two_sided == n - 2)
            return {LabelKind::H_n, std::nullopt, std::nullopt, {}};
        return not_level_one(heisenberg_witness_unchecked(lambda),
                             "no failing sample pair in this field");
    }

    if (!satisfies_star_star(lambda)) {
        if (is_commutative(lambda) && is_metabelian(lambda) &&
            ann_dims(lambda).two_sided == n - 1)
            return {LabelKind::D_n, std::nullopt, std::nullopt, {}};
        return not_level_one(dn_witness_unchecked(lambda),
                             "no failing sample in this field");
    }

    if (satisfies_star(lambda)) {
        EAlphaWitness w = witness_to_e_alpha(lambda);
        const StructureVector acted = act(lambda, *w.verdict.basis);
        if (acted == catalog::epsilon(n, fs, w.alpha))
            return {LabelKind::E_n_alpha, w.alpha, std::nullopt, {}};
        ClassificationLabel l{LabelKind::NotLevelOne, std::nullopt, std::move(w.verdict), {}};
        return l;
    }
    return not_level_one(heisenberg_witness_unchecked(lambda),
                         "no failing sample pair in this field");
}

} // namespace algdeg
