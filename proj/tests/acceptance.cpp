// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Everything is exact; no tolerances enter anywhere.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "algdeg/catalog.hpp"
#include "algdeg/degen.hpp"
#include "algdeg/json_io.hpp"
#include "algdeg/modspan.hpp"
#include "support.hpp"

using namespace algdeg;
using testsup::Rng;

namespace {

int g_failures = 0;

struct Criterion {
    bool ok = true;
    std::vector<std::string> notes;
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (notes.size() < 8) notes.push_back(what);
        }
    }
};

void run(int num, const std::string& name, const std::function<void(Criterion&)>& body) {
    Criterion c;
    try {
        body(c);
    } catch (const std::exception& e) {
        c.ok = false;
        c.notes.push_back(std::string("exception: ") + e.what());
    }
    std::printf("[%s] criterion %d: %s\n", c.ok ? "PASS" : "FAIL", num, name.c_str());
    for (const auto& note : c.notes) std::printf("       %s\n", note.c_str());
    std::fflush(stdout);
    if (!c.ok) ++g_failures;
}

const FieldSpec Q = FieldSpec::rationals();

StructureVector solvable_example(const FieldSpec& fs) {
    StructureVector v(3, fs);
    v.set(1, 2, 2, FieldScalar::one(fs));
    v.set(2, 1, 2, -FieldScalar::one(fs));
    v.set(1, 3, 3, FieldScalar::of(fs, 2));
    v.set(3, 1, 3, FieldScalar::of(fs, -2));
    return v;
}

void criterion_dimensions(Criterion& c) {
    for (std::size_t n : {3u, 4u, 5u, 6u}) {
        c.expect(dim_Sk(n) == n * n * (n - 1) / 2, "closed form Sk, n=" + std::to_string(n));
        c.expect(dim_P(n) == n, "closed form P, n=" + std::to_string(n));
        c.expect(dim_U(n) == n * (n - 2) * (n + 1) / 2, "closed form U, n=" + std::to_string(n));
        c.expect(dim_P(n) + dim_U(n) == dim_Sk(n), "dimension identity, n=" + std::to_string(n));
        for (const auto& fs : {FieldSpec::rationals(), FieldSpec::prime_field(5)}) {
            c.expect(solution_dim_sk(n, fs) == dim_Sk(n),
                     "linear system Sk, n=" + std::to_string(n));
            c.expect(solution_dim_p(n, fs) == dim_P(n),
                     "linear system P, n=" + std::to_string(n));
            c.expect(solution_dim_u(n, fs) == dim_U(n),
                     "linear system U, n=" + std::to_string(n));
        }
    }
}

void criterion_spans(Criterion& c) {
    for (const auto& fs :
         {FieldSpec::rationals(), FieldSpec::prime_field(5), FieldSpec::prime_field(7)}) {
        for (std::size_t n : {3u, 4u, 5u}) {
            const std::string tag = " n=" + std::to_string(n);
            const SubspaceBasis rho_span = fg_span(catalog::rho(n, fs));
            c.expect(rho_span.dim() == dim_P(n), "rho span dimension" + tag);
            bool all_p = true;
            for (const auto& v : rho_span.basis()) all_p = all_p && in_P(v);
            c.expect(all_p, "rho span inside P" + tag);

            const SubspaceBasis eta_span = fg_span(catalog::eta(n, fs));
            c.expect(eta_span.dim() == dim_U(n), "eta span dimension" + tag);
            bool all_u = true;
            for (const auto& v : eta_span.basis()) all_u = all_u && in_U(v);
            c.expect(all_u, "eta span inside U" + tag);
        }
    }
}

void criterion_composition(Criterion& c) {
    for (std::size_t n : {3u, 4u}) {
        const CompositionReport r = composition_branch(n, Q);
        c.expect(!r.char_divides_n_minus_1, "rational case splits, n=" + std::to_string(n));
        c.expect(r.intersection_dim == 0, "trivial intersection, n=" + std::to_string(n));
        c.expect(r.dim_rho_span + r.dim_eta_span == r.dim_sk,
                 "dimensions add up, n=" + std::to_string(n));
        c.expect(r.direct_sum_verified && r.verified(), "direct sum, n=" + std::to_string(n));
    }
    {
        const CompositionReport r = composition_branch(3, FieldSpec::prime_field(2));
        c.expect(r.char_divides_n_minus_1 && r.rho_in_eta_span && r.rho_span_inside_eta_span,
                 "chain over F_2, n=3");
        c.expect(r.chain_verified && r.verified(), "chain verified over F_2, n=3");
    }
    {
        const CompositionReport r = composition_branch(4, FieldSpec::prime_field(3));
        c.expect(r.char_divides_n_minus_1 && r.rho_in_eta_span && r.rho_span_inside_eta_span,
                 "chain over F_3, n=4");
        c.expect(r.chain_verified && r.verified(), "chain verified over F_3, n=4");
    }
    c.expect(!in_U(catalog::rho(4, FieldSpec::prime_field(2))), "rho outside U over F_2, n=4");
}

void criterion_orbits(Criterion& c) {
    const FieldSpec f2 = FieldSpec::prime_field(2);
    const OrbitEnumeration k2_orbit =
        enumerate_orbit(catalog::k2_member(f2, FieldScalar::one(f2), FieldScalar::one(f2)));
    c.expect(k2_orbit.size() == 3, "family representative orbit has 3 points");
    std::size_t family_hits = 0;
    for (long long a : {0, 1})
        for (long long b : {0, 1}) {
            const StructureVector m =
                catalog::k2_member(f2, FieldScalar::of(f2, a), FieldScalar::of(f2, b));
            const bool in_orbit = k2_orbit.contains(m);
            if (in_orbit || m.is_zero()) ++family_hits;
            c.expect(in_orbit == !m.is_zero(), "family membership (a,b)=(" +
                                                   std::to_string(a) + "," + std::to_string(b) + ")");
        }
    c.expect(family_hits == 4, "orbit plus zero covers the 4-element family");
    c.expect(enumerate_orbit(catalog::abelian(2, f2)).size() == 1, "zero orbit is a point");

    for (std::uint32_t p : {2u, 3u}) {
        const FieldSpec fs = FieldSpec::prime_field(p);
        std::vector<StructureVector> reps{
            catalog::abelian(2, fs),
            catalog::delta(2, fs),
            catalog::k2_member(fs, FieldScalar::one(fs), FieldScalar::one(fs)),
            catalog::abelian(3, fs),
            catalog::rho(3, fs),
            catalog::eta(3, fs),
            catalog::delta(3, fs)};
        for (const auto& rep : reps) {
            const OrbitEnumeration orbit = enumerate_orbit(rep);
            const InvariantProfile base = invariant_profile(rep);
            bool constant = true;
            for (std::size_t i = 0; i < orbit.size() && constant; ++i)
                constant = invariant_profile(orbit.member(i)) == base;
            c.expect(constant, "invariants constant on an orbit, p=" + std::to_string(p));
        }
    }
}

void criterion_classifier(Criterion& c) {
    Rng rng(101);
    for (std::size_t n : {3u, 4u}) {
        const std::string tag = " n=" + std::to_string(n);
        std::vector<std::pair<StructureVector, ClassificationLabel>> golden;
        golden.push_back({catalog::abelian(n, Q), {LabelKind::Abelian, {}, {}, {}}});
        golden.push_back({catalog::rho(n, Q), {LabelKind::R_n, {}, {}, {}}});
        golden.push_back({catalog::eta(n, Q), {LabelKind::H_n, {}, {}, {}}});
        golden.push_back({catalog::delta(n, Q), {LabelKind::D_n, {}, {}, {}}});
        for (const char* a : {"0", "1", "2", "1/2"}) {
            const FieldScalar alpha = FieldScalar::parse(Q, a);
            golden.push_back({catalog::epsilon(n, Q, alpha),
                              {LabelKind::E_n_alpha, alpha, {}, {}}});
        }
        for (const auto& [vec, expected] : golden) {
            const ClassificationLabel got = classify(vec);
            c.expect(got == expected, "golden label" + tag);
            for (int t = 0; t < 50; ++t) {
                const BasisChange g = testsup::random_basis_change(rng, n, Q);
                c.expect(classify(act(vec, g)) == expected, "label invariance" + tag);
            }
        }
    }
    const ClassificationLabel l = classify(solvable_example(Q));
    c.expect(l.kind == LabelKind::NotLevelOne, "solvable example is not level one");
    c.expect(l.witness.has_value() && l.witness->to == catalog::eta(3, Q) &&
                 l.witness->self_verify(),
             "solvable example carries a self-verifying witness");
    for (int t = 0; t < 50; ++t) {
        const BasisChange g = testsup::random_basis_change(rng, 3, Q);
        const ClassificationLabel img = classify(act(solvable_example(Q), g));
        c.expect(img.kind == LabelKind::NotLevelOne && img.witness.has_value() &&
                     img.witness->self_verify(),
                 "not-level-one invariance with live witnesses");
    }
}

void criterion_truncation_consistency(Criterion& c) {
    Rng rng(103);
    for (const auto& fs : {FieldSpec::rationals(), FieldSpec::prime_field(5)}) {
        for (int t = 0; t < 100; ++t) {
            StructureVector v = testsup::random_vector(rng, 3, fs, 0.4);
            std::vector<long long> w{rng.range(-2, 2), rng.range(-2, 2), rng.range(-2, 2)};
            const WeightVector q{w};
            for (std::size_t m = 1; m <= v.size(); ++m)
                if (triple_weight(q, triple_of(m, 3)) < 0)
                    v.set_flat(m, FieldScalar::zero(fs));
            if (!hypothesis_holds(v, q)) {
                c.expect(false, "hypothesis must hold by construction");
                continue;
            }
            const StructureVector tr = truncate(v, q);
            c.expect(necessary_conditions(v, tr).kind ==
                         DegenerationVerdict::Kind::Inconclusive,
                     "truncation is never blocked");
            const AnnDims av = ann_dims(v), at = ann_dims(tr);
            c.expect(at.left >= av.left && at.right >= av.right,
                     "annihilators grow under truncation");
            c.expect(square_dim(tr) <= square_dim(v), "squares shrink under truncation");
            if (is_skew(v)) c.expect(is_skew(tr), "skew is preserved");
            if (is_lie(v)) c.expect(is_lie(tr), "Lie is preserved");
            if (is_metabelian(v)) c.expect(is_metabelian(tr), "metabelian is preserved");
            if (is_commutative(v)) c.expect(is_commutative(tr), "commutative is preserved");
            if (is_unimodular(v)) c.expect(is_unimodular(tr), "unimodular is preserved");
            if (in_P(v)) c.expect(in_P(tr), "the rho closure is preserved");
        }
    }
}

void criterion_action_laws(Criterion& c) {
    Rng rng(107);
    for (const auto& fs : {FieldSpec::rationals(), FieldSpec::prime_field(5)}) {
        for (std::size_t n : {3u, 4u}) {
            std::vector<StructureVector> pool{
                catalog::rho(n, fs), catalog::eta(n, fs), catalog::delta(n, fs),
                catalog::epsilon(n, fs, FieldScalar::of(fs, 2)),
                testsup::random_vector(rng, n, fs)};
            std::vector<InvariantProfile> base;
            for (const auto& v : pool) base.push_back(invariant_profile(v));
            for (int t = 0; t < 100; ++t) {
                const std::size_t pick = t % pool.size();
                const StructureVector& v = pool[pick];
                const BasisChange g = testsup::random_basis_change(rng, n, fs);
                if (t < 20) {
                    const BasisChange h = testsup::random_basis_change(rng, n, fs);
                    c.expect(act(act(v, g), h) == act(v, g.then(h)), "composition law");
                    c.expect(act(v, BasisChange::identity(n, fs)) == v, "identity law");
                }
                c.expect(invariant_profile(act(v, g)) == base[pick],
                         "ten invariants constant under basis change");
            }
        }
    }
}

void criterion_shear_identity(Criterion& c) {
    for (const auto& fs : {FieldSpec::rationals(), FieldSpec::prime_field(5)}) {
        for (std::size_t n : {3u, 4u}) {
            const BasisChange shear =
                BasisChange::transvection(n, fs, 2, 3, FieldScalar::one(fs));
            const StructureVector lhs = act(catalog::eta(n, fs), shear);
            const StructureVector rhs = catalog::lambda_hat(1, 2, 3, n, fs) -
                                        catalog::lambda_hat(1, 3, 2, n, fs) -
                                        catalog::lambda_tilde(1, 2, 3, n, fs);
            c.expect(lhs == rhs, "shear image of eta, n=" + std::to_string(n));
        }
    }
}

void criterion_recognition(Criterion& c) {
    Rng rng(109);
    for (const auto& fs : {FieldSpec::rationals(), FieldSpec::prime_field(5)}) {
        for (std::size_t n : {3u, 4u}) {
            const StructureVector eta = catalog::eta(n, fs);
            const StructureVector delta = catalog::delta(n, fs);
            for (int t = 0; t < 100; ++t) {
                const BasisChange g = testsup::random_basis_change(rng, n, fs);
                const StructureVector ei = act(eta, g);
                c.expect(is_skew(ei) && is_metabelian(ei) &&
                             ann_dims(ei).two_sided == n - 2,
                         "eta image satisfies the recognition facts");
                c.expect(classify(ei).kind == LabelKind::H_n, "eta image classifies H_n");

                const StructureVector di = act(delta, g);
                c.expect(is_commutative(di) && is_metabelian(di) &&
                             ann_dims(di).two_sided == n - 1,
                         "delta image satisfies the recognition facts");
                c.expect(classify(di).kind == LabelKind::D_n, "delta image classifies D_n");
            }
        }
    }
}

} // namespace

int main() {
    run(1, "dimension formulas, closed form and defining linear systems", criterion_dimensions);
    run(2, "span saturation reproduces the module structure (n=3,4,5 over Q, F_5, F_7)",
        criterion_spans);
    run(3, "composition branch: direct sum vs chain", criterion_composition);
    run(4, "finite-field orbit facts by exhaustive enumeration", criterion_orbits);
    run(5, "classifier golden table with basis-change invariance", criterion_classifier);
    run(6, "truncation under the hypothesis passes all necessary conditions",
        criterion_truncation_consistency);
    run(7, "action laws and invariance of all ten invariants", criterion_action_laws);
    run(8, "exact shear identity on eta", criterion_shear_identity);
    run(9, "recognition facts on random orbit samples", criterion_recognition);
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
