#include <doctest.h>

#include "algdeg/catalog.hpp"
#include "algdeg/modspan.hpp"
#include "support.hpp"

using namespace algdeg;
using testsup::Rng;

namespace {
const FieldSpec Q = FieldSpec::rationals();
}

TEST_SUITE("modspan") {

TEST_CASE("membership predicates") {
    CHECK(in_P(catalog::rho(3, Q)));
    CHECK(in_P(catalog::rho(5, Q)));
    CHECK_FALSE(in_P(catalog::eta(3, Q)));
    CHECK(in_P(catalog::abelian(3, Q)));
    CHECK_FALSE(in_P(catalog::delta(3, Q))); // not skew

    CHECK(in_U(catalog::eta(3, Q)));
    CHECK_FALSE(in_U(catalog::rho(3, Q)));
    CHECK(in_U(catalog::rho(3, FieldSpec::prime_field(2))));
    CHECK(in_U(catalog::lambda_tilde(1, 2, 3, 3, Q)));
}

TEST_CASE("closed-form dimensions and the defining linear systems") {
    CHECK(dim_P(3) == 3);
    CHECK(dim_U(3) == 6);
    CHECK(dim_Sk(3) == 9);
    CHECK(dim_P(4) == 4);
    CHECK(dim_U(4) == 20);
    CHECK(dim_Sk(4) == 24);
    CHECK_THROWS_AS(dim_P(2), DimensionTooSmall);

    for (std::size_t n : {3u, 4u, 5u}) {
        CHECK(dim_P(n) + dim_U(n) == dim_Sk(n));
        for (const auto& fs : {FieldSpec::rationals(), FieldSpec::prime_field(5)}) {
            CHECK(solution_dim_sk(n, fs) == dim_Sk(n));
            CHECK(solution_dim_p(n, fs) == dim_P(n));
            CHECK(solution_dim_u(n, fs) == dim_U(n));
        }
    }
}

TEST_CASE("subspace basis bookkeeping") {
    SubspaceBasis s(3, Q);
    CHECK(s.dim() == 0);
    CHECK(s.contains(catalog::abelian(3, Q)));
    CHECK(s.insert(catalog::eta(3, Q)));
    CHECK_FALSE(s.insert(catalog::eta(3, Q).scaled(scalar(Q, 7))));
    CHECK(s.insert(catalog::rho(3, Q)));
    CHECK(s.dim() == 2);
    CHECK(s.contains(catalog::eta(3, Q) + catalog::rho(3, Q).scaled(scalar(Q, -2))));
    CHECK_FALSE(s.contains(catalog::delta(3, Q)));
    // RREF rows have unit pivots and ascending pivot positions.
    for (const auto& row : s.basis()) {
        std::size_t first = 0;
        for (std::size_t m = 1; m <= row.size(); ++m)
            if (!row.at_flat(m).is_zero()) {
                first = m;
                break;
            }
        REQUIRE(first > 0);
        CHECK(row.at_flat(first).is_one());
    }
}

TEST_CASE("span of the zero vector is trivial") {
    CHECK(fg_span(catalog::abelian(3, Q)).dim() == 0);
}

TEST_CASE("span saturation reproduces the closed subspaces") {
    for (std::size_t n : {3u, 4u}) {
        const SubspaceBasis rho_span = fg_span(catalog::rho(n, Q));
        CHECK(rho_span.dim() == dim_P(n));
        for (const auto& v : rho_span.basis()) CHECK(in_P(v));

        const SubspaceBasis eta_span = fg_span(catalog::eta(n, Q));
        CHECK(eta_span.dim() == dim_U(n));
        for (const auto& v : eta_span.basis()) CHECK(in_U(v));
    }
}

TEST_CASE("span results are stable under random basis changes") {
    Rng rng(51);
    const SubspaceBasis span = fg_span(catalog::eta(3, Q));
    for (const auto& v : span.basis())
        for (int t = 0; t < 10; ++t)
            CHECK(span.contains(act(v, testsup::random_basis_change(rng, 3, Q))));
}

TEST_CASE("the hat and tilde vectors span exactly the eta span") {
    for (std::size_t n : {3u, 4u}) {
        const SubspaceBasis eta_span = fg_span(catalog::eta(n, Q));
        SubspaceBasis spanned(n, Q);
        for (std::size_t r = 1; r <= n; ++r)
            for (std::size_t s = 1; s <= n; ++s)
                for (std::size_t t = 1; t <= n; ++t) {
                    if (r < s && t != r && t != s) {
                        const StructureVector v = catalog::lambda_hat(r, s, t, n, Q);
                        CHECK(eta_span.contains(v));
                        spanned.insert(v);
                    }
                    if (s != t && r != s && r != t) {
                        const StructureVector v = catalog::lambda_tilde(r, s, t, n, Q);
                        CHECK(eta_span.contains(v));
                        spanned.insert(v);
                    }
                }
        CHECK(spanned.dim() == eta_span.dim());
    }
}

TEST_CASE("unimodular skew vectors are exactly the eta span") {
    Rng rng(53);
    const std::size_t n = 3;
    const SubspaceBasis eta_span = fg_span(catalog::eta(n, Q));
    int inside = 0;
    for (int t = 0; t < 100; ++t) {
        StructureVector v = testsup::random_skew_vector(rng, n, Q);
        if (t % 2 == 0) {
            // Cancel the adjoint traces with a skew correction supported on
            // one (i,j,j) position per row; the result lands in the subspace.
            StructureVector u(n, Q);
            for (std::size_t i = 1; i <= n; ++i) {
                const FieldScalar tr = ad_trace(v, i);
                const std::size_t j = i % n + 1;
                u.set(i, j, j, tr);
                u.set(j, i, j, -tr);
            }
            v = v - u;
            REQUIRE(in_U(v));
        }
        const bool member = eta_span.contains(v);
        CHECK(member == in_U(v));
        if (member) ++inside;
    }
    CHECK(inside > 0);
}

TEST_CASE("composition over the rationals splits as a direct sum") {
    const CompositionReport r = composition_branch(3, Q);
    CHECK_FALSE(r.char_divides_n_minus_1);
    CHECK(r.dim_rho_span == 3);
    CHECK(r.dim_eta_span == 6);
    CHECK(r.intersection_dim == 0);
    CHECK(r.direct_sum_verified);
    CHECK(r.verified());
}

TEST_CASE("composition over F_2 collapses to a chain") {
    const CompositionReport r = composition_branch(3, FieldSpec::prime_field(2));
    CHECK(r.char_divides_n_minus_1);
    CHECK(r.rho_in_eta_span);
    CHECK(r.rho_span_inside_eta_span);
    CHECK(r.chain_verified);
    CHECK(r.verified());
}

TEST_CASE("span guard") {
    CHECK_THROWS_AS(fg_span(catalog::eta(7, Q)), DimensionTooLarge);
}

} // TEST_SUITE
