#include <doctest.h>

#include "algdeg/catalog.hpp"
#include "algdeg/json_io.hpp"
#include "support.hpp"

using namespace algdeg;
using testsup::Rng;

namespace {
const FieldSpec Q = FieldSpec::rationals();
}

TEST_SUITE("json") {

TEST_CASE("field specs") {
    CHECK(json_of(FieldSpec::rationals()) == Json{{"type", "Q"}});
    CHECK(json_of(FieldSpec::prime_field(5)) == Json{{"type", "Fp"}, {"p", 5}});
    CHECK(field_from_json(Json{{"type", "Q"}}) == FieldSpec::rationals());
    CHECK(field_from_json(Json{{"type", "Fp"}, {"p", 7}}) == FieldSpec::prime_field(7));
    CHECK_THROWS_AS(field_from_json(Json{{"type", "R"}}), ParseError);
    CHECK_THROWS_AS(field_from_json(Json{{"p", 7}}), ParseError);
}

TEST_CASE("structure vectors round trip bit-exactly") {
    Rng rng(63);
    for (const auto& fs : {FieldSpec::rationals(), FieldSpec::prime_field(7)}) {
        for (int t = 0; t < 20; ++t) {
            const StructureVector v = testsup::random_vector(rng, 3, fs);
            const Json j = json_of(v);
            CHECK(structure_vector_from_json(j) == v);
            CHECK(json_of(structure_vector_from_json(j)) == j);
        }
    }
    // Zeros are omitted from the sparse form.
    CHECK(json_of(catalog::abelian(3, Q))["entries"].empty());
    CHECK(json_of(catalog::eta(3, Q))["entries"].size() == 2);
}

TEST_CASE("structure vector parse errors name the offending field") {
    Json j = json_of(catalog::eta(3, Q));
    j.erase("n");
    CHECK_THROWS_WITH_AS(structure_vector_from_json(j),
                         doctest::Contains("missing field \"n\""), ParseError);

    Json bad_entry = json_of(catalog::eta(3, Q));
    bad_entry["entries"][0]["i"] = 9;
    CHECK_THROWS_AS(structure_vector_from_json(bad_entry), ParseError);

    Json bad_value = json_of(catalog::eta(3, Q));
    bad_value["entries"][0]["value"] = "x";
    CHECK_THROWS_AS(structure_vector_from_json(bad_value), ParseError);
}

TEST_CASE("basis changes round trip") {
    Rng rng(65);
    for (int t = 0; t < 10; ++t) {
        const BasisChange g = testsup::random_basis_change(rng, 3, Q);
        const BasisChange back = basis_change_from_json(json_of(g));
        CHECK(back.matrix() == g.matrix());
        CHECK(back.inv_matrix() == g.inv_matrix());
    }
    Json j = json_of(BasisChange::identity(2, Q));
    j["rows"][0][0] = "0";
    j["rows"][1][1] = "0";
    CHECK_THROWS_AS(basis_change_from_json(j), NotInvertible);
}

TEST_CASE("weights round trip") {
    const WeightVector q{{1, -2, 0}};
    CHECK(weight_vector_from_json(json_of(q)) == q);
    CHECK_THROWS_AS(weight_vector_from_json(Json::array()), ParseError);
    CHECK_THROWS_AS(weight_vector_from_json(Json{{"x", 1}}), ParseError);
}

TEST_CASE("verdicts and labels serialize with full payloads") {
    const DegenerationVerdict w = witness_to_heisenberg(catalog::eta(3, Q));
    const Json j = json_of(w);
    CHECK(j["kind"] == "witness_grading");
    CHECK(j.contains("q"));
    CHECK(j.contains("basis"));
    // A third party can re-verify from the payload alone.
    const StructureVector from = structure_vector_from_json(j["from"]);
    const BasisChange basis = basis_change_from_json(j["basis"]);
    const WeightVector q = weight_vector_from_json(j["q"]);
    CHECK(truncate(act(from, basis), q) == structure_vector_from_json(j["to"]));

    const Json l = json_of(classify(catalog::epsilon(3, Q, scalar(Q, 1, 2))));
    CHECK(l["label"] == "E_n(alpha)");
    CHECK(l["alpha"] == "1/2");

    const Json blocked = json_of(necessary_conditions(catalog::eta(3, Q), catalog::rho(3, Q)));
    CHECK(blocked["kind"] == "blocked");
    CHECK(blocked.contains("condition"));
}

} // TEST_SUITE
