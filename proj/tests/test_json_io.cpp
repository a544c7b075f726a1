#include <doctest.h>

#include "addact/error.hpp"
#include "addact/json_io.hpp"

using namespace addact;
using nlohmann::json;

TEST_CASE("structure-constant algebras round-trip through JSON") {
    LocalAlgebra a = chain_algebra(4);
    json j = algebra_to_json(a);
    CHECK(j["kind"] == "structure_constants");
    CHECK(j["dim"] == 4);
    LocalAlgebra back = algebra_from_json(j);
    CHECK(back == a);
    CHECK(back.basis_names() == a.basis_names());
}

TEST_CASE("family algebra objects build by name") {
    json j = {{"kind", "family"}, {"name", "chain"}, {"params", {{"n", 3}}}};
    CHECK(algebra_from_json(j) == chain_algebra(3));
}

TEST_CASE("pairs round-trip with their mode") {
    for (const char* id : {"cubic_pair", "counterexample_pair", "quadric_pair(2)",
                           "pn_square_zero(2)", "socle_extension(cubic_pair,1)"}) {
        HPair p = *build(ModelId::parse(id)).pair;
        HPair back = pair_from_json(pair_to_json(p));
        CHECK(back.algebra() == p.algebra());
        CHECK(back.u() == p.u());
        CHECK(back.mode() == p.mode());
    }
}

TEST_CASE("bare family objects are accepted as pair input") {
    json j = {{"kind", "family"}, {"name", "quadric_pair"}, {"params", {{"n", 2}}}};
    HPair p = pair_from_json(j);
    CHECK(p.dim() == 4);
    json nested = {{"kind", "family"}, {"name", "socle_extension(quadric_pair(2),1)"}};
    CHECK(pair_from_json(nested).dim() == 5);
}

TEST_CASE("scalar strings in subspace bases parse exactly") {
    json j = {{"basis", {{"0", "1", "0+1*i", "0"}}}};
    Subspace s = subspace_from_json(j, 4);
    CHECK(s.dim() == 1);
    CHECK(s.basis()[0][2] == Scalar::i());
}

TEST_CASE("malformed input is reported as BadInput") {
    CHECK_THROWS_WITH_AS(algebra_from_json(json{{"kind", "mystery"}}),
                         doctest::Contains("BadInput"), Error);
    CHECK_THROWS_WITH_AS(algebra_from_json(json{{"kind", "structure_constants"}}),
                         doctest::Contains("BadInput"), Error);
    CHECK_THROWS_WITH_AS(pair_from_json(json::array()), doctest::Contains("BadInput"), Error);
    CHECK_THROWS_WITH_AS(subspace_from_json(json{{"basis", {{"1", "0"}}}}, 3),
                         doctest::Contains("BadInput"), Error);
}

TEST_CASE("validation still runs on JSON input") {
    json j = pair_to_json(*build(ModelId::parse("cubic_pair")).pair);
    j["subspace"]["basis"] = {{"0", "0", "1", "0"}, {"0", "0", "0", "1"}};
    CHECK_THROWS_WITH_AS(pair_from_json(j), doctest::Contains("DoesNotGenerate"), Error);
}

TEST_CASE("verdicts and certificates round-trip for every catalog entry") {
    for (const CatalogEntry& e : catalog()) {
        CAPTURE(e.id.str());
        HPair p = *build(e.id).pair;
        Verdict v = decide(p);
        Verdict back = verdict_from_json(verdict_to_json(v));
        CHECK(back.outcome == v.outcome);
        CHECK(back.certificate.kind == v.certificate.kind);
        CHECK(back.certificate.witness == v.certificate.witness);
        CHECK(back.certificate.invariants == v.certificate.invariants);
        CHECK(back.certificate.excluded_strata == v.certificate.excluded_strata);
        CHECK(back.diagnostics == v.diagnostics);
        if (v.certificate.core) {
            REQUIRE(back.certificate.core);
            CHECK(back.certificate.core->model == v.certificate.core->model);
        }
        // A replayable certificate stays replayable after serialization.
        CHECK(replay(p, back));
        CHECK(verdict_to_json(back) == verdict_to_json(v));
    }
}
