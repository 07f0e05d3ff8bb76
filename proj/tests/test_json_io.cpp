#include <doctest.h>
#include <json.hpp>

#include "planekit/json_io.hpp"
#include "planekit/parse.hpp"
#include "testutil.hpp"

using namespace planekit;
using nlohmann::json;
namespace tu = planekit::testutil;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

} // namespace

TEST_SUITE("jsonio") {

TEST_CASE("values serialize as grammar strings") {
    CHECK(json::parse(json_of_scalar(Scalar::fraction(-7, 2, kQ))) == json("-7/2"));
    CHECK(json::parse(json_of_unipoly(parse_unipoly("t^3 - 2*t", kQ))) == json("t^3 - 2*t"));
    CHECK(json::parse(json_of_mat2(parse_mat2("[[1,1],[1,0]]", kQ))) == json("[[1,1],[1,0]]"));
    CHECK(json::parse(json_of_aut(PolyAut::from_text("(x ; y + x^2)", kQ)))
          == json("(x ; x^2 + y)"));

    // every emitted payload string re-parses to the original object
    for (int i = 0; i < 15; ++i) {
        UniPoly p = tu::random_poly(kQ, 0, 5);
        std::string s = json::parse(json_of_unipoly(p)).get<std::string>();
        CHECK(parse_unipoly(s, kQ) == p);

        Mat2 m = tu::random_invertible(kQ);
        CHECK(parse_mat2(json::parse(json_of_mat2(m)).get<std::string>(), kQ) == m);

        PolyAut phi = tu::random_aut(kQ, 2, 3);
        CHECK(PolyAut::from_text(json::parse(json_of_aut(phi)).get<std::string>(), kQ) == phi);
    }
}

TEST_CASE("factor words keep their structure") {
    PolyAut phi = PolyAut::from_text("(x + y^2 ; y + (x + y^2)^2)", kQ);
    json vdk = json::parse(json_of_vdk(vdk_factorize(phi)));
    REQUIRE(vdk.contains("factors"));
    REQUIRE(vdk.contains("tail"));
    for (const auto& fac : vdk["factors"]) {
        CHECK((fac["kind"] == "affine" || fac["kind"] == "elementary"));
        CHECK_NOTHROW(PolyAut::from_text(fac["map"].get<std::string>(), kQ));
    }
    CHECK_NOTHROW(PolyAut::from_text(vdk["tail"].get<std::string>(), kQ));

    TauWord tw = tu::random_tau_word(kQ, 3);
    json jtw = json::parse(json_of_tau_word(tw))["factors"];
    REQUIRE(jtw.is_array());
    REQUIRE(jtw.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(parse_projpoint(jtw[i]["delta"].get<std::string>(), kQ) == tw.factors[i].delta);
        CHECK(parse_unipoly(jtw[i]["f"].get<std::string>(), kQ) == tw.factors[i].f);
    }

    EWord ew = tu::random_e_word(kQ, 2);
    json jew = json::parse(json_of_e_word(ew))["factors"];
    REQUIRE(jew.size() == 2);
    CHECK(parse_unipoly(jew[0]["f"].get<std::string>(), kQ) == ew.factors[0].f);
}

TEST_CASE("reports serialize with their verdicts") {
    json cls = json::parse(json_of_classification(classify(parse_mat2("[[0,-1],[1,0]]", kQ))));
    CHECK(cls["k_reducible"] == false);
    CHECK(cls["quasi_unipotent"] == true);
    CHECK(cls["quasi_order"] == 4);

    json none = json::parse(json_of_classification(classify(parse_mat2("[[1,1],[1,0]]", kQ))));
    CHECK(none["quasi_order"].is_null());

    TauWord w{{TauFactor(ProjPoint::from_ints(0, 1, kQ), parse_unipoly("t^2", kQ))}};
    json deg = json::parse(json_of_degree_report(degree_law_check(w, kQ)));
    CHECK(deg["aut_degree"] == 2);
    CHECK(deg["mat_degree"] == 1);
    CHECK(deg["factor_degrees"] == json::array({2}));

    json rel = json::parse(json_of_check_report(verify_gamma_relations()));
    CHECK(rel["all_pass"] == true);

    json verdict = json::parse(json_of_verdict(check_hypothesis_U(
        SubgroupSpec({Mat2::scalar(Scalar::from_int(2, kQ))}, kQ), 2)));
    CHECK(verdict["counterexample_found"] == true);
    CHECK(verdict["word"] == "g0");

    SubgroupSpec s({parse_mat2("[[1,1],[0,1]]", kQ)}, kQ);
    json cong = json::parse(json_of_congruence(congruence_subgroup_gens(s, 5)));
    CHECK(cong["modulus"] == 5);
    CHECK(cong["index"] == 5);
    CHECK(cong["generators"] == json::array({"[[1,5],[0,1]]"}));
    CHECK(cong["transversal"].size() == 5);
}

TEST_CASE("the envelope stamps schema verb and field") {
    json env = json::parse(json_envelope("psi", kQ, json_of_matpoly(MatPoly2::identity(kQ))));
    CHECK(env["schema"] == "planekit/1");
    CHECK(env["verb"] == "psi");
    CHECK(env["field"] == "q");
    CHECK(env["result"] == json("[[1,0],[0,1]]"));

    json envp = json::parse(json_envelope("classify", FieldSpec::prime_field(7), "{\"x\":1}"));
    CHECK(envp["field"] == "fp:7");
    CHECK(envp["result"]["x"] == 1);
}

} // TEST_SUITE
