#include <catch2/catch_amalgamated.hpp>

#include "support/helpers.hpp"

using namespace facets;
using testing::complex;
using testing::ideal;

TEST_CASE("report envelope shape") {
    Report r = cmd_covers(complex("<xyz, zu>"));
    json env = r.envelope();

    REQUIRE(env["schema"] == "facets/1");
    REQUIRE(env["command"] == "covers");
    REQUIRE(env["input"] == "<xyz, zu> over x,y,z,u");
    REQUIRE(env["field"].is_null());
    REQUIRE(env["elapsed_ms"].is_number());
    REQUIRE(env["elapsed_ms"].get<double>() >= 0.0);
    REQUIRE_FALSE(env.contains("oracle"));  // oracle checks were not requested

    Report with_oracle = cmd_covers(complex("<xyz, zu>"), true);
    json env2 = with_oracle.envelope();
    REQUIRE(env2.contains("oracle"));
    REQUIRE(env2["oracle"]["bruteforce_agrees"] == true);

    Report fielded = cmd_cm(ideal("(xy, zu)"), FieldSpec::prime_field(2));
    REQUIRE(fielded.envelope()["field"] == "fp:2");
    REQUIRE(cmd_cm(ideal("(xy, zu)"), FieldSpec::rationals()).envelope()["field"] == "q");
}

TEST_CASE("dual report payload") {
    Report r = cmd_dual(ideal("(xyz, zu)"), true);
    const json& res = r.result;

    REQUIRE(res["ideal"] == "(xyz, zu) over x,y,z,u");
    REQUIRE(res["facet_complex"] == "<xyz, zu> over x,y,z,u");
    REQUIRE(res["cover_complex"] == "<xu, yu, z> over x,y,z,u");
    REQUIRE(res["covering_number"] == 1);
    REQUIRE(res["dual_ideal"] == "(xu, yu, z) over x,y,z,u");
    REQUIRE(res["nonface_complex"] == "<xyu, xz, yz> over x,y,z,u");
    REQUIRE(res["alexander_dual"] == "<xy, u> over x,y,z,u");

    REQUIRE(r.oracle["nonface_bruteforce_agrees"] == true);
    REQUIRE(r.oracle["alexander_bruteforce_agrees"] == true);
    REQUIRE(r.oracle["dual_involution"] == true);
    REQUIRE(r.oracle["cover_involution"] == true);

    REQUIRE(r.text.find("dual ideal:      (xu, yu, z)") != std::string::npos);
}

TEST_CASE("covers report payload") {
    Report r = cmd_covers(complex("<xyz, yzu, uv>"), true);
    const json& res = r.result;

    REQUIRE(res["unmixed"] == true);
    REQUIRE(res["covering_number"] == 2);
    REQUIRE(res["covers"].size() == 5);
    REQUIRE(r.oracle["bruteforce_agrees"] == true);

    // degenerate inputs keep the payload total
    Report void_r = cmd_covers(complex("(0) over x, y"));
    REQUIRE(void_r.result["covers"].size() == 1);  // the empty cover
    REQUIRE(void_r.result["covering_number"] == 0);

    Report irr = cmd_covers(complex("<1> over x, y"));
    REQUIRE(irr.result["covers"].empty());
    REQUIRE(irr.result["covering_number"].is_null());
}

TEST_CASE("tree report") {
    Report r = cmd_tree(complex("<xyz, yzu, zuv>"), 15, true);
    const json& res = r.result;

    REQUIRE(res["forest"] == true);
    REQUIRE(res["tree"] == true);
    REQUIRE(res["connected"] == true);
    REQUIRE(res["leafless_witness"].is_null());
    REQUIRE(res["leaves"].size() == 3);
    REQUIRE(res["leaves"][0]["facet"] == "xyz");
    REQUIRE(res["leaves"][0]["leaf"] == true);
    REQUIRE(res["leaves"][0]["joint"] == "yzu");
    REQUIRE(res["leaves"][1]["leaf"] == false);
    REQUIRE(r.oracle["witness_replay"] == true);

    Report triangle = cmd_tree(complex("<xy, yz, xz>"), 15, true);
    REQUIRE(triangle.result["forest"] == false);
    REQUIRE(triangle.result["leaf_order"].is_null());
    REQUIRE(triangle.result["leafless_witness"].size() == 3);
    REQUIRE(triangle.oracle["witness_replay"] == true);

    // the guard cites the limit rather than running an exponential check
    REQUIRE_THROWS_AS(cmd_tree(complex("<xy, yz, xz>"), 2), PreconditionError);
}

TEST_CASE("cm and scm reports") {
    FieldSpec q = FieldSpec::rationals();

    Report cm = cmd_cm(ideal("(xy, zu)"), q, true);
    REQUIRE(cm.result["cohen_macaulay"] == true);
    REQUIRE(cm.result["krull_dimension"] == 2);
    REQUIRE(cm.result["unmixed"] == true);
    REQUIRE(cm.oracle["eagon_reiner_agrees"] == true);

    Report not_cm = cmd_cm(ideal("(xz, xu, yz, yu)"), q, true);
    REQUIRE(not_cm.result["cohen_macaulay"] == false);
    REQUIRE(not_cm.result["unmixed"] == true);
    REQUIRE(not_cm.oracle["eagon_reiner_agrees"] == true);

    Report scm = cmd_scm(ideal("(xyz, xyu, zu)"), q, true);
    REQUIRE(scm.result["sequentially_cohen_macaulay"] == true);
    REQUIRE(scm.result["skeleta"].size() >= 1);
    for (const json& s : scm.result["skeleta"])
        REQUIRE(s["cohen_macaulay"] == true);
    REQUIRE(scm.oracle["dual_componentwise_linear_agrees"] == true);

    Report not_scm = cmd_scm(ideal("(xz, xu, yz, yu)"), q, true);
    REQUIRE(not_scm.result["sequentially_cohen_macaulay"] == false);
    REQUIRE(not_scm.oracle["dual_componentwise_linear_agrees"] == true);
}

TEST_CASE("linquo report") {
    FieldSpec q = FieldSpec::rationals();

    Report r = cmd_linquo(ideal("(xu, yu, z) over x,y,z,u"), q, std::nullopt, true);
    REQUIRE_FALSE(r.result["quotient_order"].is_null());
    REQUIRE(r.result["quotient_order"]["order"].size() == 3);
    REQUIRE(r.result["quotient_order"]["colon_vars"].size() == 3);
    REQUIRE(r.result["componentwise_linear"] == true);
    REQUIRE(r.result["all_certified"] == true);
    REQUIRE(r.oracle["order_replay"] == true);
    for (const json& c : r.oracle["components"]) {
        REQUIRE(c["certificate_replay"] == true);
        REQUIRE(c["betti_linear"] == true);
    }

    // component filter: no whole-ideal order, no shelling, one component
    Report only2 = cmd_linquo(ideal("(xu, yu, z) over x,y,z,u"), q, 2);
    REQUIRE_FALSE(only2.result.contains("quotient_order"));
    REQUIRE_FALSE(only2.result.contains("shelling"));
    REQUIRE(only2.result["components"].size() == 1);
    REQUIRE(only2.result["components"][0]["degree"] == 2);

    // a filtered degree with zero component leaves the verdicts null
    Report empty = cmd_linquo(ideal("(xu, yu, z) over x,y,z,u"), q, 1);
    REQUIRE(empty.result["components"].size() == 1);
    Report none = cmd_linquo(ideal("(xy, zu)"), q, 1);
    REQUIRE(none.result["components"].empty());
    REQUIRE(none.result["componentwise_linear"].is_null());
    REQUIRE(none.result["all_certified"].is_null());

    // unmixed tree: the shelling rides along and replays
    Report tree = cmd_linquo(ideal("(xyz, yzu, uv) over x,y,z,u,v"), q, std::nullopt, true);
    REQUIRE(tree.result["shelling"].size() == 5);
    REQUIRE(tree.oracle["shelling_replay"] == true);

    // equigenerated dual without an order: shelling reported as none
    Report cycle = cmd_linquo(ideal("(xz, xu, yz, yu)"), q);
    REQUIRE(cycle.result["shelling"].is_null());
    REQUIRE(cycle.result["quotient_order"]["order"].size() == 4);

    // mixed ideal: the dual is not equigenerated, no shelling key at all
    Report mixed = cmd_linquo(ideal("(xyz, zu)"), q);
    REQUIRE_FALSE(mixed.result.contains("shelling"));
}

TEST_CASE("betti report") {
    FieldSpec q = FieldSpec::rationals();
    Report r = cmd_betti(ideal("(xy, zu)"), q, true);

    REQUIRE(r.result["table"]["0,0"] == 1);
    REQUIRE(r.result["table"]["1,2"] == 2);
    REQUIRE(r.result["table"]["2,4"] == 1);
    REQUIRE(r.result["projective_dimension"] == 2);
    REQUIRE(r.result["regularity"] == 2);
    REQUIRE(r.result["linear_resolution"] == false);
    REQUIRE(r.oracle["taylor_agrees"] == true);

    Report zero = cmd_betti(ideal("(0) over x"), q);
    REQUIRE(zero.result["linear_resolution"].is_null());
    REQUIRE(zero.result["table"]["0,0"] == 1);
}
