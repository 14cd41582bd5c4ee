#include <doctest.h>

#include "homint/json_io.hpp"

using namespace homint;

TEST_CASE("polynomial JSON round trip") {
    HomogeneousPoly f = HomogeneousPoly::from_terms(
        2, 2,
        {{Exponents{2, 0}, Int(1)},
         {Exponents{1, 1}, Int("-123456789012345678901234567890")},
         {Exponents{0, 2}, Int(1)}});
    Json j = poly_to_json(f);
    CHECK(j["terms"][1]["coeff"] == "-123456789012345678901234567890");
    CHECK(poly_from_json(j) == f);

    HomogeneousPoly g = f.reduced(Int(97));
    Json jm = poly_to_json(g);
    CHECK(jm["modulus"] == "97");
    CHECK(poly_from_json(jm) == g);
}

TEST_CASE("polynomial JSON rejects malformed input") {
    Json base = {
        {"n", 2},
        {"degree", 2},
        {"terms", Json::array({{{"exps", {1, 1}}, {"coeff", "3"}}})}};
    CHECK(poly_from_json(base).coeff({1, 1}) == 3);

    Json bad_deg = base;
    bad_deg["terms"][0]["exps"] = {1, 2};  // degree 3 term in a degree-2 poly
    CHECK_THROWS(poly_from_json(bad_deg));

    Json bad_arity = base;
    bad_arity["terms"][0]["exps"] = {1, 1, 0};
    CHECK_THROWS(poly_from_json(bad_arity));

    Json bad_coeff = base;
    bad_coeff["terms"][0]["coeff"] = "3.5";
    CHECK_THROWS(poly_from_json(bad_coeff));

    CHECK_THROWS(poly_from_json(Json{{"n", 2}}));
}

TEST_CASE("instance JSON") {
    Json j = {{"points", {{1, 4}, {3, 5}, {4, 5}}}};
    InterpolationInstance inst = instance_from_json(j);
    CHECK(inst.size() == 3);
    CHECK(inst.targets == std::vector<Int>{Int(1), Int(1), Int(1)});

    Json jt = j;
    jt["targets"] = {"1", "5", "1"};
    CHECK(instance_from_json(jt).targets[1] == 5);

    Json bad = {{"points", {{2, 4}}}};
    CHECK_THROWS(instance_from_json(bad));  // entries not coprime
    Json mixed = {{"points", {{1, 2}, {1, 2, 3}}}};
    CHECK_THROWS(instance_from_json(mixed));
    Json misaligned = jt;
    misaligned["targets"] = {"1"};
    CHECK_THROWS(instance_from_json(misaligned));

    // Round trip through the writer.
    CHECK(instance_from_json(instance_to_json(inst)).targets == inst.targets);
}

TEST_CASE("certificate JSON round trip") {
    InterpolationInstance inst = instance_from_json(
        Json{{"points", {{1, 4}, {3, 5}, {4, 5}}}, {"targets", {"1", "5", "1"}}});
    auto cert = periodic_obstruction(inst, {Int(5)}, 64);
    REQUIRE(cert.has_value());
    Json j = certificate_to_json(*cert);
    CHECK(j["kind"] == "modular_periodic");
    Certificate back = certificate_from_json(j);
    CHECK(replay_certificate(inst, back));

    FeasibilityResult r = feasible_degree(inst, 3);
    REQUIRE(r.certificate.has_value());
    Json js = certificate_to_json(*r.certificate);
    CHECK(js["kind"] == "snf_nonmembership");
    CHECK(replay_certificate(inst, certificate_from_json(js)));
}
