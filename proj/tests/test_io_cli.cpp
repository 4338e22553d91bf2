#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "uoplab/datum_io.hpp"
#include "uoplab/verify.hpp"

using namespace uop;
using nlohmann::json;

TEST_CASE("datum serialization round-trips") {
    RootDatum gl3 = RootDatum::gl3();
    json j = root_datum_to_json(gl3);
    RootDatum back = root_datum_from_json(j);
    CHECK(back.name() == gl3.name());
    CHECK(back.rank() == gl3.rank());
    CHECK(back.positive_roots() == gl3.positive_roots());
    CHECK(back.positive_coroots() == gl3.positive_coroots());
    CHECK(back.simple_indices() == gl3.simple_indices());
    CHECK(back.weyl_order() == 6);
}

TEST_CASE("datum file loading") {
    const std::string path = "sp4_datum_test.json";
    {
        std::ofstream out(path);
        out << root_datum_to_json(RootDatum::sp4()).dump();
    }
    RootDatum loaded = load_root_datum(path);
    CHECK(loaded.weyl_order() == 8);
    CHECK(resolve_group(path).name() == "sp4");
    std::remove(path.c_str());

    CHECK_THROWS_AS(load_root_datum("definitely_missing.json"), parse_error);
}

TEST_CASE("invalid data are rejected with the violated invariant named") {
    json j;
    j["name"] = "bad";
    j["rank"] = 2;
    j["positive_roots"] = {{1, -1}};
    j["simple_roots"] = {{1, -1}};
    j["positive_coroots"] = {{3, 0}};  // pairing 3, not 2
    CHECK_THROWS_WITH_AS(root_datum_from_json(j), doctest::Contains("alpha_vee"), invalid_datum);

    j["positive_coroots"] = {{1, -1}};
    CHECK_NOTHROW(root_datum_from_json(j));

    // simple root missing from the positive list
    j["simple_roots"] = {{0, 1}};
    CHECK_THROWS_AS(root_datum_from_json(j), invalid_datum);

    // malformed shapes
    json broken = {{"name", "x"}, {"rank", 2}};
    CHECK_THROWS_AS(root_datum_from_json(broken), parse_error);
}

TEST_CASE("unknown preset") {
    CHECK_THROWS_AS(RootDatum::preset("so8"), config_error);
}

TEST_CASE("environment override of the Weyl closure bound") {
    setenv("UOPLAB_MAX_WEYL", "4", 1);
    CHECK(RootDatum::default_weyl_bound() == 4);
    CHECK_THROWS_AS(RootDatum::gl3(), not_finite_type);  // order 6 > 4
    CHECK_NOTHROW(RootDatum::gl2());
    unsetenv("UOPLAB_MAX_WEYL");
    CHECK(RootDatum::default_weyl_bound() == 10000);
    CHECK_NOTHROW(RootDatum::gl3());
}

TEST_CASE("certificate JSON schema") {
    RootDatum d = RootDatum::gl2();
    HeckeAlgebra H(d);
    auto cert = integrality_certificate(H, {1, 0});
    json j = certificate_to_json(cert);

    CHECK(j["group"] == "gl2");
    CHECK(j["lambda"] == json::array({1, 0}));
    CHECK(j["degree"] == 2);
    REQUIRE(j["coefficients"].size() == 3);
    CHECK(j["coefficients"][0]["power"] == 0);
    CHECK(j["coefficients"][0]["spherical"][0]["coweight"] == json::array({1, 1}));
    CHECK(j["coefficients"][0]["spherical"][0]["weight"] == "v^2");
    CHECK(j["coefficients"][2]["spherical"][0]["weight"] == "1");
    CHECK(j["checks"]["hecke_identity"] == true);
    CHECK(j["checks"]["projected_identity"] == true);
    CHECK(j["checks"]["satake_roundtrip"] == true);
    REQUIRE(j["q_specializations"].size() == 2);
    CHECK(j["q_specializations"][0]["q"] == 4);
    CHECK(j["q_specializations"][0]["ok"] == true);
}

TEST_CASE("suite runners aggregate pass/fail") {
    auto results = run_coeffs_suite(7, 50);
    CHECK(all_passed(results));
    for (const auto& r : results) CHECK(!r.name.empty());
}

TEST_CASE("default antidominant pick") {
    for (const auto& name : RootDatum::preset_names()) {
        RootDatum d = RootDatum::preset(name);
        Coweight l = default_antidominant(d);
        CHECK(d.is_antidominant(l));
        CHECK_FALSE(d.is_central(l));
    }
}
