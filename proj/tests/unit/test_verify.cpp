#include <doctest.h>

#include <stdexcept>

#include "domcrit/verify.hpp"

using namespace domcrit;
using nlohmann::json;

TEST_CASE("verify_family R") {
    VerifyReport report = verify_family(FamilySpec::parse("R:m=2"));
    CHECK(report.pass);
    REQUIRE(report.claims.size() == 3);
    CHECK(report.claims[0].name == "gamma_t");
    CHECK(report.claims[0].computed == json(3));
}

TEST_CASE("verify_family B chain") {
    VerifyReport report = verify_family(FamilySpec::parse("B:k=3,t=2"));
    CHECK(report.pass);
    bool saw_diameter = false;
    for (const Claim& c : report.claims)
        if (c.name == "diameter") {
            saw_diameter = true;
            CHECK(c.computed == json(4));
        }
    CHECK(saw_diameter);
}

TEST_CASE("verify_family H example and Q") {
    CHECK(verify_family(FamilySpec::parse("Hex:t=4")).pass);
    CHECK(verify_family(FamilySpec::parse("Hex:t=6")).pass);
    CHECK(verify_family(FamilySpec::parse("Q:h=Hex4")).pass);
    CHECK(verify_family(FamilySpec::parse("A:h=Hex4")).pass);
    CHECK(verify_family(FamilySpec::parse("corona:h=C4")).pass);
}

TEST_CASE("verify_family rejects unrecognized chains") {
    CHECK_THROWS_AS(verify_family(FamilySpec::parse("chain:Q:h=Hex4,R:m=2")),
                    std::invalid_argument);
}

TEST_CASE("verify_bound totals") {
    VerifyReport j2 = verify_bound(Variant::total, build_J(2).graph);
    CHECK(j2.pass);
    bool saw_tight = false;
    for (const Claim& c : j2.claims)
        if (c.name == "diameter_le_floor_5k_minus_7_over_3") {
            saw_tight = true;
            CHECK(c.claimed == json(4));  // floor(13/3)
            CHECK(c.computed == json(4));
        }
    CHECK(saw_tight);
}

TEST_CASE("verify_bound independent sharpness") {
    VerifyReport report = verify_bound(Variant::independent, build_B_chain(3, 2));
    CHECK(report.pass);
    bool saw = false;
    for (const Claim& c : report.claims)
        if (c.name == "diameter_le_2_k_minus_1") {
            saw = true;
            CHECK(c.claimed == c.computed);  // sharp: diam 4 = 2(3-1)
        }
    CHECK(saw);
}

TEST_CASE("verify_bound connected and inapplicable cases") {
    CHECK(verify_bound(Variant::connected, named_graph("C7")).pass);
    // K4 is not plain-critical: pass with a note
    VerifyReport k4 = verify_bound(Variant::plain, named_graph("K4"));
    CHECK(k4.pass);
    REQUIRE(k4.claims.size() == 1);
    CHECK(k4.claims[0].relation == "note");
    CHECK_THROWS_AS(verify_bound(Variant::total, from_edge_list(4, {{0, 1}, {2, 3}})),
                    std::invalid_argument);
}

TEST_CASE("sweep finds no bound violations and is reproducible") {
    SweepConfig config;
    config.n_min = 2;
    config.n_max = 8;
    config.samples = 150;
    config.seed = 20240811;
    VerifyReport a = sweep(config);
    CHECK(a.pass);
    CHECK(a.seed == 20240811);

    VerifyReport b = sweep(config);
    json ja = a.to_json();
    json jb = b.to_json();
    ja.erase("elapsed_ms");
    jb.erase("elapsed_ms");
    CHECK(ja == jb);
}

TEST_CASE("a sweep with no critical samples passes with a note") {
    SweepConfig config;
    config.n_min = 4;
    config.n_max = 4;
    config.samples = 1;
    config.edge_probability = 0.99;  // the sample is K4, critical for no variant
    config.seed = 7;
    VerifyReport report = sweep(config);
    CHECK(report.pass);
    bool noted = false;
    for (const Claim& c : report.claims)
        if (c.name == "sample" && c.relation == "note") noted = true;
    CHECK(noted);
}

TEST_CASE("sweep validates its configuration") {
    SweepConfig bad;
    bad.samples = 0;
    CHECK_THROWS_AS(sweep(bad), std::invalid_argument);
    SweepConfig bad_range;
    bad_range.n_min = 9;
    bad_range.n_max = 4;
    CHECK_THROWS_AS(sweep(bad_range), std::invalid_argument);
}

TEST_CASE("report JSON schema") {
    VerifyReport report = verify_family(FamilySpec::parse("J:t=2"));
    json j = report.to_json();
    for (const char* key : {"target", "params", "claims", "verdict", "seed", "elapsed_ms"})
        CHECK(j.contains(key));
    REQUIRE(j["claims"].is_array());
    REQUIRE(!j["claims"].empty());
    for (const char* key : {"name", "claimed", "computed", "relation", "provenance"})
        CHECK(j["claims"][0].contains(key));
    CHECK(j["verdict"] == "pass");
}

TEST_CASE("verify_theorem routing") {
    CHECK(verify_theorem("thm10", {{"m", "2"}}).pass);
    CHECK(verify_theorem("remark_c6c6", {}).pass);
    CHECK(verify_theorem("remark_h", {{"t", "5"}}).pass);
    CHECK(verify_theorem("lemma4", {{"g", "C6"}}).pass);
    CHECK(verify_theorem("lemma5", {{"g", "B:k=2,t=2"}}).pass);
    CHECK(verify_theorem("idiam", {{"g", "B:k=2,t=2"}}).pass);
    CHECK(verify_theorem("thm12", {{"n", "0"}}).pass);
    CHECK_THROWS_AS(verify_theorem("thm99", {}), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem("lemma4", {}), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem("thm12", {{"n", "zero"}}), std::invalid_argument);
}

TEST_CASE("random connected graph generator") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
        Graph g = random_connected_graph(2 + (i % 8), 0.4, rng);
        CHECK(is_connected(g));
    }
    CHECK_THROWS_AS(random_connected_graph(0, 0.5, rng), std::invalid_argument);
    CHECK_THROWS_AS(random_connected_graph(5, 1.5, rng), std::invalid_argument);
}
