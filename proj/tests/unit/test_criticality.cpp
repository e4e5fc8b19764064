#include <doctest.h>

#include <stdexcept>

#include "domcrit/constructions.hpp"
#include "domcrit/criticality.hpp"

using namespace domcrit;

TEST_CASE("plain criticality of C7") {
    CriticalityReport report = check_critical(named_graph("C7"), Variant::plain);
    CHECK(report.verdict);
    CHECK(report.base_value == 3);
    CHECK(report.tested_vertices.count() == 7);
    for (int v = 0; v < 7; ++v) CHECK(report.per_vertex[v] == 2);
}

TEST_CASE("C6 is 4-critical for total domination") {
    CriticalityReport report = check_critical(named_graph("C6"), Variant::total);
    CHECK(report.verdict);
    CHECK(report.base_value == 4);
}

TEST_CASE("cycles are connected-domination critical") {
    for (int n = 4; n <= 12; ++n) {
        CriticalityReport report =
            check_critical(named_graph("C" + std::to_string(n)), Variant::connected);
        CHECK(report.verdict);
        CHECK(report.base_value == n - 2);
        // diam(Cn) = floor(n/2) <= k = n-2 for n >= 4
        CHECK(*diameter(named_graph("C" + std::to_string(n))) <= report.base_value);
    }
}

TEST_CASE("non-critical verdicts carry witnesses") {
    CriticalityReport report = check_critical(named_graph("K4"), Variant::plain);
    CHECK_FALSE(report.verdict);
    CHECK(report.base_value == 1);
    CHECK(report.failing_witnesses.count() == 4);
}

TEST_CASE("degenerate and invalid inputs") {
    Graph k2 = named_graph("K2");
    CHECK_FALSE(check_critical(k2, Variant::plain).verdict);
    CHECK_FALSE(check_critical(k2, Variant::independent).verdict);
    // both K2 vertices are adjacent to a leaf, so nothing is testable
    CHECK_THROWS_AS(check_critical(k2, Variant::total), std::invalid_argument);
    // connected-variant inputs must be 2-connected
    CHECK_THROWS_AS(check_critical(k2, Variant::connected), std::invalid_argument);
    CHECK_THROWS_AS(check_critical(named_graph("P5"), Variant::connected), std::invalid_argument);
    CHECK_THROWS_AS(check_critical(from_edge_list(4, {{0, 1}, {2, 3}}), Variant::plain),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_critical(named_graph("K1"), Variant::plain), std::invalid_argument);
}

TEST_CASE("total-variant tested set excludes support vertices") {
    Graph cor = corona(named_graph("C3"));  // vertices 0..2 triangle, 3..5 leaves
    CriticalityReport report = check_critical(cor, Variant::total);
    VertexSet leaves;
    leaves.set(3).set(4).set(5);
    CHECK(report.tested_vertices == leaves);
    CHECK(report.verdict);
    CHECK(report.base_value == 3);
}

TEST_CASE("non-decreasing deletions are failing witnesses") {
    // star K_{1,3}: only the leaves are tested (the center is adjacent to
    // them); deleting a leaf keeps gamma_t at 2
    Graph star = from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}});
    CriticalityReport report = check_critical(star, Variant::total);
    CHECK_FALSE(report.verdict);
    CHECK(report.tested_vertices == (VertexSet::single(1) | VertexSet::single(2) |
                                     VertexSet::single(3)));
}

TEST_CASE("containing lemma") {
    ContainingLemmaReport c6 = check_containing_lemma(named_graph("C6"));
    CHECK(c6.holds);
    CHECK(c6.base_value == 4);
    for (int w = 0; w < 6; ++w) {
        REQUIRE(c6.witnesses[w].has_value());
        CHECK(c6.witnesses[w]->test(w));
        CHECK(c6.witnesses[w]->count() == 4);
    }
    ContainingLemmaReport r2 = check_containing_lemma(build_R(2).graph);
    CHECK(r2.holds);
    ContainingLemmaReport j2 = check_containing_lemma(build_J(2).graph);
    CHECK(j2.holds);

    CHECK_THROWS_AS(check_containing_lemma(named_graph("K4")), std::invalid_argument);
    CHECK_THROWS_AS(check_containing_lemma(corona(named_graph("C3"))), std::invalid_argument);
}

TEST_CASE("independent drop lemma") {
    CHECK(check_independent_lemma(build_B_chain(2, 2)).holds);
    CHECK(check_independent_lemma(build_B_chain(3, 2)).holds);
    // K2 is not independent-domination critical
    CHECK_THROWS_AS(check_independent_lemma(named_graph("K2")), std::invalid_argument);
}

TEST_CASE("coalescence characterization on C6 * C6") {
    Graph c6 = named_graph("C6");
    CoalescenceConditionReport report = check_coalescence_condition(c6, 0, c6, 0);
    CHECK(report.k1 == 4);
    CHECK(report.k2 == 4);
    CHECK(report.g2_neighborhood_deleted == 2);  // gamma_t(P3)
    CHECK_FALSE(report.rhs);
    CHECK_FALSE(report.lhs);
    CHECK(report.iff_holds);
}

TEST_CASE("coalescence characterization positive case") {
    Graph r2 = build_R(2).graph;
    int right = *r2.find_label("Right");
    int left = *r2.find_label("Left");
    CoalescenceConditionReport report = check_coalescence_condition(r2, right, r2, left);
    CHECK(report.lhs);
    CHECK(report.rhs);
    CHECK(report.iff_holds);
    CHECK(report.coalescence_value == 5);
}

TEST_CASE("coalescence biconditional holds across attachment vertices") {
    Graph c6 = named_graph("C6");
    Graph r2 = build_R(2).graph;
    Graph j2 = build_J(2).graph;
    struct Pair {
        const Graph* g1;
        int x;
        const Graph* g2;
        int y;
    };
    const Pair pairs[] = {
        {&c6, 0, &j2, 0},  {&c6, 0, &j2, 4},  {&c6, 0, &j2, 12}, {&j2, 0, &j2, 8},
        {&r2, 0, &r2, 4},  {&r2, 9, &j2, 12}, {&c6, 0, &r2, 11},
    };
    for (const Pair& pair : pairs) {
        CoalescenceConditionReport rep =
            check_coalescence_condition(*pair.g1, pair.x, *pair.g2, pair.y);
        CAPTURE(pair.x);
        CAPTURE(pair.y);
        CHECK(rep.iff_holds);
    }
}

TEST_CASE("coalescence condition rejects non-critical inputs") {
    CHECK_THROWS_AS(check_coalescence_condition(named_graph("K4"), 0, named_graph("C6"), 0),
                    std::invalid_argument);
    Graph c6 = named_graph("C6");
    CHECK_THROWS_AS(check_coalescence_condition(c6, 9, c6, 0), std::invalid_argument);
}

TEST_CASE("per-vertex solves give identical reports across worker counts") {
    Graph g = build_J(3).graph;  // 20 vertices: large enough for the thread pool
    setenv("DOMCRIT_THREADS", "1", 1);
    CriticalityReport sequential = check_critical(g, Variant::total);
    setenv("DOMCRIT_THREADS", "4", 1);
    CriticalityReport parallel = check_critical(g, Variant::total);
    unsetenv("DOMCRIT_THREADS");
    CHECK(sequential.verdict == parallel.verdict);
    CHECK(sequential.base_value == parallel.base_value);
    CHECK(sequential.per_vertex == parallel.per_vertex);
    CHECK(sequential.nodes_explored == parallel.nodes_explored);
}

TEST_CASE("per-vertex drop for plain and independent critical graphs") {
    // verdict true forces per_vertex = base - 1 exactly for these variants
    for (Variant variant : {Variant::plain, Variant::independent}) {
        CriticalityReport report = check_critical(named_graph("C7"), variant);
        REQUIRE(report.verdict);
        for (int v = 0; v < 7; ++v) CHECK(report.per_vertex[v] == report.base_value - 1);
    }
}
