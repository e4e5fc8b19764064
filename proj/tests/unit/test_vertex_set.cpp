#include <doctest.h>

#include <vector>

#include "domcrit/vertex_set.hpp"

using namespace domcrit;

TEST_CASE("vertex set basics") {
    VertexSet s;
    CHECK(s.empty());
    CHECK(s.count() == 0);
    CHECK(s.lowest() == -1);

    s.set(0).set(63).set(64).set(127);
    CHECK(s.count() == 4);
    CHECK(s.test(63));
    CHECK(s.test(64));
    CHECK_FALSE(s.test(1));
    CHECK(s.lowest() == 0);

    s.reset(0);
    CHECK(s.lowest() == 63);
    CHECK(s.count() == 3);
}

TEST_CASE("full covers both words") {
    CHECK(VertexSet::full(0).empty());
    CHECK(VertexSet::full(1).count() == 1);
    CHECK(VertexSet::full(64).count() == 64);
    CHECK(VertexSet::full(65).count() == 65);
    CHECK(VertexSet::full(128).count() == 128);
    CHECK(VertexSet::full(128).test(127));
    CHECK_FALSE(VertexSet::full(64).test(64));
}

TEST_CASE("set algebra") {
    VertexSet a = VertexSet::single(3) | VertexSet::single(70);
    VertexSet b = VertexSet::single(70) | VertexSet::single(90);
    CHECK((a & b) == VertexSet::single(70));
    CHECK((a | b).count() == 3);
    CHECK((a - b) == VertexSet::single(3));
    CHECK(a.intersects(b));
    CHECK_FALSE((a - b).intersects(b));
    CHECK(VertexSet::full(100).contains(a));
    CHECK_FALSE(a.contains(b));
}

TEST_CASE("iteration is ascending and crosses the word boundary") {
    VertexSet s;
    for (int v : {5, 0, 77, 64, 63, 127}) s.set(v);
    std::vector<int> seen;
    for (int v : s) seen.push_back(v);
    CHECK(seen == std::vector<int>{0, 5, 63, 64, 77, 127});
}
