#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>

#include "oracles.hpp"
#include "wsat/families.hpp"
#include "wsat/saturation.hpp"

using namespace wsat;
using namespace wsat::test;

namespace {

const TargetPredicate W4 = TargetPredicate::wheel(4);
const TargetPredicate C4 = TargetPredicate::cycle4();

Graph cycle(int n) {
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return b.finish();
}

int degree_count(const Graph& g, int degree) {
    int count = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == degree) ++count;
    return count;
}

}  // namespace

TEST_CASE("h_star") {
    Graph hs = h_star();
    CHECK(hs.order() == 5);
    CHECK(hs.edge_count() == 8);
    CHECK(is_saturated(hs, W4));
    Graph w4 = cycle(4).join_universal();
    CHECK(w4.edge_count() == 8);
    CHECK(canonical_key(hs) != canonical_key(w4));
}

TEST_CASE("f1 construction") {
    Graph f = build_f1(6, {0, 0, 0});
    CHECK(f.edge_count() == 6);  // floor((3*6-5)/2)
    CHECK(is_saturated(f, C4));

    Graph f8 = build_f1(8, {1, 0, 0});
    CHECK(f8.edge_count() == 9);
    CHECK(is_saturated(f8, C4));

    CHECK_THROWS_AS(build_f1(7, {0, 0, 0}), FamilyParamError);
    CHECK_THROWS_AS(build_f1(8, {2, 0, 0}), FamilyParamError);
    CHECK_THROWS_AS(build_f1(8, {-1, 1, 1}), FamilyParamError);
}

TEST_CASE("f2 and f3 constructions") {
    Graph f2 = build_f2(5, {0, 0, 0}, 0);
    CHECK(f2.order() == 5);
    CHECK(f2.edge_count() == 5);  // triangle plus two pendants
    CHECK(is_saturated(f2, C4));

    Graph f3 = build_f3(5, {0, 0});
    CHECK(oracle_isomorphic(f3, cycle(5)));

    CHECK(is_saturated(build_f3(9, {2, 0}), C4));
    CHECK_THROWS_AS(build_f3(6, {0, 0}), FamilyParamError);
    CHECK_THROWS_AS(build_f2(5, {0, 0, 0}, 3), FamilyParamError);
}

TEST_CASE("a-family joins") {
    Graph a3 = build_a3(6, {0, 0});
    CHECK(oracle_isomorphic(a3, cycle(5).join_universal()));  // W5
    CHECK(a3.edge_count() == 10);

    Graph a1 = build_a1(7, {0, 0, 0});
    CHECK(a1.edge_count() == 12);  // floor((5*7-10)/2)
    CHECK(is_saturated(a1, W4));

    CHECK(is_saturated(build_a2(8, {0, 0, 1}, 1), W4));
    CHECK_THROWS_AS(build_a1(8, {0, 0, 1}), FamilyParamError);
    CHECK_THROWS_AS(build_a3(7, {0, 1}), FamilyParamError);
}

TEST_CASE("b1 construction") {
    Graph b = build_b1(7, 0, 0, 0);
    CHECK(b.edge_count() == 12);
    CHECK(is_saturated(b, W4));
    CHECK(degree_count(b, 2) == 3);  // exactly x, y, z

    CHECK(is_saturated(build_b1(11, 2, 2, 0), W4));
    CHECK(degree_count(build_b1(11, 2, 2, 0), 2) == 3);

    CHECK_THROWS_AS(build_b1(9, 1, 1, 0), FamilyParamError);
    CHECK_THROWS_AS(build_b1(8, 0, 0, 0), FamilyParamError);
    CHECK_THROWS_AS(build_b1(9, 0, 0, 0), FamilyParamError);  // sizes sum short
}

TEST_CASE("b2 and b3 constructions") {
    Graph b2 = build_b2(8, 0, 2, 0);
    CHECK(b2.edge_count() == 15);
    CHECK(is_saturated(b2, W4));
    CHECK_THROWS_AS(build_b2(8, 2, 0, 0), FamilyParamError);  // needs U1^2
    CHECK_THROWS_AS(build_b2(9, 0, 2, 0), FamilyParamError);

    Graph b3 = build_b3(8, 0, 0);
    CHECK(b3.edge_count() == 15);
    CHECK(is_saturated(b3, W4));
    // the degree-3 pair v1, v2
    CHECK(b3.degree(2) == 3);
    CHECK(b3.degree(3) == 3);
    CHECK(is_saturated(build_b3(10, 2, 0), W4));
    CHECK_THROWS_AS(build_b3(10, 1, 1), FamilyParamError);
}

TEST_CASE("family enumeration counts") {
    CHECK(enumerate_family(Family::A3, 6).size() == 1);  // only C5 at n-1=5
    CHECK(enumerate_family(Family::B1, 7).size() == 1);
    CHECK(enumerate_family(Family::F1, 10).size() == 2);  // (2,0,0) and (1,1,0)
    CHECK(enumerate_family(Family::B2, 6).empty());
    CHECK(enumerate_family(Family::F1, 7).empty());
    CHECK(enumerate_family(Family::HStar, 5).size() == 1);
    CHECK(enumerate_family(Family::HStar, 6).empty());

    // stable across runs
    auto once = enumerate_family(Family::B1, 11);
    auto twice = enumerate_family(Family::B1, 11);
    CHECK(once.size() == twice.size());
    CHECK(std::equal(once.begin(), once.end(), twice.begin(),
                     [](const auto& a, const auto& b) {
                         return a.first == b.first && a.second == b.second;
                     }));
}

TEST_CASE("theorem right-hand side") {
    auto rhs6 = theorem_rhs(6);
    auto a2 = enumerate_family(Family::A2, 6);
    auto a3 = enumerate_family(Family::A3, 6);
    CHECK(rhs6.size() == a2.size() + a3.size());  // B families empty at n=6
    for (auto& [key, g] : a2) CHECK(rhs6.count(key) == 1);
    for (auto& [key, g] : a3) CHECK(rhs6.count(key) == 1);

    CHECK(theorem_rhs(7).size() == 2);
    CHECK_THROWS_AS(theorem_rhs(5), std::out_of_range);
}

TEST_CASE("edge-count and saturation laws for all admissible n <= 12") {
    for (int n = 5; n <= 12; ++n) {
        int w4_edges = (5 * n - 10) / 2;
        int c4_edges = (3 * n - 5) / 2;
        for (Family fam : {Family::A1, Family::A2, Family::A3, Family::B1,
                           Family::B2, Family::B3}) {
            for (auto& [key, g] : enumerate_family(fam, n)) {
                CHECK(g.order() == n);
                CHECK(g.edge_count() == w4_edges);
                CHECK(is_saturated(g, W4));
            }
        }
        for (Family fam : {Family::F1, Family::F2, Family::F3}) {
            for (auto& [key, g] : enumerate_family(fam, n)) {
                CHECK(g.order() == n);
                CHECK(g.edge_count() == c4_edges);
                CHECK(is_saturated(g, C4));
            }
        }
    }
}

TEST_CASE("family name round-trip") {
    for (Family fam : {Family::F1, Family::F2, Family::F3, Family::A1,
                       Family::A2, Family::A3, Family::B1, Family::B2,
                       Family::B3, Family::HStar})
        CHECK(family_from_name(family_name(fam)) == fam);
    CHECK_THROWS_AS(family_from_name("nope"), std::invalid_argument);
}
