#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>
#include <unordered_map>

#include "oracles.hpp"
#include "wsat/graph.hpp"

using namespace wsat;
using namespace wsat::test;

namespace {

Graph cycle(int n) {
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return b.finish();
}

Graph complete(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return b.finish();
}

}  // namespace

TEST_CASE("empty graph construction and bounds") {
    Graph g = Graph::empty(5);
    CHECK(g.order() == 5);
    CHECK(g.edge_count() == 0);
    CHECK(Graph::empty(1).order() == 1);
    CHECK(Graph::empty(64).order() == 64);
    CHECK_THROWS_AS(Graph::empty(65), std::length_error);
    CHECK_THROWS_AS(Graph::empty(0), std::length_error);
}

TEST_CASE("with_edge is symmetric and idempotent") {
    Graph k2 = Graph::empty(2).with_edge(0, 1);
    CHECK(k2.edge_count() == 1);
    CHECK(k2.has_edge(0, 1));
    CHECK(k2.has_edge(1, 0));
    CHECK(k2.with_edge(0, 1) == k2);
    CHECK_THROWS_AS(k2.with_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(k2.with_edge(0, 2), std::out_of_range);

    Graph c5 = cycle(5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
    CHECK(c5.is_valid());
}

TEST_CASE("non_edges enumeration") {
    CHECK(complete(5).non_edges().empty());
    auto triple = Graph::empty(3).non_edges();
    REQUIRE(triple.size() == 3);
    CHECK(triple == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(cycle(5).non_edges().size() == 5);
}

TEST_CASE("join_universal adds a universal vertex") {
    Graph w4 = cycle(4).join_universal();
    CHECK(w4.order() == 5);
    CHECK(w4.edge_count() == 8);
    CHECK(w4.degree(4) == 4);

    Graph w5 = cycle(5).join_universal();
    CHECK(w5.edge_count() == 10);

    // e(G v K1) = e(G) + v(G)
    for (int seed = 0; seed < 20; ++seed) {
        Graph g = random_graph(3 + seed % 10, 0.4, seed);
        CHECK(g.join_universal().edge_count() == g.edge_count() + g.order());
        CHECK(g.join_universal().is_valid());
    }
    CHECK_THROWS_AS(Graph::empty(64).join_universal(), std::length_error);
}

TEST_CASE("degree, neighbors and common neighbors") {
    Graph k4 = complete(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v)
            CHECK(std::popcount(k4.common_neighbors(u, v)) == 2);
    // excludes the endpoints themselves
    CHECK((k4.common_neighbors(0, 1) & (bit(0) | bit(1))) == 0);
    CHECK_THROWS_AS(k4.degree(4), std::out_of_range);
    CHECK_THROWS_AS(k4.common_neighbors(0, 7), std::out_of_range);
}

TEST_CASE("canonical key is relabeling-invariant") {
    Graph c5 = cycle(5);
    Graph c5_shuffled = GraphBuilder(5)
                            .edge(0, 2).edge(2, 4).edge(4, 1).edge(1, 3).edge(3, 0)
                            .finish();
    CHECK(canonical_key(c5) == canonical_key(c5_shuffled));

    for (int seed = 0; seed < 40; ++seed) {
        Graph g = random_graph(4 + seed % 9, 0.45, 100 + seed);
        std::vector<int> order(g.order());
        for (int i = 0; i < g.order(); ++i) order[i] = i;
        std::mt19937 rng(seed);
        std::shuffle(order.begin(), order.end(), rng);
        CHECK(canonical_key(g) == canonical_key(g.relabeled(order)));
    }
}

TEST_CASE("recanonicalization is a fixed point") {
    for (int seed = 0; seed < 25; ++seed) {
        Graph g = random_graph(5 + seed % 8, 0.5, 500 + seed);
        CanonicalForm cf = canonical_form(g);
        CanonicalForm again = canonical_form(cf.graph);
        CHECK(again.key == cf.key);
        CHECK(again.graph == cf.graph);
    }
}

TEST_CASE("4-vertex graphs split into exactly 11 classes") {
    std::set<std::string> keys;
    for (std::uint64_t mask = 0; mask < 64; ++mask)
        keys.insert(canonical_key(graph_from_mask(4, mask)));
    CHECK(keys.size() == 11);
}

TEST_CASE("canonical key agreement equals brute-force isomorphism, n=4,5") {
    for (int n : {4, 5}) {
        const std::uint64_t total = 1ULL << (n * (n - 1) / 2);
        // Key classes and all-bijections orbit classes must induce the same
        // partition: the fibers have to map 1:1 in both directions.
        std::unordered_map<std::uint64_t, std::string> orbit_to_key;
        std::map<std::string, std::uint64_t> key_to_orbit;
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            Graph g = graph_from_mask(n, mask);
            std::string key = canonical_key(g);
            std::uint64_t orbit = orbit_min_mask(n, mask);
            auto [it, inserted] = orbit_to_key.emplace(orbit, key);
            if (!inserted) CHECK(it->second == key);
            auto [jt, jnew] = key_to_orbit.emplace(key, orbit);
            if (!jnew) CHECK(jt->second == orbit);
        }
    }
}

TEST_CASE("graph6 encodes the documented small cases") {
    CHECK(graph6_encode(Graph::empty(5)) == "D??");
    CHECK(graph6_encode(Graph::empty(1)) == "@");
    CHECK(graph6_decode("D??") == Graph::empty(5));
}

TEST_CASE("graph6 round-trip, exhaustive small and random large") {
    for (int n = 1; n <= 5; ++n) {
        const std::uint64_t total = 1ULL << (n * (n - 1) / 2);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            Graph g = graph_from_mask(n, mask);
            CHECK(graph6_decode(graph6_encode(g)) == g);
        }
    }
    for (int seed = 0; seed < 30; ++seed) {
        Graph g = random_graph(10 + (seed * 7) % 31, 0.3, 900 + seed);
        CHECK(graph6_decode(graph6_encode(g)) == g);
    }
    // 63- and 64-vertex graphs take the long header form
    Graph big = random_graph(64, 0.2, 1234);
    CHECK(graph6_decode(graph6_encode(big)) == big);
}

TEST_CASE("graph6 decode rejects malformed input") {
    CHECK_THROWS_AS(graph6_decode(""), ParseError);
    CHECK_THROWS_AS(graph6_decode("D?"), ParseError);       // truncated
    CHECK_THROWS_AS(graph6_decode("D??x\x01"), ParseError);  // junk bytes
    CHECK_THROWS_AS(graph6_decode(std::string(1, '\x05')), ParseError);
    try {
        graph6_decode("D?\x01");
    } catch (const ParseError& e) {
        CHECK(e.offset == 2);
    }
}

TEST_CASE("induced subgraph relabels compactly") {
    Graph c5 = cycle(5);
    Graph path = c5.induced(bit(0) | bit(1) | bit(2));  // P3
    CHECK(path.order() == 3);
    CHECK(path.edge_count() == 2);
    CHECK(path.has_edge(0, 1));
    CHECK(path.has_edge(1, 2));
    CHECK(!path.has_edge(0, 2));
}
