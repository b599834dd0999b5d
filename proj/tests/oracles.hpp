#ifndef WSAT_TEST_ORACLES_HPP
#define WSAT_TEST_ORACLES_HPP

// Brute-force reference implementations for the test suites. Everything here
// deliberately avoids the library's detection and canonicalization paths:
// containment tries all injections, isomorphism tries all bijections.

#include <cstdint>
#include <utility>
#include <vector>

#include "wsat/graph.hpp"

namespace wsat::test {

struct Pattern {
    int n;
    std::vector<std::pair<int, int>> edges;
};

Pattern pattern_cycle(int m);
Pattern pattern_clique(int k);
Pattern pattern_wheel(int m);  // rim C_m plus a center

// Subgraph containment by exhaustive injective mapping.
bool oracle_contains(const Graph& g, const Pattern& p);

// Isomorphism by exhaustive bijection search.
bool oracle_isomorphic(const Graph& a, const Graph& b);

// Labeled graph from an upper-triangle edge mask, pairs (u,v) with u < v in
// lexicographic order; inverse of mask_from_graph.
Graph graph_from_mask(int n, std::uint64_t mask);
std::uint64_t mask_from_graph(const Graph& g);

// Smallest edge mask over all n! relabelings: a brute-force canonical form
// for labeled graphs with <= 11 pair bits ... in practice n <= 8.
std::uint64_t orbit_min_mask(int n, std::uint64_t mask);

// Deterministic pseudo-random graph for property tests.
Graph random_graph(int n, double edge_prob, std::uint64_t seed);

}  // namespace wsat::test

#endif
