#ifndef WSAT_FAMILIES_HPP
#define WSAT_FAMILIES_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "wsat/graph.hpp"

namespace wsat {

// The named constructions: F1/F2/F3 are Ollmann's C4-saturated families,
// A1/A2/A3 their joins with K1, B1/B2/B3 the sporadic W4-saturated
// constructions, HStar the unique 5-vertex extremal graph.
enum class Family { F1, F2, F3, A1, A2, A3, B1, B2, B3, HStar };

Family family_from_name(const std::string& name);
std::string family_name(Family family);

struct FamilyParamError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// K5 minus two adjacent edges; 5 vertices, 8 edges, W4-saturated.
Graph h_star();

// Central triangle, a pendant on each triangle vertex, and pairs[i] adjacent
// pairs attached (both endpoints) to triangle vertex i. n even >= 6,
// pairs sum to (n-6)/2.
Graph build_f1(int n, const std::array<int, 3>& pairs);

// Member of F1 on n+1 vertices minus the pendant of triangle vertex
// delete_anchor. n odd >= 5.
Graph build_f2(int n, const std::array<int, 3>& pairs, int delete_anchor);

// C5 with pairs[0] adjacent pairs on one vertex and pairs[1] on a
// consecutive vertex. n odd >= 5, pairs sum to (n-5)/2.
Graph build_f3(int n, const std::array<int, 2>& pairs);

// A-variants: the matching F-member on n-1 vertices joined with K1.
Graph build_a1(int n, const std::array<int, 3>& pairs);
Graph build_a2(int n, const std::array<int, 3>& pairs, int delete_anchor);
Graph build_a3(int n, const std::array<int, 2>& pairs);

// B1 on n = 7 + a + b + c vertices (n odd, a, b, c even): K4 core
// {x1,x2,u1,u2}, degree-2 vertices x, y, z, and matchings U1^1 (anchored at
// x1,u1), U1^2 (anchored at x2,u1), U2 (anchored at x1,x2).
Graph build_b1(int n, int a, int b, int c);

// B1 member on n+1 vertices with U1^2 nonempty, minus the vertex z. n even.
Graph build_b2(int n, int a, int b, int c);

// B3 on n = 8 + a + b vertices (n even, a, b even): K4 core, degree-2
// vertices x, y, the degree-3 pair v1, v2, and matchings U1 (anchored at
// x1,u1) and U2 (anchored at x1,x2).
Graph build_b3(int n, int a, int b);

// All members of the family at order n, one canonical representative per
// isomorphism class, keyed and sorted by canonical key. Empty when n is
// outside the family's range.
std::map<std::string, Graph> enumerate_family(Family family, int n);

// The claimed extremal set for W4 at order n >= 6: A1 u B1 for odd n,
// A2 u A3 u B2 u B3 for even n.
std::map<std::string, Graph> theorem_rhs(int n);

}  // namespace wsat

#endif
