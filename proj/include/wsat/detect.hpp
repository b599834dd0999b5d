#ifndef WSAT_DETECT_HPP
#define WSAT_DETECT_HPP

#include <array>
#include <optional>
#include <string>

#include "wsat/graph.hpp"

namespace wsat {

// Subgraph containment, never induced containment.

bool contains_c4(const Graph& g);
bool contains_clique(const Graph& g, int k);
bool contains_w4(const Graph& g);
// Wheel W_m: some vertex whose neighborhood carries a C_m subgraph.
bool contains_wheel(const Graph& g, int m);

// If N(v) carries a 4-cycle, its four rim vertices in cycle order.
std::optional<std::array<int, 4>> c4_in_neighborhood_witness(const Graph& g,
                                                             int v);

// The saturation target H. Parsed from names like "W4", "C4", "K5", "W7".
struct TargetPredicate {
    enum class Kind { Clique, Cycle4, Wheel };
    Kind kind;
    int param = 0;  // k for cliques, m for wheels, unused for C4

    std::string name() const;
    bool contains(const Graph& g) const;
    // Target vertex count, the minimum order a host graph needs.
    int order() const;
    // True when every edge of the target lies on a triangle; gates the
    // diameter-<=2 search prune.
    bool every_edge_on_triangle() const;

    static TargetPredicate clique(int k);
    static TargetPredicate cycle4();
    static TargetPredicate wheel(int m);
    static TargetPredicate parse(const std::string& name);
};

}  // namespace wsat

#endif
