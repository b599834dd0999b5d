#ifndef WSAT_SATURATION_HPP
#define WSAT_SATURATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wsat/detect.hpp"
#include "wsat/graph.hpp"

namespace wsat {

bool is_free(const Graph& g, const TargetPredicate& target);

// Target-free and every non-edge completion creates the target.
bool is_saturated(const Graph& g, const TargetPredicate& target);

// Five vertices (including u and v) inducing a W4-containing subgraph of
// G + uv. Throws NoWitnessError when G + uv is W4-free.
struct NoWitnessError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
std::vector<int> completion_witness(const Graph& g, int u, int v);

// Layer decomposition around a minimum-degree vertex x: V_i holds the
// vertices outside N[x] with exactly i neighbors inside N(x).
struct VertexPartition {
    int x;
    std::vector<int> nx;           // neighbors of x, ascending
    std::uint64_t nx_mask;
    std::uint64_t vx_mask;         // V(G) minus N[x]
    std::vector<std::uint64_t> layers;  // layers[i] = V_i, i = 0..delta
};

// x attains the minimum degree; among those, minimal e(N[x]); ties broken by
// lowest index. Throws on complete graphs (no vertex outside N[x]).
struct NoPartitionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
VertexPartition min_degree_vertex_partition(const Graph& g);

int layer_of(const VertexPartition& p, int v);  // -1 if v not in V_x

// Edge-count weights per outside vertex, in doubled units so the 0.5
// coefficients stay exact integers.
int f_value_doubled(const Graph& g, const VertexPartition& p, int v);
int g_value_doubled(const Graph& g, const VertexPartition& p, int v);

// Both identities e(G) = e(N[x]) + sum f(v) = e(N[x]) + sum g(v),
// checked exactly. Complete graphs pass vacuously.
bool fg_identity_check(const Graph& g);

// Shadows of a V_1 vertex v: vertices v' in V_x adjacent to v, to v's unique
// neighbor x_i in N(x), and to some x_j with x_i x_j an edge.
std::vector<int> shadow_of(const Graph& g, const VertexPartition& p, int v);

struct NamedCheck {
    std::string name;
    bool passed;
};
// Necessary conditions for W4-saturated graphs: min degree >= 2, every
// non-adjacent pair has a common neighbor, V_0 empty.
std::vector<NamedCheck> lemma31_suite(const Graph& g);

struct SearchOptions {
    bool prune = true;   // diameter-<=2 precheck, gated on the target
    int threads = 1;
    std::optional<int> edge_cap;
};

enum class SearchStatus { Found, CapExhausted };

struct SaturationReport {
    int n = 0;
    std::string target;
    SearchStatus status = SearchStatus::Found;
    int sat_value = -1;
    std::vector<std::string> extremal_graph6;  // canonical representatives, sorted
    std::uint64_t graphs_examined = 0;
    std::int64_t wall_ms = 0;
};

// Isomorph-free exhaustive search by ascending edge count; the first level
// with a saturated graph fixes sat_value and its saturated classes form the
// extremal set.
SaturationReport search_min_saturated(int n, const TargetPredicate& target,
                                      const SearchOptions& options = {});

// One isomorphism-class representative per graph on n vertices with exactly
// the given edge count (the search's level generator, exposed for tests).
std::vector<Graph> enumerate_level(int n, int edges);

std::string report_to_json(const SaturationReport& report);

}  // namespace wsat

#endif
