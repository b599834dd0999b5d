#include "wsat/saturation.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <thread>
#include <unordered_set>

#include <json.hpp>

namespace wsat {

bool is_free(const Graph& g, const TargetPredicate& target) {
    return !target.contains(g);
}

bool is_saturated(const Graph& g, const TargetPredicate& target) {
    if (target.contains(g)) return false;
    for (auto [u, v] : g.non_edges())
        if (!target.contains(g.with_edge(u, v))) return false;
    return true;
}

std::vector<int> completion_witness(const Graph& g, int u, int v) {
    if (g.has_edge(u, v))
        throw std::invalid_argument("completion_witness needs a non-edge");
    Graph completed = g.with_edge(u, v);
    const int n = g.order();
    std::uint64_t rest = completed.vertex_mask() & ~(bit(u) | bit(v));
    std::vector<int> others;
    for (std::uint64_t s = rest; s; s &= s - 1)
        others.push_back(std::countr_zero(s));
    const int m = static_cast<int>(others.size());
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int c = b + 1; c < m; ++c) {
                std::uint64_t set =
                    bit(u) | bit(v) | bit(others[a]) | bit(others[b]) | bit(others[c]);
                if (contains_w4(completed.induced(set))) {
                    std::vector<int> witness;
                    for (std::uint64_t s = set; s; s &= s - 1)
                        witness.push_back(std::countr_zero(s));
                    return witness;
                }
            }
    (void)n;
    throw NoWitnessError("graph plus edge contains no W4");
}

VertexPartition min_degree_vertex_partition(const Graph& g) {
    const int n = g.order();
    int best = -1, best_deg = 0, best_enx = 0;
    for (int v = 0; v < n; ++v) {
        int deg = g.degree(v);
        if (deg == n - 1) continue;  // N[v] covers everything
        std::uint64_t closed = g.neighbors(v) | bit(v);
        int enx = g.induced(closed).edge_count();
        if (best < 0 || deg < best_deg || (deg == best_deg && enx < best_enx)) {
            best = v;
            best_deg = deg;
            best_enx = enx;
        }
    }
    int delta = g.min_degree();
    if (best < 0 || best_deg != delta)
        throw NoPartitionError("graph is complete, no vertex partition");
    VertexPartition p;
    p.x = best;
    p.nx_mask = g.neighbors(best);
    for (std::uint64_t s = p.nx_mask; s; s &= s - 1)
        p.nx.push_back(std::countr_zero(s));
    p.vx_mask = g.vertex_mask() & ~(p.nx_mask | bit(best));
    p.layers.assign(delta + 1, 0);
    for (std::uint64_t s = p.vx_mask; s; s &= s - 1) {
        int v = std::countr_zero(s);
        int i = std::popcount(g.neighbors(v) & p.nx_mask);
        p.layers[i] |= bit(v);
    }
    return p;
}

int layer_of(const VertexPartition& p, int v) {
    if (!(p.vx_mask & bit(v))) return -1;
    for (std::size_t i = 0; i < p.layers.size(); ++i)
        if (p.layers[i] & bit(v)) return static_cast<int>(i);
    return -1;
}

int f_value_doubled(const Graph& g, const VertexPartition& p, int v) {
    int i = layer_of(p, v);
    if (i < 0) throw std::invalid_argument("vertex not in V_x");
    std::uint64_t upper = 0;
    for (std::size_t j = i + 1; j < p.layers.size(); ++j) upper |= p.layers[j];
    std::uint64_t nbrs = g.neighbors(v);
    return 2 * i + std::popcount(nbrs & p.layers[i]) +
           2 * std::popcount(nbrs & upper);
}

int g_value_doubled(const Graph& g, const VertexPartition& p, int v) {
    if (!(p.vx_mask & bit(v))) throw std::invalid_argument("vertex not in V_x");
    std::uint64_t nbrs = g.neighbors(v);
    return 2 * std::popcount(nbrs & p.nx_mask) + std::popcount(nbrs & p.vx_mask);
}

bool fg_identity_check(const Graph& g) {
    VertexPartition p;
    try {
        p = min_degree_vertex_partition(g);
    } catch (const NoPartitionError&) {
        return true;  // complete graph, nothing to check
    }
    int e_closed = g.induced(p.nx_mask | bit(p.x)).edge_count();
    int f_sum = 0, g_sum = 0;
    for (std::uint64_t s = p.vx_mask; s; s &= s - 1) {
        int v = std::countr_zero(s);
        f_sum += f_value_doubled(g, p, v);
        g_sum += g_value_doubled(g, p, v);
    }
    int doubled_target = 2 * (g.edge_count() - e_closed);
    return f_sum == doubled_target && g_sum == doubled_target;
}

std::vector<int> shadow_of(const Graph& g, const VertexPartition& p, int v) {
    if (layer_of(p, v) != 1)
        throw std::invalid_argument("shadow_of expects a V_1 vertex");
    int xi = std::countr_zero(g.neighbors(v) & p.nx_mask);
    // x_j candidates: neighbors of x adjacent to x_i.
    std::uint64_t xjs = p.nx_mask & g.neighbors(xi);
    std::vector<int> shadows;
    std::uint64_t cands = g.neighbors(v) & g.neighbors(xi) & p.vx_mask;
    for (std::uint64_t s = cands; s; s &= s - 1) {
        int cand = std::countr_zero(s);
        if (g.neighbors(cand) & xjs) shadows.push_back(cand);
    }
    return shadows;
}

namespace {

bool every_nonadjacent_pair_shares_neighbor(const Graph& g) {
    const int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) && g.common_neighbors(u, v) == 0) return false;
    return true;
}

}  // namespace

std::vector<NamedCheck> lemma31_suite(const Graph& g) {
    std::vector<NamedCheck> out;
    out.push_back({"min_degree_at_least_2", g.min_degree() >= 2});
    out.push_back({"nonadjacent_pairs_share_neighbor",
                   every_nonadjacent_pair_shares_neighbor(g)});
    bool v0_empty = true;
    try {
        VertexPartition p = min_degree_vertex_partition(g);
        v0_empty = p.layers[0] == 0;
    } catch (const NoPartitionError&) {
        // complete graph: V_x empty, nothing in V_0
    }
    out.push_back({"layer_v0_empty", v0_empty});
    return out;
}

// ---------------------------------------------------------------------------
// Isomorph-free enumeration by canonical augmentation. A child C = P + e is
// kept only when deleting C's canonical-last edge gives P back (up to
// isomorphism); each class then appears via exactly one parent class, and a
// small per-parent key set absorbs repeats through automorphic edges.

namespace {

// Preimage in g of the last upper-triangle edge of the canonical form.
std::pair<int, int> canonical_last_edge(const Graph& g, const CanonicalForm& cf) {
    const int n = g.order();
    for (int i = n - 1; i >= 0; --i)
        for (int j = i - 1; j >= 0; --j)
            if (cf.graph.has_edge(j, i)) return {cf.order[j], cf.order[i]};
    throw std::logic_error("canonical_last_edge on an edgeless graph");
}

std::vector<Graph> expand_parent(const Graph& parent, const std::string& parent_key) {
    std::vector<Graph> accepted;
    std::unordered_set<std::string> child_keys;
    for (auto [u, v] : parent.non_edges()) {
        Graph child = parent.with_edge(u, v);
        CanonicalForm cf = canonical_form(child);
        if (!child_keys.insert(cf.key).second) continue;
        auto [a, b] = canonical_last_edge(child, cf);
        if (canonical_key(child.without_edge(a, b)) != parent_key) continue;
        accepted.push_back(cf.graph);  // keep the canonical representative
    }
    return accepted;
}

std::vector<Graph> next_level(const std::vector<Graph>& level, int threads) {
    if (threads <= 1 || level.size() < 8) {
        std::vector<Graph> out;
        for (const Graph& parent : level) {
            auto children = expand_parent(parent, canonical_key(parent));
            out.insert(out.end(), children.begin(), children.end());
        }
        return out;
    }
    std::vector<std::vector<Graph>> partial(level.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= level.size()) break;
            partial[i] = expand_parent(level[i], canonical_key(level[i]));
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    std::vector<Graph> out;
    for (auto& chunk : partial)
        out.insert(out.end(), chunk.begin(), chunk.end());
    return out;
}

bool passes_prune(const Graph& g, const TargetPredicate& target, bool prune) {
    if (!prune || !target.every_edge_on_triangle()) return true;
    // Saturated graphs for triangle-covered targets have diameter <= 2.
    return every_nonadjacent_pair_shares_neighbor(g);
}

}  // namespace

std::vector<Graph> enumerate_level(int n, int edges) {
    std::vector<Graph> level{Graph::empty(n)};
    for (int m = 0; m < edges; ++m) level = next_level(level, 1);
    return level;
}

SaturationReport search_min_saturated(int n, const TargetPredicate& target,
                                      const SearchOptions& options) {
    if (n < 4 || n > 12)
        throw std::invalid_argument("search supports 4 <= n <= 12");
    if (options.edge_cap && *options.edge_cap < 0)
        throw std::invalid_argument("edge cap must be >= 0");
    auto start_time = std::chrono::steady_clock::now();

    SaturationReport report;
    report.n = n;
    report.target = target.name();

    const int max_edges = n * (n - 1) / 2;
    std::vector<Graph> level{Graph::empty(n)};
    for (int m = 0;; ++m) {
        report.graphs_examined += level.size();
        std::vector<std::string> hits;
        for (const Graph& g : level) {
            if (!passes_prune(g, target, options.prune)) continue;
            if (is_saturated(g, target)) hits.push_back(graph6_encode(g));
        }
        if (!hits.empty()) {
            std::sort(hits.begin(), hits.end());
            report.status = SearchStatus::Found;
            report.sat_value = m;
            report.extremal_graph6 = std::move(hits);
            break;
        }
        bool capped = options.edge_cap && m >= *options.edge_cap;
        if (capped || m == max_edges) {
            report.status = SearchStatus::CapExhausted;
            break;
        }
        level = next_level(level, options.threads);
    }

    report.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start_time)
                         .count();
    return report;
}

std::string report_to_json(const SaturationReport& report) {
    nlohmann::json j;
    j["n"] = report.n;
    j["target"] = report.target;
    j["status"] =
        report.status == SearchStatus::Found ? "found" : "cap_exhausted";
    if (report.status == SearchStatus::Found) j["sat_value"] = report.sat_value;
    j["extremal"] = report.extremal_graph6;
    j["graphs_examined"] = report.graphs_examined;
    j["wall_ms"] = report.wall_ms;
    return j.dump();
}

}  // namespace wsat
