#ifndef WSAT_GRAPH_HPP
#define WSAT_GRAPH_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wsat {

// Simple undirected graph on at most 64 labeled vertices.
// One 64-bit adjacency row per vertex; bit u of adj(v) == edge {u,v}.
// Graphs are values: "mutating" operations return a fresh graph.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    // Zero-vertex placeholder; real graphs come from empty() and friends.
    Graph() = default;

    static Graph empty(int n);

    int order() const { return n_; }
    std::uint64_t neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }
    int degree(int v) const;
    int min_degree() const;
    int edge_count() const;
    bool has_edge(int u, int v) const;

    // Common neighbors of u and v, excluding u and v themselves.
    std::uint64_t common_neighbors(int u, int v) const;

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;

    // New vertex adjacent to every existing vertex (the join G + K1).
    Graph join_universal() const;

    // Subgraph induced by the given vertex set, vertices relabeled
    // 0..popcount-1 in increasing label order.
    Graph induced(std::uint64_t vertex_set) const;

    // Relabeled copy: vertex order[i] becomes vertex i.
    Graph relabeled(const std::vector<int>& order) const;

    // All non-adjacent pairs u < v in lexicographic order.
    std::vector<std::pair<int, int>> non_edges() const;

    std::uint64_t vertex_mask() const {
        return n_ == 64 ? ~0ULL : ((1ULL << n_) - 1);
    }

    bool operator==(const Graph& other) const;

    // Symmetry / irreflexivity / range check, used by debug paths and tests.
    bool is_valid() const;

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("vertex " + std::to_string(v) +
                                    " out of range for n=" + std::to_string(n_));
    }

private:
    int n_ = 0;
    std::array<std::uint64_t, kMaxVertices> adj_{};

    friend class GraphBuilder;
};

// Mutable construction helper so builders and the search hot loop avoid a
// copy per edge; finish() hands back the immutable value.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    explicit GraphBuilder(const Graph& g) : g_(g) {}
    void add_edge(int u, int v);
    GraphBuilder& edge(int u, int v) {
        add_edge(u, v);
        return *this;
    }
    const Graph& finish() const { return g_; }

private:
    Graph g_;
};

inline std::uint64_t bit(int v) { return 1ULL << v; }

// Canonical labeling result: the relabeled graph, the order used
// (order[i] = original vertex placed at position i) and the key.
struct CanonicalForm {
    Graph graph;
    std::vector<int> order;
    std::string key;
};

// Key bytes: n followed by the canonical upper-triangle bit string packed
// 8 bits per byte. Equal keys <=> isomorphic graphs.
CanonicalForm canonical_form(const Graph& g);
std::string canonical_key(const Graph& g);

// Applies perm (vertex -> vertex) and reports whether it maps g onto itself.
bool is_automorphism(const Graph& g, const std::vector<int>& perm);

// graph6 interchange format, one graph per line.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
          offset(offset) {}
    std::size_t offset;
};

std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& line);

// DOT emission for human viewing; layout and details are not contractual.
std::string dot_encode(const Graph& g, const std::string& name = "G");

}  // namespace wsat

#endif
