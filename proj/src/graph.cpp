#include "wsat/graph.hpp"

#include <algorithm>
#include <bit>

namespace wsat {

Graph Graph::empty(int n) {
    if (n < 1 || n > kMaxVertices)
        throw std::length_error("vertex count must be in [1,64], got " +
                                std::to_string(n));
    Graph g;
    g.n_ = n;
    return g;
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[v]);
}

int Graph::min_degree() const {
    int d = kMaxVertices;
    for (int v = 0; v < n_; ++v) d = std::min(d, std::popcount(adj_[v]));
    return d;
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += std::popcount(adj_[v]);
    return total / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] & bit(v)) != 0;
}

std::uint64_t Graph::common_neighbors(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u] & adj_[v] & ~(bit(u) | bit(v));
}

Graph Graph::with_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop edge not allowed");
    Graph g = *this;
    g.adj_[u] |= bit(v);
    g.adj_[v] |= bit(u);
    return g;
}

Graph Graph::without_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    Graph g = *this;
    g.adj_[u] &= ~bit(v);
    g.adj_[v] &= ~bit(u);
    return g;
}

Graph Graph::join_universal() const {
    if (n_ >= kMaxVertices)
        throw std::length_error("join_universal would exceed 64 vertices");
    Graph g = *this;
    g.n_ = n_ + 1;
    g.adj_[n_] = vertex_mask();
    for (int v = 0; v < n_; ++v) g.adj_[v] |= bit(n_);
    return g;
}

Graph Graph::induced(std::uint64_t vertex_set) const {
    vertex_set &= vertex_mask();
    const int m = std::popcount(vertex_set);
    if (m == 0) throw std::invalid_argument("induced subgraph needs >=1 vertex");
    std::array<int, kMaxVertices> pos{};
    std::vector<int> verts;
    verts.reserve(m);
    for (std::uint64_t s = vertex_set; s; s &= s - 1) {
        int v = std::countr_zero(s);
        pos[v] = static_cast<int>(verts.size());
        verts.push_back(v);
    }
    Graph g;
    g.n_ = m;
    for (int i = 0; i < m; ++i) {
        for (std::uint64_t s = adj_[verts[i]] & vertex_set; s; s &= s - 1)
            g.adj_[i] |= bit(pos[std::countr_zero(s)]);
    }
    return g;
}

Graph Graph::relabeled(const std::vector<int>& order) const {
    if (static_cast<int>(order.size()) != n_)
        throw std::invalid_argument("relabeling order has wrong length");
    std::array<int, kMaxVertices> pos{};
    for (int i = 0; i < n_; ++i) {
        check_vertex(order[i]);
        pos[order[i]] = i;
    }
    Graph g;
    g.n_ = n_;
    for (int i = 0; i < n_; ++i) {
        for (std::uint64_t s = adj_[order[i]]; s; s &= s - 1)
            g.adj_[i] |= bit(pos[std::countr_zero(s)]);
    }
    return g;
}

std::vector<std::pair<int, int>> Graph::non_edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!(adj_[u] & bit(v))) out.emplace_back(u, v);
    return out;
}

bool Graph::operator==(const Graph& other) const {
    if (n_ != other.n_) return false;
    for (int v = 0; v < n_; ++v)
        if (adj_[v] != other.adj_[v]) return false;
    return true;
}

bool Graph::is_valid() const {
    if (n_ < 1 || n_ > kMaxVertices) return false;
    for (int v = 0; v < n_; ++v) {
        if (adj_[v] & bit(v)) return false;
        if (adj_[v] & ~vertex_mask()) return false;
        for (std::uint64_t s = adj_[v]; s; s &= s - 1)
            if (!(adj_[std::countr_zero(s)] & bit(v))) return false;
    }
    return true;
}

GraphBuilder::GraphBuilder(int n) : g_(Graph::empty(n)) {}

void GraphBuilder::add_edge(int u, int v) {
    g_.check_vertex(u);
    g_.check_vertex(v);
    if (u == v) throw std::invalid_argument("loop edge not allowed");
    g_.adj_[u] |= bit(v);
    g_.adj_[v] |= bit(u);
}

bool is_automorphism(const Graph& g, const std::vector<int>& perm) {
    const int n = g.order();
    if (static_cast<int>(perm.size()) != n) return false;
    for (int v = 0; v < n; ++v) {
        std::uint64_t mapped = 0;
        for (std::uint64_t s = g.neighbors(v); s; s &= s - 1)
            mapped |= bit(perm[std::countr_zero(s)]);
        if (mapped != g.neighbors(perm[v])) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Canonical labeling: iterated neighborhood refinement plus backtracking over
// the first non-singleton color class, taking the lexicographically smallest
// upper-triangle bit string over all leaves. Color ids are assigned by sorted
// signature rank, so cell order is label-independent.

namespace {

// Refines colors in place until stable. Colors end up as dense ranks.
void refine_colors(const Graph& g, std::vector<int>& colors) {
    const int n = g.order();
    std::vector<std::vector<int>> sigs(n);
    std::vector<int> idx(n);
    int num_colors = 0;
    for (;;) {
        for (int v = 0; v < n; ++v) {
            auto& sig = sigs[v];
            sig.clear();
            sig.push_back(colors[v]);
            for (std::uint64_t s = g.neighbors(v); s; s &= s - 1)
                sig.push_back(colors[std::countr_zero(s)]);
            std::sort(sig.begin() + 1, sig.end());
        }
        for (int v = 0; v < n; ++v) idx[v] = v;
        std::sort(idx.begin(), idx.end(),
                  [&](int a, int b) { return sigs[a] < sigs[b]; });
        int rank = 0;
        std::vector<int> next(n);
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sigs[idx[i]] != sigs[idx[i - 1]]) ++rank;
            next[idx[i]] = rank;
        }
        if (rank + 1 == num_colors) break;
        num_colors = rank + 1;
        colors = std::move(next);
        if (num_colors == n) break;
    }
}

std::string key_for_order(const Graph& g, const std::vector<int>& order) {
    const int n = g.order();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::string key;
    key.push_back(static_cast<char>(n));
    int nbits = n * (n - 1) / 2;
    key.resize(1 + (nbits + 7) / 8, '\0');
    int bitpos = 0;
    for (int i = 0; i < n; ++i) {
        std::uint64_t row = g.neighbors(order[i]);
        for (int j = i + 1; j < n; ++j, ++bitpos) {
            if (row & bit(order[j]))
                key[1 + bitpos / 8] |= static_cast<char>(0x80 >> (bitpos % 8));
        }
    }
    return key;
}

struct CanonSearch {
    const Graph& g;
    std::string best_key;
    std::vector<int> best_order;
    bool have_best = false;

    explicit CanonSearch(const Graph& graph) : g(graph) {}

    void run(std::vector<int> colors) {
        refine_colors(g, colors);
        const int n = g.order();

        // First non-singleton cell in color order.
        int target_color = -1;
        {
            std::vector<int> count(n, 0);
            for (int v = 0; v < n; ++v) ++count[colors[v]];
            for (int c = 0; c < n; ++c) {
                if (count[c] > 1) {
                    target_color = c;
                    break;
                }
            }
        }

        if (target_color < 0) {
            std::vector<int> order(n);
            std::vector<int> slot(n);
            for (int v = 0; v < n; ++v) slot[v] = v;
            std::sort(slot.begin(), slot.end(),
                      [&](int a, int b) { return colors[a] < colors[b]; });
            order = slot;
            std::string key = key_for_order(g, order);
            if (!have_best || key < best_key) {
                best_key = std::move(key);
                best_order = std::move(order);
                have_best = true;
            }
            return;
        }

        std::vector<int> cell;
        for (int v = 0; v < n; ++v)
            if (colors[v] == target_color) cell.push_back(v);

        std::vector<int> tried;
        for (int v : cell) {
            if (equivalent_to_tried(v, tried, colors)) continue;
            tried.push_back(v);
            // Individualize v: give it a color just below its cell.
            std::vector<int> child(colors);
            for (int u = 0; u < n; ++u) child[u] *= 2;
            child[v] -= 1;
            run(std::move(child));
        }
    }

    // Cheap orbit pruning: skip v when an already-tried candidate u maps to v
    // under an obvious automorphism, either the transposition (u v) or the
    // double transposition (u v)(w z) with w,z the single differing neighbors.
    // This collapses interchangeable vertices and matched pairs, which is
    // where the symmetric inputs here (empty cells, matchings on anchors)
    // would otherwise explode.
    bool equivalent_to_tried(int v, const std::vector<int>& tried,
                             const std::vector<int>& colors) const {
        const int n = g.order();
        for (int u : tried) {
            std::uint64_t mask_uv = bit(u) | bit(v);
            std::uint64_t du = g.neighbors(u) & ~mask_uv;
            std::uint64_t dv = g.neighbors(v) & ~mask_uv;
            if (((g.neighbors(u) >> v) & 1) != ((g.neighbors(v) >> u) & 1))
                continue;
            std::uint64_t only_u = du & ~dv;
            std::uint64_t only_v = dv & ~du;
            std::vector<int> perm(n);
            for (int i = 0; i < n; ++i) perm[i] = i;
            perm[u] = v;
            perm[v] = u;
            if (only_u == 0 && only_v == 0) {
                if (is_automorphism(g, perm)) return true;
            } else if (std::popcount(only_u) == 1 && std::popcount(only_v) == 1) {
                int w = std::countr_zero(only_u);
                int z = std::countr_zero(only_v);
                if (colors[w] != colors[z]) continue;
                perm[w] = z;
                perm[z] = w;
                if (is_automorphism(g, perm)) return true;
            }
        }
        return false;
    }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    CanonSearch search(g);
    search.run(std::vector<int>(g.order(), 0));
    CanonicalForm out;
    out.order = search.best_order;
    out.key = search.best_key;
    out.graph = g.relabeled(out.order);
    return out;
}

std::string canonical_key(const Graph& g) {
    CanonSearch search(g);
    search.run(std::vector<int>(g.order(), 0));
    return search.best_key;
}

// ---------------------------------------------------------------------------
// graph6: header byte 63+n for n <= 62 (else 126 plus three 6-bit bytes),
// then the upper triangle packed column-wise in 6-bit groups, each +63.

std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 0x3f)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 0x3f)));
        out.push_back(static_cast<char>(63 + (n & 0x3f)));
    }
    int acc = 0, nb = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nb = 0;
            }
        }
    }
    if (nb > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nb))));
    return out;
}

Graph graph6_decode(const std::string& line) {
    std::size_t pos = 0;
    auto need = [&](std::size_t k) {
        if (line.size() < pos + k) throw ParseError("truncated graph6 line", pos);
    };
    auto sixbits = [&]() {
        need(1);
        unsigned char c = static_cast<unsigned char>(line[pos]);
        if (c < 63 || c > 126) throw ParseError("byte outside graph6 range", pos);
        ++pos;
        return static_cast<int>(c - 63);
    };
    need(1);
    int n;
    if (static_cast<unsigned char>(line[0]) == 126) {
        ++pos;
        int a = sixbits(), b = sixbits(), c = sixbits();
        n = (a << 12) | (b << 6) | c;
    } else {
        n = sixbits();
    }
    if (n < 1 || n > Graph::kMaxVertices)
        throw ParseError("vertex count " + std::to_string(n) + " unsupported", 0);
    GraphBuilder builder(n);
    int acc = 0, nb = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (nb == 0) {
                acc = sixbits();
                nb = 6;
            }
            if (acc & (1 << (nb - 1))) builder.add_edge(u, v);
            --nb;
        }
    }
    if (pos != line.size()) throw ParseError("trailing bytes after graph6 data", pos);
    return builder.finish();
}

std::string dot_encode(const Graph& g, const std::string& name) {
    std::string out = "graph " + name + " {\n";
    for (int v = 0; v < g.order(); ++v)
        out += "  " + std::to_string(v) + ";\n";
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.has_edge(u, v))
                out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace wsat
