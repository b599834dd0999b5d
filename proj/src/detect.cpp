#include "wsat/detect.hpp"

#include <bit>
#include <stdexcept>

namespace wsat {

bool contains_c4(const Graph& g) {
    // A C4 subgraph exists iff two vertices share >= 2 other common
    // neighbors (the two vertices are opposite corners of the 4-cycle).
    const int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (std::popcount(g.common_neighbors(u, v)) >= 2) return true;
    return false;
}

namespace {

bool clique_rec(const Graph& g, std::uint64_t candidates, int need) {
    if (need == 0) return true;
    if (std::popcount(candidates) < need) return false;
    while (candidates) {
        int v = std::countr_zero(candidates);
        candidates &= candidates - 1;
        if (clique_rec(g, candidates & g.neighbors(v), need - 1)) return true;
        if (std::popcount(candidates) < need) return false;
    }
    return false;
}

// Any cycle of exactly m vertices inside the `allowed` set. The start vertex
// is forced to be the smallest cycle vertex, the rest is plain backtracking
// with a bitmask path.
bool cycle_path_rec(const Graph& g, int start, int cur, std::uint64_t allowed,
                    std::uint64_t visited, int remaining) {
    if (remaining == 0) return g.has_edge(cur, start);
    std::uint64_t next = g.neighbors(cur) & allowed & ~visited;
    while (next) {
        int v = std::countr_zero(next);
        next &= next - 1;
        if (cycle_path_rec(g, start, v, allowed, visited | bit(v), remaining - 1))
            return true;
    }
    return false;
}

bool has_cycle_in(const Graph& g, std::uint64_t allowed, int m) {
    if (std::popcount(allowed) < m) return false;
    for (std::uint64_t s = allowed; s; s &= s - 1) {
        int start = std::countr_zero(s);
        // Only vertices above the start: start is the smallest on the cycle.
        std::uint64_t higher = allowed & ~(bit(start) | (bit(start) - 1));
        if (cycle_path_rec(g, start, start, higher, 0, m - 1)) return true;
    }
    return false;
}

bool c4_within(const Graph& g, std::uint64_t allowed) {
    for (std::uint64_t s = allowed; s; s &= s - 1) {
        int u = std::countr_zero(s);
        for (std::uint64_t t = s & (s - 1); t; t &= t - 1) {
            int v = std::countr_zero(t);
            if (std::popcount(g.common_neighbors(u, v) & allowed) >= 2)
                return true;
        }
    }
    return false;
}

bool triangle_within(const Graph& g, std::uint64_t allowed) {
    for (std::uint64_t s = allowed; s; s &= s - 1) {
        int u = std::countr_zero(s);
        std::uint64_t nbrs = g.neighbors(u) & allowed;
        for (std::uint64_t t = nbrs; t; t &= t - 1) {
            int v = std::countr_zero(t);
            if (g.common_neighbors(u, v) & allowed) return true;
        }
    }
    return false;
}

}  // namespace

bool contains_clique(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("clique size must be >= 1");
    if (k == 1) return g.order() >= 1;
    return clique_rec(g, g.vertex_mask(), k);
}

bool contains_w4(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (c4_within(g, g.neighbors(v))) return true;
    return false;
}

bool contains_wheel(const Graph& g, int m) {
    if (m < 3) throw std::invalid_argument("wheel rim length must be >= 3");
    for (int v = 0; v < g.order(); ++v) {
        std::uint64_t nbrs = g.neighbors(v);
        bool hit;
        if (m == 3)
            hit = triangle_within(g, nbrs);
        else if (m == 4)
            hit = c4_within(g, nbrs);
        else
            hit = has_cycle_in(g, nbrs, m);
        if (hit) return true;
    }
    return false;
}

std::optional<std::array<int, 4>> c4_in_neighborhood_witness(const Graph& g,
                                                             int v) {
    std::uint64_t nbrs = g.neighbors(v);
    for (std::uint64_t s = nbrs; s; s &= s - 1) {
        int a = std::countr_zero(s);
        for (std::uint64_t t = s & (s - 1); t; t &= t - 1) {
            int c = std::countr_zero(t);
            std::uint64_t mid = g.common_neighbors(a, c) & nbrs;
            if (std::popcount(mid) >= 2) {
                int b = std::countr_zero(mid);
                int d = std::countr_zero(mid & (mid - 1));
                return std::array<int, 4>{a, b, c, d};
            }
        }
    }
    return std::nullopt;
}

std::string TargetPredicate::name() const {
    switch (kind) {
        case Kind::Clique:
            return "K" + std::to_string(param);
        case Kind::Cycle4:
            return "C4";
        case Kind::Wheel:
            return "W" + std::to_string(param);
    }
    return "?";
}

bool TargetPredicate::contains(const Graph& g) const {
    switch (kind) {
        case Kind::Clique:
            return contains_clique(g, param);
        case Kind::Cycle4:
            return contains_c4(g);
        case Kind::Wheel:
            return contains_wheel(g, param);
    }
    return false;
}

int TargetPredicate::order() const {
    switch (kind) {
        case Kind::Clique:
            return param;
        case Kind::Cycle4:
            return 4;
        case Kind::Wheel:
            return param + 1;
    }
    return 0;
}

bool TargetPredicate::every_edge_on_triangle() const {
    switch (kind) {
        case Kind::Clique:
            return param >= 3;
        case Kind::Cycle4:
            return false;
        case Kind::Wheel:
            return true;  // rim edges close with the center, spokes with the rim
    }
    return false;
}

TargetPredicate TargetPredicate::clique(int k) {
    if (k < 1) throw std::invalid_argument("clique size must be >= 1");
    return {Kind::Clique, k};
}

TargetPredicate TargetPredicate::cycle4() { return {Kind::Cycle4, 4}; }

TargetPredicate TargetPredicate::wheel(int m) {
    if (m < 3) throw std::invalid_argument("wheel rim length must be >= 3");
    return {Kind::Wheel, m};
}

TargetPredicate TargetPredicate::parse(const std::string& name) {
    if (name == "C4" || name == "c4") return cycle4();
    if (name.size() >= 2 && (name[0] == 'K' || name[0] == 'k' ||
                             name[0] == 'W' || name[0] == 'w')) {
        int v;
        try {
            v = std::stoi(name.substr(1));
        } catch (const std::exception&) {
            throw std::invalid_argument("unknown target '" + name + "'");
        }
        if (name[0] == 'K' || name[0] == 'k') return clique(v);
        return wheel(v);
    }
    throw std::invalid_argument("unknown target '" + name + "'");
}

}  // namespace wsat
