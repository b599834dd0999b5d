#include "wsat/families.hpp"

#include <stdexcept>

#include "wsat/detect.hpp"

namespace wsat {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw FamilyParamError(what);
}

// Attaches an adjacent pair whose endpoints both hang off `anchor`.
int attach_pair(GraphBuilder& b, int next_vertex, int anchor) {
    b.add_edge(next_vertex, next_vertex + 1);
    b.add_edge(next_vertex, anchor);
    b.add_edge(next_vertex + 1, anchor);
    return next_vertex + 2;
}

Graph delete_vertex(const Graph& g, int v) {
    return g.induced(g.vertex_mask() & ~bit(v));
}

}  // namespace

Family family_from_name(const std::string& name) {
    if (name == "f1") return Family::F1;
    if (name == "f2") return Family::F2;
    if (name == "f3") return Family::F3;
    if (name == "a1") return Family::A1;
    if (name == "a2") return Family::A2;
    if (name == "a3") return Family::A3;
    if (name == "b1") return Family::B1;
    if (name == "b2") return Family::B2;
    if (name == "b3") return Family::B3;
    if (name == "hstar") return Family::HStar;
    throw std::invalid_argument("unknown family '" + name + "'");
}

std::string family_name(Family family) {
    switch (family) {
        case Family::F1: return "f1";
        case Family::F2: return "f2";
        case Family::F3: return "f3";
        case Family::A1: return "a1";
        case Family::A2: return "a2";
        case Family::A3: return "a3";
        case Family::B1: return "b1";
        case Family::B2: return "b2";
        case Family::B3: return "b3";
        case Family::HStar: return "hstar";
    }
    return "?";
}

Graph h_star() {
    // K5 minus the two edges at vertex 0 towards 1 and 2.
    GraphBuilder b(5);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v)
            if (!(u == 0 && (v == 1 || v == 2))) b.add_edge(u, v);
    return b.finish();
}

Graph build_f1(int n, const std::array<int, 3>& pairs) {
    require(n >= 6 && n % 2 == 0, "f1 needs even n >= 6");
    require(pairs[0] >= 0 && pairs[1] >= 0 && pairs[2] >= 0,
            "f1 pair counts must be >= 0");
    require(pairs[0] + pairs[1] + pairs[2] == (n - 6) / 2,
            "f1 pair counts must sum to (n-6)/2");
    GraphBuilder b(n);
    b.edge(0, 1).edge(1, 2).edge(0, 2);  // central triangle
    b.edge(0, 3).edge(1, 4).edge(2, 5);  // one pendant per triangle vertex
    int next = 6;
    for (int anchor = 0; anchor < 3; ++anchor)
        for (int k = 0; k < pairs[anchor]; ++k) next = attach_pair(b, next, anchor);
    const Graph& g = b.finish();
    // Both pair endpoints hang off the same anchor precisely so no 4-cycle
    // appears; trip hard if that ever breaks.
    if (contains_c4(g)) throw std::logic_error("f1 construction is not C4-free");
    return g;
}

Graph build_f2(int n, const std::array<int, 3>& pairs, int delete_anchor) {
    require(n >= 5 && n % 2 == 1, "f2 needs odd n >= 5");
    require(delete_anchor >= 0 && delete_anchor < 3,
            "f2 pendant choice must be 0, 1 or 2");
    Graph f1 = build_f1(n + 1, pairs);
    return delete_vertex(f1, 3 + delete_anchor);
}

Graph build_f3(int n, const std::array<int, 2>& pairs) {
    require(n >= 5 && n % 2 == 1, "f3 needs odd n >= 5");
    require(pairs[0] >= 0 && pairs[1] >= 0, "f3 pair counts must be >= 0");
    require(pairs[0] + pairs[1] == (n - 5) / 2,
            "f3 pair counts must sum to (n-5)/2");
    GraphBuilder b(n);
    for (int i = 0; i < 5; ++i) b.add_edge(i, (i + 1) % 5);
    int next = 5;
    for (int anchor = 0; anchor < 2; ++anchor)  // two consecutive C5 vertices
        for (int k = 0; k < pairs[anchor]; ++k) next = attach_pair(b, next, anchor);
    const Graph& g = b.finish();
    if (contains_c4(g)) throw std::logic_error("f3 construction is not C4-free");
    return g;
}

Graph build_a1(int n, const std::array<int, 3>& pairs) {
    require(n >= 7 && n % 2 == 1, "a1 needs odd n >= 7");
    return build_f1(n - 1, pairs).join_universal();
}

Graph build_a2(int n, const std::array<int, 3>& pairs, int delete_anchor) {
    require(n >= 6 && n % 2 == 0, "a2 needs even n >= 6");
    return build_f2(n - 1, pairs, delete_anchor).join_universal();
}

Graph build_a3(int n, const std::array<int, 2>& pairs) {
    require(n >= 6 && n % 2 == 0, "a3 needs even n >= 6");
    return build_f3(n - 1, pairs).join_universal();
}

namespace {

// Matching anchored at two hub vertices: every matched vertex is adjacent to
// both hubs, the set itself induces a perfect matching.
int attach_matching(GraphBuilder& b, int next_vertex, int count, int hub1,
                    int hub2) {
    for (int k = 0; k < count / 2; ++k) {
        b.add_edge(next_vertex, next_vertex + 1);
        for (int v = next_vertex; v <= next_vertex + 1; ++v) {
            b.add_edge(v, hub1);
            b.add_edge(v, hub2);
        }
        next_vertex += 2;
    }
    return next_vertex;
}

}  // namespace

Graph build_b1(int n, int a, int b, int c) {
    require(n >= 7 && n % 2 == 1, "b1 needs odd n >= 7");
    require(a >= 0 && b >= 0 && c >= 0 && a % 2 == 0 && b % 2 == 0 && c % 2 == 0,
            "b1 set sizes must be even and >= 0");
    require(a + b + c == n - 7, "b1 set sizes must sum to n-7");
    // Layout: x=0 y=1 z=2 x1=3 x2=4 u1=5 u2=6, then U1^1, U1^2, U2.
    GraphBuilder g(n);
    g.edge(3, 4).edge(3, 5).edge(3, 6).edge(4, 5).edge(4, 6).edge(5, 6);
    g.edge(0, 3).edge(0, 4);  // x
    g.edge(1, 3).edge(1, 5);  // y
    g.edge(2, 4).edge(2, 5);  // z
    int next = 7;
    next = attach_matching(g, next, a, 3, 5);  // U1^1 at x1,u1
    next = attach_matching(g, next, b, 4, 5);  // U1^2 at x2,u1
    next = attach_matching(g, next, c, 3, 4);  // U2 at x1,x2
    return g.finish();
}

Graph build_b2(int n, int a, int b, int c) {
    require(n >= 8 && n % 2 == 0, "b2 needs even n >= 8");
    require(b >= 2, "b2 needs U1^2 nonempty in the parent b1 graph");
    Graph parent = build_b1(n + 1, a, b, c);
    return delete_vertex(parent, 2);  // z
}

Graph build_b3(int n, int a, int b) {
    require(n >= 8 && n % 2 == 0, "b3 needs even n >= 8");
    require(a >= 0 && b >= 0 && a % 2 == 0 && b % 2 == 0,
            "b3 set sizes must be even and >= 0");
    require(a + b == n - 8, "b3 set sizes must sum to n-8");
    // Layout: x=0 y=1 v1=2 v2=3 x1=4 x2=5 u1=6 u2=7, then U1, U2.
    GraphBuilder g(n);
    g.edge(4, 5).edge(4, 6).edge(4, 7).edge(5, 6).edge(5, 7).edge(6, 7);
    g.edge(0, 4).edge(0, 5);            // x
    g.edge(1, 4).edge(1, 6);            // y
    g.edge(2, 4).edge(2, 3).edge(2, 7);  // v1: x1, v2, u2
    g.edge(3, 5).edge(3, 6);            // v2: x2, u1 (v1 edge above)
    int next = 8;
    next = attach_matching(g, next, a, 4, 6);  // U1 at x1,u1
    next = attach_matching(g, next, b, 4, 5);  // U2 at x1,x2
    return g.finish();
}

namespace {

void insert_canonical(std::map<std::string, Graph>& out, const Graph& g) {
    CanonicalForm cf = canonical_form(g);
    out.emplace(std::move(cf.key), std::move(cf.graph));
}

template <typename Fn>
void for_triples(int total, Fn&& fn) {
    for (int k1 = 0; k1 <= total; ++k1)
        for (int k2 = 0; k1 + k2 <= total; ++k2)
            fn(std::array<int, 3>{k1, k2, total - k1 - k2});
}

template <typename Fn>
void for_even_triples(int total, Fn&& fn) {
    if (total % 2 != 0) return;
    for (int a = 0; a <= total; a += 2)
        for (int b = 0; a + b <= total; b += 2) fn(a, b, total - a - b);
}

}  // namespace

std::map<std::string, Graph> enumerate_family(Family family, int n) {
    std::map<std::string, Graph> out;
    switch (family) {
        case Family::HStar:
            if (n == 5) insert_canonical(out, h_star());
            break;
        case Family::F1:
            if (n >= 6 && n % 2 == 0)
                for_triples((n - 6) / 2, [&](const std::array<int, 3>& t) {
                    insert_canonical(out, build_f1(n, t));
                });
            break;
        case Family::F2:
            if (n >= 5 && n % 2 == 1)
                for_triples((n - 5) / 2, [&](const std::array<int, 3>& t) {
                    for (int anchor = 0; anchor < 3; ++anchor)
                        insert_canonical(out, build_f2(n, t, anchor));
                });
            break;
        case Family::F3:
            if (n >= 5 && n % 2 == 1)
                for (int k1 = 0; k1 <= (n - 5) / 2; ++k1)
                    insert_canonical(out, build_f3(n, {k1, (n - 5) / 2 - k1}));
            break;
        case Family::A1:
            if (n >= 7 && n % 2 == 1)
                for_triples((n - 7) / 2, [&](const std::array<int, 3>& t) {
                    insert_canonical(out, build_a1(n, t));
                });
            break;
        case Family::A2:
            if (n >= 6 && n % 2 == 0)
                for_triples((n - 6) / 2, [&](const std::array<int, 3>& t) {
                    for (int anchor = 0; anchor < 3; ++anchor)
                        insert_canonical(out, build_a2(n, t, anchor));
                });
            break;
        case Family::A3:
            if (n >= 6 && n % 2 == 0)
                for (int k1 = 0; k1 <= (n - 6) / 2; ++k1)
                    insert_canonical(out, build_a3(n, {k1, (n - 6) / 2 - k1}));
            break;
        case Family::B1:
            if (n >= 7 && n % 2 == 1)
                for_even_triples(n - 7, [&](int a, int b, int c) {
                    insert_canonical(out, build_b1(n, a, b, c));
                });
            break;
        case Family::B2:
            if (n >= 8 && n % 2 == 0)
                for_even_triples(n - 6, [&](int a, int b, int c) {
                    if (b >= 2) insert_canonical(out, build_b2(n, a, b, c));
                });
            break;
        case Family::B3:
            if (n >= 8 && n % 2 == 0)
                for (int a = 0; a <= n - 8; a += 2)
                    insert_canonical(out, build_b3(n, a, n - 8 - a));
            break;
    }
    return out;
}

std::map<std::string, Graph> theorem_rhs(int n) {
    if (n < 6)
        throw std::out_of_range("theorem_rhs needs n >= 6 (n=5 is the h_star case)");
    std::map<std::string, Graph> out;
    auto merge = [&](Family family) {
        for (auto& [key, g] : enumerate_family(family, n)) out.emplace(key, g);
    };
    if (n % 2 == 1) {
        merge(Family::A1);
        merge(Family::B1);
    } else {
        merge(Family::A2);
        merge(Family::A3);
        merge(Family::B2);
        merge(Family::B3);
    }
    return out;
}

}  // namespace wsat
