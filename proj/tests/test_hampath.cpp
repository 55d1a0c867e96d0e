#include "drawkit/canonical_drawings.hpp"
#include "drawkit/hampath.hpp"
#include "drawkit/oracle.hpp"
#include "drawkit/rotation.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>

using namespace drawkit;
using testsupport::all_cf_paths;
using testsupport::valid_ham_path;

namespace {

Rational q(long p, long d) { return make_rational(p, d); }

bool on_circle(const std::vector<CylVertex>& ring, Vertex v) {
    return std::any_of(ring.begin(), ring.end(), [&](const CylVertex& cv) { return cv.v == v; });
}

/// Hamiltonian paths of K_n using only edges between labels at distance one or two.
void short_span_paths(int n, std::vector<Vertex>& cur, std::vector<bool>& used,
                      const std::function<void(const std::vector<Vertex>&)>& emit) {
    if (static_cast<int>(cur.size()) == n) {
        emit(cur);
        return;
    }
    const Vertex last = cur.back();
    for (Vertex v = std::max(1, last - 2); v <= std::min(n, last + 2); ++v) {
        if (used[static_cast<std::size_t>(v)]) continue;
        used[static_cast<std::size_t>(v)] = true;
        cur.push_back(v);
        short_span_paths(n, cur, used, emit);
        cur.pop_back();
        used[static_cast<std::size_t>(v)] = false;
    }
}

}  // namespace

TEST_CASE("crossing-free checks") {
    const CrossingSet c4 = convex(4).crossings;
    const CrossingSet t4 = twisted(4);
    CHECK(is_crossing_free(c4, {1, 2, 3, 4}));
    CHECK(is_crossing_free(c4, {2, 1, 3, 4}));
    CHECK_FALSE(is_crossing_free(t4, {1, 4, 2, 3}));
    CHECK_FALSE(is_crossing_free(c4, {1, 2, 4, 3}, true));
    CHECK(is_crossing_free(c4, {1, 2, 3, 4}, true));
    CHECK(path_edges({3, 1, 2}, true) == std::vector<Edge>{Edge(1, 3), Edge(1, 2), Edge(2, 3)});
    CHECK(is_hamiltonian(4, {2, 4, 1, 3}));
    CHECK_FALSE(is_hamiltonian(4, {2, 4, 1, 1}));
    CHECK_THROWS_AS(check_ham_path(t4, {1, 4, 2, 3}, 1, 3, "test"), Error);
}

TEST_CASE("x-monotone paths") {
    CHECK(path_x_monotone(convex(5).wiring, 1, 5) == VertexPath{1, 2, 3, 4, 5});
    const CrossingSet c4 = convex(4).crossings;
    const VertexPath p = path_x_monotone(convex(4).wiring, 2, 3);
    CHECK(valid_ham_path(c4, p, 2, 3));
    CHECK(find_cf_ham_path(c4, 2, 3).has_value());
    const LinearWiring tri = convex(3).wiring;
    CHECK(path_x_monotone(tri, 1, 3) == VertexPath{1, 2, 3});
    CHECK(path_x_monotone(tri, 2, 1) == VertexPath{2, 3, 1});
    CHECK_THROWS_AS(path_x_monotone(tri, 2, 2), Error);
    CHECK_THROWS_AS(path_x_monotone(tri, 1, 4), Error);

    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const int n = 4 + static_cast<int>(seed % 5);
        const LinearWiring lw = random_x_monotone(n, seed);
        const CrossingSet cs = crossing_set(lw);
        for (Vertex a = 1; a <= n; ++a)
            for (Vertex b = 1; b <= n; ++b)
                if (a != b) CHECK(valid_ham_path(cs, path_x_monotone(lw, a, b), a, b));
    }
}

TEST_CASE("strongly c-monotone paths") {
    const CircularWiring w8 = to_strongly_c_monotone(hill(8));
    const CrossingSet cs8 = crossing_set(w8);
    std::vector<Vertex> ord(8);
    std::iota(ord.begin(), ord.end(), 1);
    std::sort(ord.begin(), ord.end(), [&](Vertex x, Vertex y) {
        return w8.angle[static_cast<std::size_t>(x - 1)] < w8.angle[static_cast<std::size_t>(y - 1)];
    });
    std::vector<Edge> gaps;
    for (std::size_t i = 0; i < 8; ++i) gaps.emplace_back(ord[i], ord[(i + 1) % 8]);
    for (Vertex a = 1; a <= 8; ++a)
        for (Vertex b = 1; b <= 8; ++b) {
            if (a == b) continue;
            const VertexPath p = path_strong_c_mon(w8, a, b);
            CHECK(valid_ham_path(cs8, p, a, b));
            CHECK(find_cf_ham_path(cs8, a, b).has_value());
            if (std::find(gaps.begin(), gaps.end(), Edge(a, b)) != gaps.end())
                for (const Edge& e : path_edges(p)) CHECK(std::find(gaps.begin(), gaps.end(), e) != gaps.end());
        }

    CylindricalDrawing tri;
    tri.n = 3;
    tri.outer = {{1, q(0, 1)}, {2, q(1, 2)}};
    tri.inner = {{3, q(1, 4)}};
    tri.lateral = {{1, 3, q(1, 4)}, {2, 3, q(-1, 4)}};
    tri.circle = {{1, 2, Face::Home, ArcDir::Ccw}};
    CHECK(path_strong_c_mon(to_circular_wiring(tri), 1, 2) == VertexPath{1, 3, 2});

    // two lateral edges whose wedges cover the circle
    CylindricalDrawing sp;
    sp.n = 4;
    sp.outer = {{1, q(0, 1)}, {2, q(1, 2)}};
    sp.inner = {{3, q(9, 10)}, {4, q(2, 5)}};
    sp.lateral = {{1, 3, q(9, 10)}, {1, 4, q(2, 5)}, {2, 3, q(2, 5)}, {2, 4, q(9, 10)}};
    sp.circle = {{1, 2, Face::Home, ArcDir::Ccw}, {3, 4, Face::Home, ArcDir::Ccw}};
    CHECK_THROWS_AS(path_strong_c_mon(to_circular_wiring(sp), 1, 3), Error);
}

TEST_CASE("cylindrical paths") {
    const CylindricalDrawing h9 = hill(9);
    const CrossingSet cs = crossing_set(h9);
    CHECK(valid_ham_path(cs, path_cylindrical(h9, 1, 6), 1, 6));
    const VertexPath both_outer = path_cylindrical(h9, 1, 3);
    CHECK(valid_ham_path(cs, both_outer, 1, 3));
    int switches = 0;
    for (const Edge& e : path_edges(both_outer)) switches += on_circle(h9.outer, e.a) != on_circle(h9.outer, e.b);
    CHECK(switches == 2);
    for (Vertex a = 1; a <= 9; ++a)
        for (Vertex b = 1; b <= 9; ++b)
            if (a != b) CHECK(valid_ham_path(cs, path_cylindrical(h9, a, b), a, b));

    // all vertices on one circle
    CylindricalDrawing ring;
    ring.n = 6;
    for (int k = 0; k < 6; ++k) ring.outer.push_back({k + 1, q(k, 6)});
    for (const Edge& e : all_edges(6)) ring.circle.push_back({e.a, e.b, Face::Home, ArcDir::Ccw});
    const CrossingSet rc = crossing_set(ring);
    CHECK(rc.size() == 15);
    for (Vertex a = 1; a <= 6; ++a)
        for (Vertex b = a + 1; b <= 6; ++b) CHECK(valid_ham_path(rc, path_cylindrical(ring, a, b), a, b));

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const CylindricalDrawing cd = random_cylindrical(7, seed, seed % 2 == 1);
        const CrossingSet c = crossing_set(cd);
        for (Vertex a = 1; a <= 7; ++a)
            for (Vertex b = 1; b <= 7; ++b)
                if (a != b) CHECK(valid_ham_path(c, path_cylindrical(cd, a, b), a, b));
    }
}

TEST_CASE("twisted paths") {
    CHECK(path_twisted(5, 1, 5) == VertexPath{1, 2, 3, 4, 5});
    CHECK(path_twisted(5, 2, 4) == VertexPath{2, 1, 3, 5, 4});
    CHECK(path_twisted(4, 2, 3) == VertexPath{2, 1, 4, 3});
    // both orders of the interior vertices need a jump of three
    for (const VertexPath& p : {VertexPath{2, 1, 4, 3}, VertexPath{2, 4, 1, 3}}) {
        const auto es = path_edges(p);
        CHECK(std::any_of(es.begin(), es.end(), [](const Edge& e) { return e.b - e.a > 2; }));
    }
    for (int n = 2; n <= 10; ++n) {
        const CrossingSet tw = n >= 3 ? twisted(n) : CrossingSet(2);
        for (Vertex a = 1; a <= n; ++a)
            for (Vertex b = 1; b <= n; ++b)
                if (a != b) CHECK(valid_ham_path(tw, path_twisted(n, a, b), a, b));
    }
}

TEST_CASE("span-two paths never cross in the twisted drawing") {
    for (int n = 3; n <= 10; ++n) {
        const CrossingSet tw = twisted(n);
        long count = 0;
        for (Vertex s = 1; s <= n; ++s) {
            std::vector<Vertex> cur{s};
            std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
            used[static_cast<std::size_t>(s)] = true;
            short_span_paths(n, cur, used, [&](const std::vector<Vertex>& p) {
                ++count;
                CHECK(is_crossing_free(tw, p));
            });
        }
        CHECK(count > 0);
    }
}

TEST_CASE("cycles through an uncrossed edge") {
    const ModelledCrossings c5 = convex(5);
    const auto xm = [&](Vertex a, Vertex b) { return path_x_monotone(c5.wiring, a, b); };
    const VertexPath cyc = cycle_via_uncrossed(c5.crossings, Edge(1, 2), xm);
    CHECK(cyc.size() == 5);
    CHECK(is_hamiltonian(5, cyc));
    CHECK(testsupport::plain_crossing_free(c5.crossings, cyc, true));
    CHECK_THROWS_AS(cycle_via_uncrossed(c5.crossings, Edge(1, 3), xm), Error);

    const CylindricalDrawing h9 = hill(9);
    const CrossingSet cs9 = crossing_set(h9);
    for (const Edge& rim : uncrossed_rim_edges(h9).inner.uncrossed) {
        const VertexPath c = cycle_via_uncrossed(cs9, rim, [&](Vertex a, Vertex b) { return path_cylindrical(h9, a, b); });
        CHECK(is_hamiltonian(9, c));
        CHECK(testsupport::plain_crossing_free(cs9, c, true));
    }

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const LinearWiring lw = random_x_monotone(8, seed);
        const CrossingSet cs = crossing_set(lw);
        const VertexPath c = cycle_via_uncrossed(cs, Edge(1, 2), [&](Vertex a, Vertex b) { return path_x_monotone(lw, a, b); });
        CHECK(testsupport::plain_crossing_free(cs, c, true));
    }
}

TEST_CASE("apex duplication") {
    const CrossingSet k4 = duplicate_apex(CrossingSet(3), {1, 2});
    CHECK(k4 == CrossingSet(4, {{Edge(1, 4), Edge(2, 3)}}));
    CHECK_THROWS_AS(duplicate_apex(CrossingSet(3), {1, 1}), Error);
    CHECK_THROWS_AS(duplicate_apex(CrossingSet(3), {1}), Error);

    const auto check_contraction = [](const CrossingSet& cs, const std::vector<Vertex>& rot) {
        const int n = cs.n();
        const CrossingSet dup = duplicate_apex(cs, rot);
        CHECK(dup.n() == n + 1);
        CHECK_FALSE(dup.is_crossed(Edge(n, n + 1)));
        CHECK(dup.restricted([&] {
            std::vector<Vertex> s(static_cast<std::size_t>(n));
            std::iota(s.begin(), s.end(), 1);
            return s;
        }()) == cs);
        const auto paths = all_cf_paths(dup, n, n + 1);
        CHECK_FALSE(paths.empty());
        for (const auto& p : paths) {
            const std::vector<Vertex> cycle(p.begin(), p.end() - 1);
            CHECK(testsupport::plain_crossing_free(cs, cycle, true));
        }
    };

    const auto rs4 = from_points(parabola_points(4)).first;
    check_contraction(convex(4).crossings, rs4.rotation(4));
    for (int n : {4, 5})
        for (const auto& c : enumerate_realizable(n)) check_contraction(c.canonical, c.rotation.rotation(n));
}
