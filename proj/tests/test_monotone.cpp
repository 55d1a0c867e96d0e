#include "drawkit/canonical_drawings.hpp"
#include "drawkit/monotone.hpp"
#include "drawkit/rotation.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace drawkit;

namespace {

PointSet pts(std::initializer_list<std::pair<long, long>> xy) {
    PointSet ps;
    for (auto [x, y] : xy) ps.push_back({Rational(x), Rational(y)});
    return ps;
}

bool separated(Edge e, Edge f) { return e.b < f.a || f.b < e.a; }

/// Random side matrix and random incident orders on n vertices.
XBoundedData random_xbounded(int n, std::mt19937_64& rng) {
    XBoundedData xb(n);
    std::uniform_int_distribution<int> coin(0, 1);
    for (const Edge& e : all_edges(n))
        for (Vertex v = e.a + 1; v < e.b; ++v) xb.set_passes(e, v, coin(rng) ? Side::Above : Side::Below);
    for (Vertex v = 1; v <= n; ++v) {
        auto& left = xb.left_order[static_cast<std::size_t>(v - 1)];
        auto& right = xb.right_order[static_cast<std::size_t>(v - 1)];
        for (Vertex u = 1; u < v; ++u) left.emplace_back(u, v);
        for (Vertex u = v + 1; u <= n; ++u) right.emplace_back(v, u);
        std::shuffle(left.begin(), left.end(), rng);
        std::shuffle(right.begin(), right.end(), rng);
    }
    return xb;
}

}  // namespace

TEST_CASE("crossing set of a wiring") {
    CHECK(crossing_set(convex(4).wiring) == CrossingSet(4, {{Edge(1, 3), Edge(2, 4)}}));
    const LinearWiring planar = wiring_from_points(pts({{0, 0}, {2, 5}, {3, 1}, {4, 0}}));
    CHECK(std::all_of(planar.strips.begin(), planar.strips.end(), [](const auto& s) { return s.empty(); }));
    CHECK(crossing_set(planar).empty());
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const XMonotoneSample s = random_x_monotone_sample(6, seed);
        if (s.points) CHECK(crossing_set(s.wiring) == segment_crossings(*s.points));
    }
}

TEST_CASE("induced wirings") {
    const LinearWiring c5 = convex(5).wiring;
    CHECK(induce(c5, {1, 2, 3, 4, 5}) == c5);
    CHECK(crossing_set(induce(c5, {1, 2, 3})).empty());
    CHECK(canonical_crossing_form(crossing_set(induce(convex(6).wiring, {1, 3, 4, 6}))) ==
          canonical_crossing_form(convex(4).crossings));
    CHECK_THROWS_AS(induce(c5, {2}), Error);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const LinearWiring lw = random_x_monotone(7, seed);
        const std::vector<Vertex> s{1, 3, 4, 6, 7};
        const LinearWiring sub = induce(lw, s);
        CHECK_NOTHROW(validate(sub));
        CHECK(crossing_set(sub) == crossing_set(lw).restricted(s));
    }
}

TEST_CASE("vertex sides") {
    // On y = x^2 the chord from 1 to 4 runs above the points at x = 2 and x = 3.
    const LinearWiring lw = convex(4).wiring;
    const auto sides = vertex_sides(lw, Edge(1, 4));
    REQUIRE(sides.size() == 2);
    CHECK(sides.at(2) == Side::Below);
    CHECK(sides.at(3) == Side::Below);
    CHECK(vertex_sides(lw, Edge(2, 3)).empty());

    const LinearWiring peak = wiring_from_points(pts({{1, 0}, {2, 10}, {3, 1}, {4, 2}}));
    CHECK(vertex_sides(peak, Edge(1, 3)).at(2) == Side::Above);
}

TEST_CASE("vertex-local order") {
    // Vertex 2 sits high above the chords from 1 to 3 and from 1 to 4.
    const XBoundedData xb = extract_xbounded(wiring_from_points(pts({{1, 0}, {2, 10}, {3, 1}, {4, 2}})));
    CHECK(xb.passes(Edge(1, 3), 2) == Side::Below);
    CHECK(xb.passes(Edge(1, 4), 2) == Side::Below);
    // slopes from vertex 2: -9 towards 3, -4 towards 4
    CHECK(partial_order_at(xb, 2, Edge(2, 3), Edge(2, 4)) == Order::Less);
    CHECK(partial_order_at(xb, 2, Edge(2, 4), Edge(2, 3)) == Order::Greater);
    CHECK(partial_order_at(xb, 2, Edge(1, 3), Edge(2, 4)) == Order::Less);
    CHECK(partial_order_at(xb, 2, Edge(2, 4), Edge(1, 3)) == Order::Greater);
    CHECK(partial_order_at(xb, 2, Edge(1, 3), Edge(1, 4)) == Order::Incomparable);
}

TEST_CASE("predicted crossings and the strip redraw") {
    const XBoundedData c4 = extract_xbounded(convex(4).wiring);
    CHECK(c4.passes(Edge(1, 3), 2) == Side::Above);
    CHECK(predicted_crossings(c4) == CrossingSet(4, {{Edge(1, 3), Edge(2, 4)}}));
    CHECK(crossing_set(to_x_monotone(c4)) == CrossingSet(4, {{Edge(1, 3), Edge(2, 4)}}));

    const XBoundedData planar = extract_xbounded(wiring_from_points(pts({{1, 0}, {2, 3}, {3, 1}, {4, 0}})));
    CHECK(predicted_crossings(planar).empty());
    CHECK(crossing_set(to_x_monotone(planar)).empty());

    // nested pair {1,4},{2,3}: same relative order at 2 and 3 means no crossing
    const XBoundedData nest = extract_xbounded(wiring_from_points(pts({{1, 0}, {2, 1}, {3, 3}, {4, 0}})));
    CHECK(partial_order_at(nest, 2, Edge(1, 4), Edge(2, 3)) == partial_order_at(nest, 3, Edge(1, 4), Edge(2, 3)));
    CHECK_FALSE(predicted_crossings(nest).contains(Edge(1, 4), Edge(2, 3)));
}

TEST_CASE("round trip through x-bounded data") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const LinearWiring lw = random_x_monotone(3 + static_cast<int>(seed % 7), seed);
        const XBoundedData xb = extract_xbounded(lw);
        const LinearWiring back = to_x_monotone(xb);
        CHECK(back.n == lw.n);
        CHECK(crossing_set(back) == crossing_set(lw));
        CHECK(predicted_crossings(xb) == crossing_set(lw));
        CHECK(extract_xbounded(back).left_order == xb.left_order);
        CHECK(extract_xbounded(back).right_order == xb.right_order);
    }
}

TEST_CASE("rejection-sampled x-bounded inputs") {
    std::mt19937_64 rng(7);
    int accepted = 0;
    for (int trial = 0; trial < 4000 && accepted < 40; ++trial) {
        const int n = 4 + trial % 3;
        const XBoundedData xb = random_xbounded(n, rng);
        LinearWiring lw;
        try {
            lw = to_x_monotone(xb);
        } catch (const Error& e) {
            CHECK(e.code() != Errc::InternalAssertion);
            continue;
        }
        ++accepted;
        const CrossingSet cs = crossing_set(lw);
        CHECK(cs == predicted_crossings(xb));
        CHECK_FALSE(cs.is_crossed(Edge(1, 2)));
        CHECK_FALSE(cs.is_crossed(Edge(n - 1, n)));
        for (const auto& [e, f] : cs.pairs()) CHECK_FALSE(separated(e, f));
        CHECK(lw.right_order == xb.right_order);
    }
    CHECK(accepted >= 10);
}

TEST_CASE("bubble realization uses exactly the inversions") {
    const std::vector<Edge> from{Edge(1, 2), Edge(1, 3), Edge(2, 3), Edge(1, 4)};
    const std::vector<Edge> to{Edge(1, 4), Edge(2, 3), Edge(1, 2), Edge(1, 3)};
    std::vector<int> swaps;
    bubble_realize(from, to, swaps);
    CHECK(swaps.size() == 5);
    auto cur = from;
    for (int k : swaps) std::swap(cur[static_cast<std::size_t>(k)], cur[static_cast<std::size_t>(k + 1)]);
    CHECK(cur == to);
}

TEST_CASE("malformed wirings are rejected") {
    LinearWiring lw = convex(4).wiring;
    lw.vertex_pos[1] += 5;
    CHECK_THROWS_AS(validate(lw), Error);
    XBoundedData xb = extract_xbounded(convex(4).wiring);
    xb.right_order[0].pop_back();
    CHECK_THROWS_AS(to_x_monotone(xb), Error);
}
