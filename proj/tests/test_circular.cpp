#include "drawkit/canonical_drawings.hpp"
#include "drawkit/circular.hpp"
#include "drawkit/cylindrical.hpp"
#include "drawkit/hampath.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace drawkit;

namespace {

Rational q(long p, long d) { return make_rational(p, d); }

CircularEvent vertex_event(Vertex v, const Rational& angle, int pos, std::vector<Edge> ending,
                           std::vector<Edge> starting) {
    CircularEvent ev;
    ev.kind = CircularEvent::Kind::Vertex;
    ev.v = v;
    ev.angle = angle;
    ev.pos = pos;
    ev.ending = std::move(ending);
    ev.starting = std::move(starting);
    return ev;
}

/// One edge between angles 1/10 and 3/10, drawn the short or the long way round.
CircularWiring single_edge(bool short_way) {
    CircularWiring cw;
    cw.n = 2;
    cw.angle = {q(1, 10), q(3, 10)};
    if (short_way) {
        cw.events = {vertex_event(1, q(1, 10), 0, {}, {Edge(1, 2)}), vertex_event(2, q(3, 10), 0, {Edge(1, 2)}, {})};
    } else {
        cw.base_order = {Edge(1, 2)};
        cw.events = {vertex_event(1, q(1, 10), 0, {Edge(1, 2)}, {}), vertex_event(2, q(3, 10), 0, {}, {Edge(1, 2)})};
    }
    return cw;
}

/// Four vertices on one circle, every edge counter-clockwise from its smaller vertex.
CylindricalDrawing square() {
    CylindricalDrawing cd;
    cd.n = 4;
    for (int k = 0; k < 4; ++k) cd.outer.push_back({k + 1, q(k, 4)});
    for (const Edge& e : all_edges(4)) cd.circle.push_back({e.a, e.b, Face::Home, ArcDir::Ccw});
    return cd;
}

/// Lateral edges {1,3} and {2,4} both turn 9/10 counter-clockwise, so their wedges cover the circle.
CylindricalDrawing double_spiral() {
    CylindricalDrawing cd;
    cd.n = 4;
    cd.outer = {{1, q(0, 1)}, {2, q(1, 2)}};
    cd.inner = {{3, q(9, 10)}, {4, q(2, 5)}};
    cd.lateral = {{1, 3, q(9, 10)}, {1, 4, q(2, 5)}, {2, 3, q(2, 5)}, {2, 4, q(9, 10)}};
    cd.circle = {{1, 2, Face::Home, ArcDir::Ccw}, {3, 4, Face::Home, ArcDir::Ccw}};
    return cd;
}

std::vector<Vertex> by_angle(const CircularWiring& cw) {
    std::vector<Vertex> order(static_cast<std::size_t>(cw.n));
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(),
              [&](Vertex x, Vertex y) { return cw.angle[static_cast<std::size_t>(x - 1)] < cw.angle[static_cast<std::size_t>(y - 1)]; });
    return order;
}

}  // namespace

TEST_CASE("arcs") {
    const Arc a = make_arc(q(1, 10), q(3, 10));
    CHECK(a == Arc{q(1, 10), q(1, 5)});
    CHECK(make_arc(q(3, 10), q(1, 10)) == Arc{q(3, 10), q(4, 5)});
    CHECK(a.contains(q(1, 10)));
    CHECK(a.contains(q(3, 10)));
    CHECK_FALSE(a.contains(q(1, 2)));
    // closed half turns that meet at both ends cover the circle
    CHECK(arcs_cover(Arc{q(0, 1), q(1, 2)}, Arc{q(1, 2), q(1, 2)}));
    CHECK_FALSE(arcs_cover(Arc{q(0, 1), q(1, 2)}, Arc{q(1, 4), q(1, 2)}));
    CHECK(arcs_cover(Arc{q(0, 1), q(9, 10)}, Arc{q(1, 2), q(9, 10)}));
    CHECK(arcs_cover(std::vector<Arc>{Arc{q(0, 1), q(1, 3)}, Arc{q(1, 3), q(1, 3)}, Arc{q(2, 3), q(1, 3)}}));
    CHECK_FALSE(arcs_cover(std::vector<Arc>{Arc{q(0, 1), q(1, 3)}, Arc{q(1, 3), q(1, 4)}, Arc{q(2, 3), q(1, 3)}}));
}

TEST_CASE("wedges of a single edge") {
    const CircularWiring s = single_edge(true);
    CHECK_NOTHROW(validate(s));
    CHECK(wedge(s, Edge(1, 2)) == Arc{q(1, 10), q(1, 5)});
    const CircularWiring l = single_edge(false);
    CHECK_NOTHROW(validate(l));
    CHECK(wedge(l, Edge(1, 2)) == Arc{q(3, 10), q(4, 5)});
    CHECK(crossing_set(s).empty());
}

TEST_CASE("realized wirings carry the cylindrical crossings") {
    CylindricalDrawing tri;
    tri.n = 3;
    tri.outer = {{1, q(0, 1)}, {2, q(1, 2)}};
    tri.inner = {{3, q(1, 4)}};
    tri.lateral = {{1, 3, q(1, 4)}, {2, 3, q(-1, 4)}};
    tri.circle = {{1, 2, Face::Home, ArcDir::Ccw}};
    const CircularWiring cw = to_circular_wiring(tri);
    CHECK(crossing_set(cw).empty());
    CHECK(std::none_of(cw.events.begin(), cw.events.end(),
                       [](const CircularEvent& ev) { return ev.kind == CircularEvent::Kind::Swap; }));

    const CylindricalDrawing h6 = hill(6);
    const CircularWiring w6 = to_circular_wiring(h6);
    CHECK(crossing_set(w6) == crossing_set(h6));
    for (const Edge& e : all_edges(6)) CHECK(wedge(w6, e).length < 1);
}

TEST_CASE("strong c-monotonicity") {
    const CircularWiring below = to_circular_wiring(square());
    CHECK(is_strongly_c_monotone(below));
    const CircularWiring spiral = to_circular_wiring(double_spiral());
    CHECK(crossing_set(spiral).empty());
    CHECK(arcs_cover(wedge(spiral, Edge(1, 3)), wedge(spiral, Edge(2, 4))));
    CHECK_FALSE(is_strongly_c_monotone(spiral));
    const auto rep = strong_c_monotone_report(spiral);
    CHECK_FALSE(rep.no_covering_pair);
    CHECK_FALSE(rep.no_covering_star);

    // the three formulations agree
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const CircularWiring cw = to_circular_wiring(normalize_winding(random_cylindrical(6, seed, seed % 3 == 0)));
        const auto r = strong_c_monotone_report(cw);
        CHECK(r.no_covering_pair == r.no_covering_star);
        CHECK(r.no_covering_incident_pair == r.no_covering_star);
    }
}

TEST_CASE("gap edges") {
    const CircularWiring w = to_strongly_c_monotone(hill(6));
    const auto gaps = gap_edges(w);
    CHECK(gaps.size() == 6);
    CHECK(std::all_of(gaps.begin(), gaps.end(), [](const GapEdge& g) { return g.contained_in_gap; }));
    const auto order = by_angle(w);
    CHECK(is_crossing_free(crossing_set(w), order, true));

    // an escaping gap edge lets the circle be opened inside its gap
    int escaping = 0;
    for (std::uint64_t seed = 0; seed < 120 && escaping < 5; ++seed) {
        const CircularWiring cw = to_strongly_c_monotone(random_cylindrical(6, seed, true));
        const auto g = gap_edges(cw);
        const auto ord = by_angle(cw);
        for (std::size_t k = 0; k < g.size(); ++k) {
            if (g[k].contained_in_gap) continue;
            ++escaping;
            const Rational lo = cw.angle[static_cast<std::size_t>(ord[k] - 1)];
            const Rational hi = k + 1 < ord.size() ? cw.angle[static_cast<std::size_t>(ord[k + 1] - 1)] : Rational(1);
            const LinearCut cut = cut_to_linear(cw, (lo + hi) / 2);
            std::vector<Vertex> perm(ord.size());
            for (std::size_t i = 0; i < cut.original_of.size(); ++i)
                perm[static_cast<std::size_t>(cut.original_of[i] - 1)] = static_cast<Vertex>(i + 1);
            CHECK(crossing_set(cut.wiring) == crossing_set(cw).relabeled(perm));
        }
    }
    CHECK(escaping > 0);
}

TEST_CASE("cutting the circle open") {
    const CircularWiring cw = to_strongly_c_monotone(hill(7));
    const auto ord = by_angle(cw);
    for (const Edge& e : all_edges(7)) {
        const Arc w = wedge(cw, e);
        CHECK_THROWS_AS(cut_to_linear(cw, frac(w.start + w.length / 2)), Error);
    }
    CHECK_THROWS_AS(cut_to_linear(cw, cw.angle[0]), Error);

    // origin far below: every wedge avoids the downward ray
    const CircularWiring far = to_circular_wiring(square());
    const auto o = by_angle(far);
    const Rational last = far.angle[static_cast<std::size_t>(o.back() - 1)];
    const LinearCut cut = cut_to_linear(far, (last + 1) / 2);
    CHECK(canonical_crossing_form(crossing_set(cut.wiring)) == canonical_crossing_form(convex(4).crossings));
}

TEST_CASE("induced circular wirings") {
    const CircularWiring cw = to_circular_wiring(hill(7));
    CHECK(induce(cw, {1, 2, 3, 4, 5, 6, 7}) == cw);
    CHECK(crossing_set(induce(cw, {2, 5, 7})).empty());
    CHECK_THROWS_AS(induce(cw, {3}), Error);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const CircularWiring w = to_circular_wiring(normalize_winding(random_cylindrical(7, seed, false)));
        const std::vector<Vertex> s{1, 2, 4, 6, 7};
        const CircularWiring sub = induce(w, s);
        CHECK_NOTHROW(validate(sub));
        CHECK(crossing_set(sub) == crossing_set(w).restricted(s));
    }
}
