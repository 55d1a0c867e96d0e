#include "drawkit/canonical_drawings.hpp"
#include "drawkit/cylindrical.hpp"
#include "drawkit/rotation.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

using namespace drawkit;
using testsupport::binom;
using testsupport::linked;
using testsupport::nested;
using testsupport::pairs_by_rule;

namespace {

PointSet pts(std::initializer_list<std::pair<long, long>> xy) {
    PointSet ps;
    for (auto [x, y] : xy) ps.push_back({Rational(x), Rational(y)});
    return ps;
}

struct P2 {
    double x, y;
};

double cross2(P2 o, P2 a, P2 b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

bool seg_cross(P2 p, P2 q, P2 r, P2 s) {
    const double d1 = cross2(p, q, r), d2 = cross2(p, q, s), d3 = cross2(r, s, p), d4 = cross2(r, s, q);
    return d1 * d2 < 0 && d3 * d4 < 0;
}

/**
 * Floating-point crossing count for a geodesic cylindrical drawing. Circle
 * edges are chords of unit disks; a lateral edge is the curve
 * t -> angle(u) + omega * t, sampled at `steps` heights. Two lateral curves
 * meet only at equal height, so a crossing shows up as a sign change of their
 * wrapped angular difference away from the half-turn branch cut.
 */
std::set<EdgePair> sampled_crossings(const CylindricalDrawing& cd, int steps) {
    std::set<EdgePair> out;
    for (const auto* ring : {&cd.outer, &cd.inner}) {
        std::vector<std::pair<Edge, std::pair<P2, P2>>> chords;
        auto at = [&](Vertex v) {
            for (const auto& cv : *ring)
                if (cv.v == v) {
                    const double t = 2 * std::numbers::pi * to_double(cv.angle);
                    return P2{std::cos(t), std::sin(t)};
                }
            return P2{0, 0};
        };
        for (const auto& ce : cd.circle) {
            const bool mine = std::any_of(ring->begin(), ring->end(), [&](const CylVertex& cv) { return cv.v == ce.u; });
            if (mine) chords.push_back({Edge(ce.u, ce.v), {at(ce.u), at(ce.v)}});
        }
        for (std::size_t i = 0; i < chords.size(); ++i)
            for (std::size_t j = i + 1; j < chords.size(); ++j)
                if (seg_cross(chords[i].second.first, chords[i].second.second, chords[j].second.first,
                              chords[j].second.second))
                    out.insert(make_edge_pair(chords[i].first, chords[j].first));
    }
    auto theta = [&](Vertex u) {
        for (const auto& cv : cd.outer)
            if (cv.v == u) return to_double(cv.angle);
        return 0.0;
    };
    for (std::size_t i = 0; i < cd.lateral.size(); ++i)
        for (std::size_t j = i + 1; j < cd.lateral.size(); ++j) {
            const auto& e = cd.lateral[i];
            const auto& f = cd.lateral[j];
            if (e.u == f.u || e.w == f.w) continue;
            const double te = theta(e.u), we = to_double(e.omega), tf = theta(f.u), wf = to_double(f.omega);
            auto diff = [&](double t) {
                double d = (tf + wf * t) - (te + we * t);
                d -= std::floor(d);
                return d > 0.5 ? d - 1 : d;  // in (-1/2, 1/2]
            };
            int hits = 0;
            double prev = diff(0);
            for (int k = 1; k <= steps; ++k) {
                const double cur = diff(static_cast<double>(k) / steps);
                if ((prev < 0) != (cur < 0) && std::abs(prev - cur) < 0.5) ++hits;
                prev = cur;
            }
            if (hits > 0) out.insert(make_edge_pair(Edge(e.u, e.w), Edge(f.u, f.w)));
            CHECK(hits <= 1);
        }
    return out;
}

// Harary-Hill value
long z_value(int n) { return (n / 2) * ((n - 1) / 2) * ((n - 2) / 2) * ((n - 3) / 2) / 4; }

}  // namespace

TEST_CASE("convex and twisted") {
    CHECK(convex(3).crossings.empty());
    CHECK(convex(4).crossings == CrossingSet(4, {{Edge(1, 3), Edge(2, 4)}}));
    CHECK(convex(5).crossings.size() == 5);
    CHECK(twisted(4) == CrossingSet(4, {{Edge(1, 4), Edge(2, 3)}}));
    CHECK(twisted(5) == CrossingSet(5, {{Edge(1, 4), Edge(2, 3)},
                                        {Edge(1, 5), Edge(2, 3)},
                                        {Edge(1, 5), Edge(2, 4)},
                                        {Edge(1, 5), Edge(3, 4)},
                                        {Edge(2, 5), Edge(3, 4)}}));
    CHECK(twisted(6).size() == 15);
    for (int n = 3; n <= 10; ++n) {
        CHECK(convex(n).crossings == pairs_by_rule(n, linked));
        CHECK(twisted(n) == pairs_by_rule(n, nested));
        CHECK(static_cast<long>(convex(n).crossings.size()) == binom(n, 4));
        CHECK(static_cast<long>(twisted(n).size()) == binom(n, 4));
        CHECK(crossing_set(convex(n).wiring) == convex(n).crossings);
    }
    CHECK_THROWS_AS(convex(2), Error);
    CHECK_THROWS_AS(twisted(2), Error);
}

TEST_CASE("straight-line drawings") {
    CHECK(from_points(parabola_points(4)).second == CrossingSet(4, {{Edge(1, 3), Edge(2, 4)}}));
    CHECK(from_points(pts({{0, 0}, {4, 0}, {2, 5}, {3, 1}})).second.empty());
    CHECK(canonical_crossing_form(from_points(parabola_points(5)).second) ==
          canonical_crossing_form(convex(5).crossings));
    CHECK_THROWS_AS(from_points(pts({{0, 0}, {1, 1}, {2, 2}})), Error);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto [rs, cs] = from_points(random_points(7, seed));
        CHECK(crossings_from_rotation(rs) == cs);
        CHECK(realizability_filter(rs));
    }
}

TEST_CASE("two-page drawings") {
    const std::vector<Vertex> id{1, 2, 3, 4};
    CHECK(two_page(4, id, std::vector<int>(6, 0)).crossings == CrossingSet(4, {{Edge(1, 3), Edge(2, 4)}}));
    std::vector<int> pages(6, 0);
    pages[static_cast<std::size_t>(edge_index(4, Edge(2, 4)))] = 1;
    CHECK(two_page(4, id, pages).crossings.empty());

    std::vector<Vertex> spine(8);
    std::iota(spine.begin(), spine.end(), 1);
    const TwoPageDrawing k8 = two_page(8, spine, two_page_k8_pages());
    CHECK(crossing_set(k8.wiring) == k8.crossings);
    CHECK(k8.crossings.size() == 18);
    for (Vertex v = 1; v <= 8; ++v) CHECK_FALSE(k8.crossings.is_crossed(Edge(v, v % 8 + 1)));

    // a shuffled spine: the spine cycle is still uncrossed
    const std::vector<Vertex> shuffled{3, 1, 5, 2, 4};
    std::vector<int> p5(10);
    for (std::size_t i = 0; i < p5.size(); ++i) p5[i] = static_cast<int>(i % 3 == 0);
    const TwoPageDrawing d = two_page(5, shuffled, p5);
    CHECK(d.spine == shuffled);
    for (std::size_t i = 0; i < 5; ++i) CHECK_FALSE(d.crossings.is_crossed(Edge(shuffled[i], shuffled[(i + 1) % 5])));
}

TEST_CASE("five reference classes of K_5") {
    std::set<CrossingSet> forms;
    forms.insert(canonical_crossing_form(convex(5).crossings));
    forms.insert(canonical_crossing_form(twisted(5)));
    forms.insert(canonical_crossing_form(from_points(pts({{0, 0}, {10, 1}, {11, 10}, {1, 9}, {5, 4}})).second));
    forms.insert(canonical_crossing_form(from_points(pts({{0, 0}, {10, 1}, {5, 12}, {4, 4}, {6, 5}})).second));
    CHECK(forms.size() == 4);
    const auto& refs = k5_reference_forms();
    CHECK(refs.size() == 5);
    for (const auto& f : forms) CHECK(std::find(refs.begin(), refs.end(), f) != refs.end());
    const auto classes = enumerate_realizable(5);
    for (std::size_t i = 0; i < 5; ++i) CHECK(classes[i].canonical == refs[i]);

    const CrossingSet h5 = canonical_crossing_form(crossing_set(hill(5)));
    CHECK(std::count(refs.begin(), refs.end(), h5) == 1);
    CHECK(h5 == canonical_crossing_form(from_points(pts({{0, 0}, {10, 1}, {5, 12}, {4, 4}, {6, 5}})).second));
}

TEST_CASE("hill drawings") {
    CHECK(is_strongly_cylindrical(hill(9)));
    for (int n = 5; n <= 10; ++n) {
        const CylindricalDrawing cd = hill(n);
        CHECK(cd.outer.size() == static_cast<std::size_t>((n + 1) / 2));
        CHECK(cd.inner.size() == static_cast<std::size_t>(n / 2));
        const CrossingSet cs = crossing_set(cd);
        const auto sampled = sampled_crossings(cd, 20000);
        CHECK(std::set<EdgePair>(cs.pairs().begin(), cs.pairs().end()) == sampled);
        CHECK(static_cast<long>(cs.size()) == z_value(n));
        for (const auto& le : cd.lateral) CHECK(abs(le.omega) <= make_rational(1, 2));
    }
    CHECK(crossing_set(hill(9)).size() == 36);
}

TEST_CASE("random cylindrical drawings") {
    const CylindricalDrawing a = random_cylindrical(6, 1, true);
    CHECK(is_strongly_cylindrical(a));
    CHECK(a == random_cylindrical(6, 1, true));
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const CylindricalDrawing cd = random_cylindrical(7, seed, seed % 2 == 0);
        CHECK_NOTHROW(validate(cd));
        const CrossingSet cs = crossing_set(cd);
        std::set<EdgePair> uniq(cs.pairs().begin(), cs.pairs().end());
        CHECK(uniq.size() == cs.size());
        if (seed % 2 == 0) CHECK(is_strongly_cylindrical(cd));
    }
}

TEST_CASE("random x-monotone drawings") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        CHECK(crossing_set(random_x_monotone(4, seed)).size() <= 1);
        for (int n : {5, 8}) {
            const XMonotoneSample s = random_x_monotone_sample(n, seed);
            CHECK_NOTHROW(validate(s.wiring));
            const CrossingSet cs = crossing_set(s.wiring);
            CHECK_FALSE(cs.is_crossed(Edge(1, 2)));
            CHECK_FALSE(cs.is_crossed(Edge(n - 1, n)));
            if (s.points) CHECK(cs == from_points(*s.points).second);
            CHECK(s.wiring == random_x_monotone(n, seed));
        }
    }
}
