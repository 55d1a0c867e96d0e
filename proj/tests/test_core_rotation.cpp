#include "drawkit/canonical_drawings.hpp"
#include "drawkit/rotation.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

using namespace drawkit;
using testsupport::nested;
using testsupport::pairs_by_rule;

namespace {

const DrawingClass& class_with_form(const std::vector<DrawingClass>& classes, const CrossingSet& cs) {
    const CrossingSet want = canonical_crossing_form(cs);
    auto it = std::find_if(classes.begin(), classes.end(), [&](const DrawingClass& c) { return c.canonical == want; });
    REQUIRE(it != classes.end());
    return *it;
}

}  // namespace

TEST_CASE("crossings from the rotation system of parabola points") {
    const auto [rs, cs] = from_points(parabola_points(4));
    const CrossingSet got = crossings_from_rotation(rs);
    CHECK(got == CrossingSet(4, {{Edge(1, 3), Edge(2, 4)}}));
    CHECK(got == cs);
}

TEST_CASE("a triangle has no crossings") {
    const PointSet tri{{Rational(0), Rational(0)}, {Rational(1), Rational(3)}, {Rational(2), Rational(1)}};
    CHECK(crossings_from_rotation(from_points(tri).first).empty());
}

TEST_CASE("rotation system of the twisted class on five vertices") {
    const auto classes = enumerate_realizable(5);
    const DrawingClass& t5 = class_with_form(classes, twisted(5));
    CHECK(crossings_from_rotation(t5.rotation) == t5.canonical);
    CHECK(twisted(5) == pairs_by_rule(5, nested));
}

TEST_CASE("induced subsystems") {
    const auto rs5 = from_points(parabola_points(5)).first;
    const auto rs4 = from_points(parabola_points(4)).first;
    CHECK(induced_subsystem(rs5, {1, 2, 3, 4}) == rs4);
    CHECK(induced_subsystem(rs5, {1, 2, 3, 4, 5}) == rs5);
    CHECK_THROWS_AS(induced_subsystem(rs5, {1, 2}), Error);

    // every 5-subset of the twisted K_6 is a twisted K_5
    const auto classes = enumerate_realizable(6);
    const DrawingClass& t6 = class_with_form(classes, twisted(6));
    const CrossingSet t5 = canonical_crossing_form(twisted(5));
    for (Vertex skip = 1; skip <= 6; ++skip) {
        std::vector<Vertex> s;
        for (Vertex v = 1; v <= 6; ++v)
            if (v != skip) s.push_back(v);
        CHECK(canonical_crossing_form(crossings_from_rotation(induced_subsystem(t6.rotation, s))) == t5);
    }
}

TEST_CASE("canonical form is invariant under relabeling") {
    const CrossingSet c4 = convex(4).crossings;
    const CrossingSet base = canonical_crossing_form(c4);
    std::vector<Vertex> perm{1, 2, 3, 4};
    do {
        CHECK(canonical_crossing_form(c4.relabeled(perm)) == base);
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(canonical_crossing_form(CrossingSet(4)) == CrossingSet(4));
    CHECK(canonical_crossing_form(convex(5).crossings) != canonical_crossing_form(twisted(5)));
}

TEST_CASE("canonical form with map applies its relabeling") {
    const CrossingSet cs = twisted(6);
    const auto [form, perm] = canonical_crossing_form_with_map(cs);
    CHECK(cs.relabeled(perm) == form);
}

TEST_CASE("canonicalization above the cap is refused") {
    CHECK_THROWS_AS(canonical_crossing_form(CrossingSet(kCanonicalCap + 1)), Error);
}

TEST_CASE("realizability filter") {
    CHECK(realizability_filter(from_points(parabola_points(6)).first));
    for (const auto& c : enumerate_realizable(6)) CHECK(realizability_filter(c.rotation));

    // Walk all rotation systems of K_5 with normalized starts; accepted ones must
    // fall into the five classes and at least one must be rejected.
    const auto& forms = k5_reference_forms();
    std::vector<std::vector<Vertex>> others(5);
    for (Vertex v = 1; v <= 5; ++v)
        for (Vertex u = 1; u <= 5; ++u)
            if (u != v) others[static_cast<std::size_t>(v - 1)].push_back(u);
    int rejected = 0, accepted = 0;
    for (int code = 0; code < 7776; ++code) {
        std::vector<std::vector<Vertex>> rot(5);
        int c = code;
        for (int v = 0; v < 5; ++v) {
            auto tail = std::vector<Vertex>(others[static_cast<std::size_t>(v)].begin() + 1,
                                            others[static_cast<std::size_t>(v)].end());
            for (int k = c % 6; k > 0; --k) std::next_permutation(tail.begin(), tail.end());
            c /= 6;
            rot[static_cast<std::size_t>(v)] = {others[static_cast<std::size_t>(v)][0]};
            rot[static_cast<std::size_t>(v)].insert(rot[static_cast<std::size_t>(v)].end(), tail.begin(), tail.end());
        }
        const RotationSystem rs(5, rot);
        if (!realizability_filter(rs)) {
            ++rejected;
            continue;
        }
        ++accepted;
        const CrossingSet cs = canonical_crossing_form(crossings_from_rotation(rs));
        CHECK(std::find(forms.begin(), forms.end(), cs) != forms.end());
    }
    CHECK(rejected > 0);
    CHECK(accepted > 0);
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate_realizable(4).size() == 2);
    const auto five = enumerate_realizable(5);
    CHECK(five.size() == 5);
    const auto has = [&](const CrossingSet& cs) {
        const CrossingSet f = canonical_crossing_form(cs);
        return std::any_of(five.begin(), five.end(), [&](const DrawingClass& c) { return c.canonical == f; });
    };
    CHECK(has(convex(5).crossings));
    CHECK(has(twisted(5)));
    for (const auto& c : five) CHECK(crossings_from_rotation(c.rotation) == c.canonical);
    CHECK(std::is_sorted(five.begin(), five.end(),
                         [](const DrawingClass& x, const DrawingClass& y) { return x.canonical < y.canonical; }));
}

TEST_CASE("enumeration is independent of the worker count") {
    const auto one = enumerate_realizable(5, 1);
    const auto two = enumerate_realizable(5, 2);
    REQUIRE(one.size() == two.size());
    for (std::size_t i = 0; i < one.size(); ++i) CHECK(one[i].canonical == two[i].canonical);
}

TEST_CASE("at most one crossing per quadruple on accepted systems") {
    for (const auto& c : enumerate_realizable(6)) {
        std::map<std::vector<Vertex>, int> per;
        for (const auto& [e, f] : c.canonical.pairs()) {
            std::vector<Vertex> q{e.a, e.b, f.a, f.b};
            std::sort(q.begin(), q.end());
            ++per[q];
        }
        for (const auto& [q, k] : per) CHECK(k == 1);
    }
}

TEST_CASE("crossing set rejects incident pairs") {
    CHECK_THROWS_AS(CrossingSet(4, {{Edge(1, 2), Edge(2, 3)}}), Error);
    CHECK_THROWS_AS(CrossingSet(4, {{Edge(1, 2), Edge(3, 5)}}), Error);
}
