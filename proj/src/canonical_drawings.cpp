#include "drawkit/canonical_drawings.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace drawkit {

namespace {

void require_n(int n, int least) {
    if (n < least) throw Error(Errc::InvalidArgument, "need n >= " + std::to_string(least));
}

PointSet integer_points(std::initializer_list<std::pair<long, long>> xy) {
    PointSet ps;
    for (auto [x, y] : xy) ps.push_back({Rational(x), Rational(y)});
    return ps;
}

Rational hill_offset(int outer, int inner) {
    if (outer == inner) return make_rational(1, 2 * outer);
    return make_rational(1, 2 * outer * inner);
}

/// Shortest counter-clockwise-or-clockwise travel from a to b, ties counter-clockwise.
Rational shortest_turn(const Rational& a, const Rational& b) {
    const Rational d = frac(b - a);
    return d <= make_rational(1, 2) ? d : d - 1;
}

Rational uniform_fraction(std::mt19937_64& rng, long den) {
    return make_rational(static_cast<long>(std::uniform_int_distribution<long>(0, den - 1)(rng)), den);
}

}  // namespace

PointSet parabola_points(int n) {
    PointSet ps;
    for (long k = 1; k <= n; ++k) ps.push_back({Rational(k), Rational(k * k)});
    return ps;
}

ModelledCrossings convex(int n) {
    require_n(n, 3);
    CrossingSet cs(n);
    for (int a = 1; a <= n; ++a)
        for (int c = a + 1; c <= n; ++c)
            for (int b = c + 1; b <= n; ++b)
                for (int d = b + 1; d <= n; ++d) cs.insert(Edge(a, b), Edge(c, d));
    LinearWiring lw = wiring_from_points(parabola_points(n));
    if (crossing_set(lw) != cs) throw Error(Errc::InternalAssertion, "parabola wiring is not convex");
    return {cs, lw};
}

CrossingSet twisted(int n) {
    require_n(n, 3);
    CrossingSet cs(n);
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d) cs.insert(Edge(a, d), Edge(b, c));
    return cs;
}

std::pair<RotationSystem, CrossingSet> from_points(const PointSet& ps) {
    check_general_position(ps);
    const int n = static_cast<int>(ps.size());
    RotationSystem rs(n, clockwise_rotations(ps));
    CrossingSet cs = segment_crossings(ps);
    if (crossings_from_rotation(rs) != cs)
        throw Error(Errc::InternalAssertion, "rotation crossings disagree with segment crossings");
    return {rs, cs};
}

LinearWiring wiring_from_points(const PointSet& ps) {
    check_general_position(ps);
    const int n = static_cast<int>(ps.size());
    for (int i = 1; i < n; ++i)
        if (ps[static_cast<std::size_t>(i)].x <= ps[static_cast<std::size_t>(i - 1)].x)
            throw Error(Errc::InvalidArgument, "points must have increasing x");
    auto pt = [&](Vertex v) -> const Point& { return ps[static_cast<std::size_t>(v - 1)]; };
    auto slope = [&](Edge e) -> Rational { return (pt(e.b).y - pt(e.a).y) / (pt(e.b).x - pt(e.a).x); };
    XBoundedData xb(n);
    for (const Edge& e : all_edges(n))
        for (Vertex v = e.a + 1; v < e.b; ++v)
            xb.set_passes(e, v, orientation(pt(e.a), pt(e.b), pt(v)) > 0 ? Side::Below : Side::Above);
    for (Vertex v = 1; v <= n; ++v) {
        auto& left = xb.left_order[static_cast<std::size_t>(v - 1)];
        auto& right = xb.right_order[static_cast<std::size_t>(v - 1)];
        for (Vertex u = 1; u <= n; ++u) (u < v ? left : right).push_back(Edge(u, v));
        right.erase(std::remove(right.begin(), right.end(), Edge(v, v)), right.end());
        std::sort(right.begin(), right.end(), [&](Edge x, Edge y) { return slope(x) < slope(y); });
        std::sort(left.begin(), left.end(), [&](Edge x, Edge y) { return slope(x) > slope(y); });
    }
    LinearWiring lw = to_x_monotone(xb);
    if (crossing_set(lw) != segment_crossings(ps))
        throw Error(Errc::InternalAssertion, "point wiring disagrees with segment crossings");
    return lw;
}

TwoPageDrawing two_page(int n, const std::vector<Vertex>& spine, const std::vector<int>& page_of_edge) {
    require_n(n, 2);
    if (static_cast<int>(spine.size()) != n) throw Error(Errc::InvalidArgument, "spine must list every vertex");
    std::vector<int> position(static_cast<std::size_t>(n + 1), 0);
    for (std::size_t i = 0; i < spine.size(); ++i) {
        const Vertex v = spine[i];
        if (v < 1 || v > n || position[static_cast<std::size_t>(v)]) throw Error(Errc::InvalidArgument, "spine is not a permutation");
        position[static_cast<std::size_t>(v)] = static_cast<int>(i + 1);
    }
    if (static_cast<int>(page_of_edge.size()) != edge_count(n)) throw Error(Errc::InvalidArgument, "one page per edge expected");
    for (int p : page_of_edge)
        if (p != 0 && p != 1) throw Error(Errc::InvalidArgument, "pages are 0 or 1");

    // page by spine-position edge
    std::vector<int> page(static_cast<std::size_t>(edge_count(n)));
    for (const Edge& e : all_edges(n))
        page[static_cast<std::size_t>(edge_index(n, Edge(position[static_cast<std::size_t>(e.a)],
                                                         position[static_cast<std::size_t>(e.b)])))] =
            page_of_edge[static_cast<std::size_t>(edge_index(n, e))];
    auto page_of = [&](Edge e) { return page[static_cast<std::size_t>(edge_index(n, e))]; };

    XBoundedData xb(n);
    for (const Edge& e : all_edges(n))
        for (Vertex v = e.a + 1; v < e.b; ++v) xb.set_passes(e, v, page_of(e) == 0 ? Side::Above : Side::Below);
    for (Vertex v = 1; v <= n; ++v) {
        auto& left = xb.left_order[static_cast<std::size_t>(v - 1)];
        auto& right = xb.right_order[static_cast<std::size_t>(v - 1)];
        // lower page: longer arcs further down; upper page: longer arcs further up
        for (Vertex u = n; u > v; --u)
            if (page_of(Edge(v, u)) == 1) right.push_back(Edge(v, u));
        for (Vertex u = v + 1; u <= n; ++u)
            if (page_of(Edge(v, u)) == 0) right.push_back(Edge(v, u));
        for (Vertex u = 1; u < v; ++u)
            if (page_of(Edge(u, v)) == 1) left.push_back(Edge(u, v));
        for (Vertex u = v - 1; u >= 1; --u)
            if (page_of(Edge(u, v)) == 0) left.push_back(Edge(u, v));
    }
    TwoPageDrawing out{CrossingSet(n), to_x_monotone(xb), spine};
    CrossingSet by_position(n);
    for (const Edge& e : all_edges(n))
        for (const Edge& f : all_edges(n))
            if (e.a < f.a && f.a < e.b && e.b < f.b && page_of(e) == page_of(f)) {
                by_position.insert(e, f);
                out.crossings.insert(Edge(spine[static_cast<std::size_t>(e.a - 1)], spine[static_cast<std::size_t>(e.b - 1)]),
                                     Edge(spine[static_cast<std::size_t>(f.a - 1)], spine[static_cast<std::size_t>(f.b - 1)]));
            }
    if (crossing_set(out.wiring) != by_position) throw Error(Errc::InternalAssertion, "two-page wiring disagrees with page rule");
    return out;
}

std::vector<int> two_page_k8_pages() {
    // found by deterministic local search over page masks; 18 same-page linked pairs
    return {0, 1, 1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 1, 1, 1, 1, 1, 0, 1, 1};
}

CylindricalDrawing hill(int n) {
    require_n(n, 3);
    const int outer = (n + 1) / 2, inner = n / 2;
    const Rational offset = hill_offset(outer, inner);
    CylindricalDrawing cd;
    cd.n = n;
    for (int k = 0; k < outer; ++k) cd.outer.push_back({k + 1, make_rational(k, outer)});
    for (int k = 0; k < inner; ++k) cd.inner.push_back({outer + k + 1, frac(offset + make_rational(k, inner))});
    for (const auto& o : cd.outer)
        for (const auto& i : cd.inner) cd.lateral.push_back({o.v, i.v, shortest_turn(o.angle, i.angle)});
    for (const auto* ring : {&cd.outer, &cd.inner})
        for (std::size_t x = 0; x < ring->size(); ++x)
            for (std::size_t y = x + 1; y < ring->size(); ++y) {
                const auto& p = (*ring)[x];
                const auto& q = (*ring)[y];
                const bool ccw = sgn(shortest_turn(p.angle, q.angle)) > 0;
                cd.circle.push_back({p.v, q.v, Face::Home, ccw ? ArcDir::Ccw : ArcDir::Cw});
            }
    validate(cd);
    return cd;
}

CylindricalDrawing random_cylindrical(int n, std::uint64_t seed, bool strong, int attempts) {
    require_n(n, 3);
    std::mt19937_64 rng(seed);
    const long den = 4L * n;
    for (int attempt = 0; attempt < attempts; ++attempt) {
        const int outer = std::uniform_int_distribution<int>(1, n)(rng);
        std::vector<Vertex> labels(static_cast<std::size_t>(n));
        std::iota(labels.begin(), labels.end(), 1);
        std::shuffle(labels.begin(), labels.end(), rng);
        std::vector<long> slots(static_cast<std::size_t>(den));
        std::iota(slots.begin(), slots.end(), 0L);
        std::shuffle(slots.begin(), slots.end(), rng);

        CylindricalDrawing cd;
        cd.n = n;
        for (int k = 0; k < n; ++k) {
            CylVertex cv{labels[static_cast<std::size_t>(k)], make_rational(slots[static_cast<std::size_t>(k)], den)};
            (k < outer ? cd.outer : cd.inner).push_back(cv);
        }
        auto by_angle = [](const CylVertex& x, const CylVertex& y) { return x.angle < y.angle; };
        std::sort(cd.outer.begin(), cd.outer.end(), by_angle);
        std::sort(cd.inner.begin(), cd.inner.end(), by_angle);

        // windings fall in [s_w, s_w + 1) for a shift s_w in (-1, 0] per inner vertex
        const Rational shift = -uniform_fraction(rng, 16);
        for (const auto& i : cd.inner) {
            Rational s = shift + make_rational(std::uniform_int_distribution<long>(-3, 3)(rng), 32);
            if (s <= -1 || s > 0) s = shift;
            for (const auto& o : cd.outer) cd.lateral.push_back({o.v, i.v, frac(i.angle - o.angle - s) + s});
        }
        for (const auto* ring : {&cd.outer, &cd.inner}) {
            const Rational ray = (2 * Rational(std::uniform_int_distribution<long>(0, den - 1)(rng)) + 1) / (2 * den);
            for (std::size_t x = 0; x < ring->size(); ++x)
                for (std::size_t y = x + 1; y < ring->size(); ++y) {
                    const auto& p = (*ring)[x];
                    const auto& q = (*ring)[y];
                    CircleEdge ce{p.v, q.v, Face::Home, make_arc(p.angle, q.angle).contains(ray) ? ArcDir::Cw : ArcDir::Ccw};
                    if (!strong && std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
                        ce.face = Face::Lateral;
                        ce.arc = std::uniform_int_distribution<int>(0, 1)(rng) ? ArcDir::Ccw : ArcDir::Cw;
                    }
                    cd.circle.push_back(ce);
                }
        }
        try {
            (void)to_circular_wiring(normalize_winding(cd));
            return cd;
        } catch (const Error&) {
            // rejected; draw again
        }
    }
    throw Error(Errc::GaveUp, "no valid cylindrical drawing after " + std::to_string(attempts) + " attempts");
}

namespace {

/// Distinct x in [0, 10n), y in [0, 10n), redrawn until in general position; sorted by x.
PointSet draw_points(int n, std::mt19937_64& rng) {
    const long range = 10L * n;
    for (;;) {
        std::vector<long> xs(static_cast<std::size_t>(range));
        std::iota(xs.begin(), xs.end(), 0L);
        std::shuffle(xs.begin(), xs.end(), rng);
        xs.resize(static_cast<std::size_t>(n));
        std::sort(xs.begin(), xs.end());
        PointSet ps;
        for (long x : xs) ps.push_back({Rational(x), Rational(std::uniform_int_distribution<long>(0, range - 1)(rng))});
        try {
            check_general_position(ps);
        } catch (const Error&) {
            continue;
        }
        return ps;
    }
}

}  // namespace

PointSet random_points(int n, std::uint64_t seed) {
    require_n(n, 2);
    std::mt19937_64 rng(seed);
    return draw_points(n, rng);
}

XMonotoneSample random_x_monotone_sample(int n, std::uint64_t seed) {
    require_n(n, 2);
    std::mt19937_64 rng(seed);
    if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
        std::vector<int> pages(static_cast<std::size_t>(edge_count(n)));
        for (int& p : pages) p = std::uniform_int_distribution<int>(0, 1)(rng);
        std::vector<Vertex> spine(static_cast<std::size_t>(n));
        std::iota(spine.begin(), spine.end(), 1);
        return {two_page(n, spine, pages).wiring, std::nullopt};
    }
    PointSet ps = draw_points(n, rng);
    return {wiring_from_points(ps), ps};
}

LinearWiring random_x_monotone(int n, std::uint64_t seed) { return random_x_monotone_sample(n, seed).wiring; }

const std::vector<CrossingSet>& k5_reference_forms() {
    static const std::vector<CrossingSet> forms = [] {
        std::vector<int> pages(10, 0);
        pages[static_cast<std::size_t>(edge_index(5, Edge(1, 3)))] = 1;
        pages[static_cast<std::size_t>(edge_index(5, Edge(2, 4)))] = 1;
        const std::vector<CrossingSet> sources{
            convex(5).crossings,
            twisted(5),
            from_points(integer_points({{0, 0}, {10, 1}, {11, 10}, {1, 9}, {5, 4}})).second,  // four on the hull
            from_points(integer_points({{0, 0}, {10, 1}, {5, 12}, {4, 4}, {6, 5}})).second,   // three on the hull
            two_page(5, {1, 2, 3, 4, 5}, pages).crossings,
        };
        std::vector<CrossingSet> out;
        for (const auto& cs : sources) out.push_back(canonical_crossing_form(cs));
        std::sort(out.begin(), out.end());
        if (std::adjacent_find(out.begin(), out.end()) != out.end())
            throw Error(Errc::InternalAssertion, "K5 reference drawings are not pairwise distinct");
        return out;
    }();
    return forms;
}

}  // namespace drawkit
