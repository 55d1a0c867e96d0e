#include "drawkit/hampath.hpp"

#include "drawkit/canonical_drawings.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>

namespace drawkit {

namespace {

std::string path_text(const VertexPath& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + "]";
}

void check_ends(int n, Vertex a, Vertex b) {
    if (a < 1 || a > n || b < 1 || b > n || a == b)
        throw Error(Errc::InvalidArgument, "ends must be two distinct vertices of 1.." + std::to_string(n));
}

/// Path a, (third vertices), b for n <= 3, where no two path edges are independent.
VertexPath tiny_path(int n, Vertex a, Vertex b) {
    VertexPath p{a};
    for (Vertex v = 1; v <= n; ++v)
        if (v != a && v != b) p.push_back(v);
    p.push_back(b);
    return p;
}

void append_tail(VertexPath& p, const VertexPath& q) {
    // q starts at p.back()
    p.insert(p.end(), q.begin() + 1, q.end());
}

VertexPath reversed(VertexPath p) {
    std::reverse(p.begin(), p.end());
    return p;
}

// --- x-monotone -------------------------------------------------------------

class XMonotoneSolver {
public:
    explicit XMonotoneSolver(const LinearWiring& lw) : xb_(extract_xbounded(lw)) {}

    // s ascending; a, b in s
    VertexPath solve(const std::vector<Vertex>& s, Vertex a, Vertex b) const {
        if (s.size() == 1) return {a};
        if (s.size() == 2) return {a, b};
        const Vertex l = s.front(), r = s.back();
        if ((a == l && b == r) || (a == r && b == l)) {
            VertexPath p = s;
            return a == l ? p : reversed(p);
        }
        if (a > b) return reversed(solve(s, b, a));

        std::vector<Vertex> above, below;
        for (Vertex v : s)
            if (v != l && v != r) (is_above(Edge(l, r), v) ? above : below).push_back(v);

        const bool a_inner = a != l, b_inner = b != r;
        if (a_inner && b_inner && is_above(Edge(l, r), a) != is_above(Edge(l, r), b)) {
            // a's side through l, then e, then b's side from r
            const auto& sa = is_above(Edge(l, r), a) ? above : below;
            const auto& sb = is_above(Edge(l, r), a) ? below : above;
            VertexPath p = solve(with(sa, l), a, l);
            const VertexPath q = solve(with(sb, r), r, b);
            p.insert(p.end(), q.begin(), q.end());
            return p;
        }

        const bool up = a_inner ? is_above(Edge(l, r), a) : is_above(Edge(l, r), b);
        const auto& same = up ? above : below;
        const auto& other = up ? below : above;
        // b == r: the same side hangs off l; otherwise split it at a
        std::vector<Vertex> left{l}, right{r};
        for (Vertex v : same) (b == r || v <= a ? left : right).push_back(v);
        std::sort(left.begin(), left.end());
        std::sort(right.begin(), right.end());

        std::vector<Vertex> middle = other;
        middle.push_back(l);
        middle.push_back(r);
        std::sort(middle.begin(), middle.end());

        VertexPath p = solve(left, a, l);
        append_tail(p, solve(middle, l, r));
        append_tail(p, solve(right, r, b));
        return p;
    }

private:
    bool is_above(Edge e, Vertex v) const { return xb_.passes(e, v) == Side::Below; }

    static std::vector<Vertex> with(std::vector<Vertex> s, Vertex v) {
        s.push_back(v);
        std::sort(s.begin(), s.end());
        return s;
    }

    XBoundedData xb_;
};

// --- cylindrical ------------------------------------------------------------

/// Vertices of a circle in clockwise order (decreasing angle).
std::vector<Vertex> clockwise(const std::vector<CylVertex>& circle) {
    std::vector<CylVertex> c = circle;
    std::sort(c.begin(), c.end(), [](const CylVertex& x, const CylVertex& y) { return x.angle > y.angle; });
    std::vector<Vertex> out;
    for (const auto& cv : c) out.push_back(cv.v);
    return out;
}

/// Rotation of `order` starting at v.
std::vector<Vertex> starting_at(const std::vector<Vertex>& order, Vertex v) {
    std::vector<Vertex> out = order;
    std::rotate(out.begin(), std::find(out.begin(), out.end(), v), out.end());
    return out;
}

bool contains_edge(const std::vector<Edge>& edges, Edge e) {
    return std::find(edges.begin(), edges.end(), e) != edges.end();
}

/// Walk from c[0] along c; at the crossed rim edge jump back to c.back() and walk the other way.
VertexPath rim_walk(const std::vector<Vertex>& c, const std::vector<Edge>& crossed) {
    VertexPath p{c[0]};
    std::size_t j = 0;
    while (j + 1 < c.size() && !contains_edge(crossed, Edge(c[j], c[j + 1]))) p.push_back(c[++j]);
    for (std::size_t k = c.size() - 1; k > j; --k) p.push_back(c[k]);
    return p;
}

/// Paths through all of a circle that use only uncrossed rim edges, best first.
std::vector<VertexPath> rim_paths(const std::vector<Vertex>& cw, const std::vector<Edge>& crossed) {
    std::vector<VertexPath> out;
    const std::size_t k = cw.size();
    if (k == 1) return {{cw[0]}};
    for (std::size_t i = 0; i < k; ++i) {
        // drop rim edge (cw[i], cw[i+1])
        const Edge dropped(cw[i], cw[(i + 1) % k]);
        if (!crossed.empty() && !contains_edge(crossed, dropped)) continue;
        VertexPath p;
        for (std::size_t s = 1; s <= k; ++s) p.push_back(cw[(i + s) % k]);
        out.push_back(p);
        if (k == 2) break;
    }
    return out;
}

/// The two sub-paths on the circle of a and b: P1 from a, P3 from b. c is clockwise from a.
std::pair<VertexPath, VertexPath> same_circle_parts(const std::vector<Vertex>& c, Vertex b,
                                                    const std::vector<Edge>& crossed) {
    const std::size_t k = c.size();
    const auto m = static_cast<std::size_t>(std::find(c.begin(), c.end(), b) - c.begin());
    std::optional<std::size_t> j;
    for (std::size_t i = 0; i < m; ++i)
        if (contains_edge(crossed, Edge(c[i], c[i + 1]))) j = i;
    VertexPath p1, p3;
    if (!j) {
        for (std::size_t i = 0; i < m; ++i) p1.push_back(c[i]);
        for (std::size_t i = m; i < k; ++i) p3.push_back(c[i]);
        return {p1, p3};
    }
    for (std::size_t i = 0; i <= *j; ++i) p1.push_back(c[i]);
    for (std::size_t i = m; i < k; ++i) p3.push_back(c[i]);
    for (std::size_t i = m - 1; i > *j; --i) p3.push_back(c[i]);
    return {p1, p3};
}

VertexPath one_circle_path(const CylindricalDrawing& cd, const CrossingSet& cs, Vertex a, Vertex b) {
    const auto& circle = cd.outer.empty() ? cd.inner : cd.outer;
    std::vector<CylVertex> sorted = circle;
    std::sort(sorted.begin(), sorted.end(), [](const CylVertex& x, const CylVertex& y) { return x.angle < y.angle; });
    std::vector<Vertex> spine;
    for (const auto& cv : sorted) spine.push_back(cv.v);
    std::vector<int> page(static_cast<std::size_t>(edge_count(cd.n)), 0);
    for (const auto& ce : cd.circle)
        page[static_cast<std::size_t>(edge_index(cd.n, Edge(ce.u, ce.v)))] = ce.face == Face::Home ? 0 : 1;
    const TwoPageDrawing tp = two_page(cd.n, spine, page);
    if (tp.crossings != cs) throw Error(Errc::InternalAssertion, "two-page view changed the crossings");
    std::vector<int> pos(static_cast<std::size_t>(cd.n + 1));
    for (std::size_t i = 0; i < spine.size(); ++i) pos[static_cast<std::size_t>(spine[i])] = static_cast<int>(i + 1);
    VertexPath p = path_x_monotone(tp.wiring, pos[static_cast<std::size_t>(a)], pos[static_cast<std::size_t>(b)]);
    for (Vertex& v : p) v = spine[static_cast<std::size_t>(v - 1)];
    return p;
}

bool path_ok(const CrossingSet& cs, const VertexPath& p, Vertex a, Vertex b) {
    return !p.empty() && p.front() == a && p.back() == b && is_hamiltonian(cs.n(), p) && is_crossing_free(cs, p);
}

// --- twisted ------------------------------------------------------------------

class PathSearch {
public:
    PathSearch(int n, Vertex b, std::function<bool(Vertex, Vertex)> allowed, const CrossingSet* cs)
        : n_(n), b_(b), allowed_(std::move(allowed)), used_(static_cast<std::size_t>(n + 1), false) {
        if (cs) matrix_.emplace(*cs);
    }

    std::optional<VertexPath> run(Vertex a) {
        path_ = {a};
        used_[static_cast<std::size_t>(a)] = true;
        if (extend()) return path_;
        return std::nullopt;
    }

private:
    bool extend() {
        const Vertex last = path_.back();
        if (static_cast<int>(path_.size()) == n_) return last == b_;
        for (Vertex v = 1; v <= n_; ++v) {
            if (used_[static_cast<std::size_t>(v)] || !allowed_(last, v)) continue;
            if (v == b_ && static_cast<int>(path_.size()) != n_ - 1) continue;
            if (matrix_ && conflicts(Edge(last, v))) continue;
            used_[static_cast<std::size_t>(v)] = true;
            path_.push_back(v);
            if (extend()) return true;
            path_.pop_back();
            used_[static_cast<std::size_t>(v)] = false;
        }
        return false;
    }

    bool conflicts(Edge e) const {
        for (std::size_t i = 0; i + 1 < path_.size(); ++i) {
            const Edge f(path_[i], path_[i + 1]);
            if (!e.shares_vertex(f) && matrix_->cross(e, f)) return true;
        }
        return false;
    }

    int n_;
    Vertex b_;
    std::function<bool(Vertex, Vertex)> allowed_;
    std::vector<bool> used_;
    std::optional<CrossingMatrix> matrix_;
    VertexPath path_;
};

}  // namespace

std::vector<Edge> path_edges(const VertexPath& p, bool closed) {
    std::vector<Edge> out;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) out.emplace_back(p[i], p[i + 1]);
    if (closed && p.size() >= 3) out.emplace_back(p.back(), p.front());
    return out;
}

bool is_crossing_free(const CrossingSet& cs, const VertexPath& p, bool closed) {
    const auto edges = path_edges(p, closed);
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (!edges[i].shares_vertex(edges[j]) && cs.contains(edges[i], edges[j])) return false;
    return true;
}

bool is_hamiltonian(int n, const VertexPath& p) {
    if (static_cast<int>(p.size()) != n) return false;
    std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
    for (Vertex v : p) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

void check_ham_path(const CrossingSet& cs, const VertexPath& p, Vertex a, Vertex b, const char* who) {
    if (!path_ok(cs, p, a, b))
        throw Error(Errc::InternalAssertion, std::string(who) + " built an invalid path " + path_text(p));
}

VertexPath path_x_monotone(const LinearWiring& lw, Vertex a, Vertex b) {
    check_ends(lw.n, a, b);
    std::vector<Vertex> all(static_cast<std::size_t>(lw.n));
    for (int v = 1; v <= lw.n; ++v) all[static_cast<std::size_t>(v - 1)] = v;
    const VertexPath p = XMonotoneSolver(lw).solve(all, a, b);
    check_ham_path(crossing_set(lw), p, a, b, "path_x_monotone");
    return p;
}

VertexPath path_strong_c_mon(const CircularWiring& cw, Vertex a, Vertex b) {
    check_ends(cw.n, a, b);
    if (!is_strongly_c_monotone(cw)) throw Error(Errc::NotStronglyCMonotone, "path_strong_c_mon needs a strongly c-monotone wiring");
    const CrossingSet cs = crossing_set(cw);
    const int n = cw.n;
    if (n <= 3) return tiny_path(n, a, b);
    auto angle = [&](Vertex v) -> const Rational& { return cw.angle[static_cast<std::size_t>(v - 1)]; };

    // counter-clockwise vertex order
    std::vector<Vertex> ccw(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) ccw[static_cast<std::size_t>(v - 1)] = v;
    std::sort(ccw.begin(), ccw.end(), [&](Vertex x, Vertex y) { return angle(x) < angle(y); });
    auto index = [&](Vertex v) { return static_cast<int>(std::find(ccw.begin(), ccw.end(), v) - ccw.begin()); };
    auto at = [&](int i) { return ccw[static_cast<std::size_t>(((i % n) + n) % n)]; };

    VertexPath p;
    const auto gaps = gap_edges(cw);
    for (int k = 0; k < n; ++k) {
        if (gaps[static_cast<std::size_t>(k)].contained_in_gap) continue;
        // the whole drawing avoids the open gap of an escaping gap edge
        const Arc gap = make_arc(angle(at(k)), angle(at(k + 1)));
        const LinearCut cut = cut_to_linear(cw, gap.start + gap.length / 2);
        std::vector<Vertex> pos(static_cast<std::size_t>(n + 1));
        for (std::size_t i = 0; i < cut.original_of.size(); ++i) pos[static_cast<std::size_t>(cut.original_of[i])] = static_cast<Vertex>(i + 1);
        p = path_x_monotone(cut.wiring, pos[static_cast<std::size_t>(a)], pos[static_cast<std::size_t>(b)]);
        for (Vertex& v : p) v = cut.original_of[static_cast<std::size_t>(v - 1)];
        check_ham_path(cs, p, a, b, "path_strong_c_mon");
        return p;
    }

    const int ia = index(a), ib = index(b);

    if (at(ia + 1) == b || at(ia - 1) == b) {
        const int step = at(ia - 1) == b ? 1 : -1;  // walk away from b
        for (int s = 0; s < n; ++s) p.push_back(at(ia + step * s));
        check_ham_path(cs, p, a, b, "path_strong_c_mon");
        return p;
    }

    const Vertex a_pred = at(ia - 1), b_pred = at(ib - 1);
    const Arc w = wedge(cw, Edge(a_pred, b_pred));
    // x is the end inside the wedge, y the other end
    const bool a_inside = w.contains(angle(a));
    const Vertex x = a_inside ? a : b, y = a_inside ? b : a;
    const Vertex x_pred = a_inside ? a_pred : b_pred;

    std::vector<Vertex> inside;
    for (int v = 1; v <= n; ++v)
        if (w.contains(angle(v))) inside.push_back(v);
    const CircularWiring sub = induce(cw, inside);
    const LinearCut cut = cut_to_linear(sub, w.start + w.length + (1 - w.length) / 2);
    std::vector<Vertex> pos(static_cast<std::size_t>(n + 1));
    for (std::size_t i = 0; i < cut.original_of.size(); ++i) {
        const Vertex orig = inside[static_cast<std::size_t>(cut.original_of[i] - 1)];
        pos[static_cast<std::size_t>(orig)] = static_cast<Vertex>(i + 1);
    }
    p = path_x_monotone(cut.wiring, pos[static_cast<std::size_t>(x)], pos[static_cast<std::size_t>(x_pred)]);
    for (Vertex& v : p) v = inside[static_cast<std::size_t>(cut.original_of[static_cast<std::size_t>(v - 1)] - 1)];
    // gap edges clockwise from x_pred down to y
    for (int i = index(x_pred) - 1;; --i) {
        p.push_back(at(i));
        if (at(i) == y) break;
    }
    if (!a_inside) p = reversed(p);
    check_ham_path(cs, p, a, b, "path_strong_c_mon");
    return p;
}

VertexPath path_cylindrical(const CylindricalDrawing& cd, Vertex a, Vertex b) {
    validate(cd);
    check_ends(cd.n, a, b);
    const CrossingSet cs = crossing_set(cd);
    if (cd.n <= 3) return tiny_path(cd.n, a, b);
    if (cd.outer.empty() || cd.inner.empty()) {
        VertexPath p = one_circle_path(cd, cs, a, b);
        check_ham_path(cs, p, a, b, "path_cylindrical");
        return p;
    }

    const RimReport rim = uncrossed_rim_edges(cd);
    auto on_outer = [&](Vertex v) {
        return std::any_of(cd.outer.begin(), cd.outer.end(), [&](const CylVertex& cv) { return cv.v == v; });
    };
    const std::vector<Vertex> outer_cw = clockwise(cd.outer), inner_cw = clockwise(cd.inner);
    auto circle_of = [&](Vertex v) -> const std::vector<Vertex>& { return on_outer(v) ? outer_cw : inner_cw; };
    auto crossed_of = [&](Vertex v) -> const std::vector<Edge>& { return on_outer(v) ? rim.outer.crossed : rim.inner.crossed; };

    // clockwise first; the counter-clockwise variants are the mirror images of the same construction
    std::vector<VertexPath> candidates;
    if (on_outer(a) != on_outer(b)) {
        for (int mirror_a = 0; mirror_a < 2; ++mirror_a)
            for (int mirror_b = 0; mirror_b < 2; ++mirror_b) {
                std::vector<Vertex> ca = starting_at(circle_of(a), a), cb = starting_at(circle_of(b), b);
                if (mirror_a) std::reverse(ca.begin() + 1, ca.end());
                if (mirror_b) std::reverse(cb.begin() + 1, cb.end());
                VertexPath p = rim_walk(ca, crossed_of(a));
                const VertexPath q = rim_walk(cb, crossed_of(b));
                p.insert(p.end(), q.rbegin(), q.rend());
                candidates.push_back(p);
            }
    } else {
        const Vertex other = on_outer(a) ? inner_cw.front() : outer_cw.front();
        const auto& c2 = circle_of(other);
        const auto middles = rim_paths(c2, crossed_of(other));
        for (int mirror = 0; mirror < 2; ++mirror) {
            // x, y: the ends in the order that puts the crossed rim edge clockwise between them
            auto walk_from = [&](Vertex x) {
                std::vector<Vertex> c = starting_at(circle_of(x), x);
                if (mirror) std::reverse(c.begin() + 1, c.end());
                return c;
            };
            // put the crossed rim edge, if any, on the walk from the first end to the second
            const auto& crossed1 = crossed_of(a);
            const std::vector<Vertex> from_a = walk_from(a);
            bool swap_first = false;
            if (!crossed1.empty()) {
                swap_first = true;
                for (std::size_t i = 0; from_a[i] != b; ++i)
                    if (Edge(from_a[i], from_a[i + 1]) == crossed1.front()) swap_first = false;
            }
            for (int attempt = 0; attempt < 2; ++attempt) {
                const bool swap_ends = (attempt == 0) == swap_first;
                const Vertex x = swap_ends ? b : a, y = swap_ends ? a : b;
                const std::vector<Vertex> c = walk_from(x);
                auto [p1, p3] = same_circle_parts(c, y, crossed_of(x));
                for (const VertexPath& mid : middles) {
                    const Vertex e1 = p1.back(), e3 = p3.back();
                    const std::array<std::pair<Edge, Edge>, 2> stitches{
                        std::pair{Edge(e1, mid.front()), Edge(mid.back(), e3)},
                        std::pair{Edge(e1, mid.back()), Edge(mid.front(), e3)}};
                    // non-crossing stitches first, the smaller pair breaking ties
                    std::array<int, 2> order{0, 1};
                    auto bad = [&](int s) { return cs.contains(stitches[static_cast<std::size_t>(s)].first, stitches[static_cast<std::size_t>(s)].second); };
                    std::sort(order.begin(), order.end(), [&](int s, int t) {
                        if (bad(s) != bad(t)) return !bad(s);
                        const auto& ps = stitches[static_cast<std::size_t>(s)];
                        const auto& pt = stitches[static_cast<std::size_t>(t)];
                        return make_edge_pair(ps.first, ps.second) < make_edge_pair(pt.first, pt.second);
                    });
                    for (int s : order) {
                        VertexPath p = p1;
                        if (s == 0) p.insert(p.end(), mid.begin(), mid.end());
                        else p.insert(p.end(), mid.rbegin(), mid.rend());
                        p.insert(p.end(), p3.rbegin(), p3.rend());
                        candidates.push_back(swap_ends ? reversed(p) : p);
                        if (mid.size() == 1) break;
                    }
                }
            }
        }
    }
    for (const VertexPath& p : candidates)
        if (path_ok(cs, p, a, b)) return p;
    throw Error(Errc::InternalAssertion, "path_cylindrical found no valid stitching");
}

VertexPath path_twisted(int n, Vertex a, Vertex b) {
    if (n < 2) throw Error(Errc::InvalidArgument, "path_twisted needs n >= 2");
    check_ends(n, a, b);
    const CrossingSet cs = n >= 3 ? twisted(n) : CrossingSet(n);
    auto near = [](Vertex u, Vertex v) { return std::abs(u - v) <= 2; };
    std::optional<VertexPath> p = PathSearch(n, b, near, nullptr).run(a);
    if (!p) p = PathSearch(n, b, [](Vertex, Vertex) { return true; }, &cs).run(a);
    if (!p) throw Error(Errc::InternalAssertion, "no crossing-free path in the twisted drawing");
    check_ham_path(cs, *p, a, b, "path_twisted");
    return *p;
}

VertexPath cycle_via_uncrossed(const CrossingSet& cs, Edge uncrossed, const PathFn& path_fn) {
    if (cs.is_crossed(uncrossed)) throw Error(Errc::EdgeIsCrossed, "edge {" + std::to_string(uncrossed.a) + "," + std::to_string(uncrossed.b) + "} has crossings");
    const VertexPath p = path_fn(uncrossed.a, uncrossed.b);
    check_ham_path(cs, p, uncrossed.a, uncrossed.b, "cycle_via_uncrossed");
    if (!is_crossing_free(cs, p, true)) throw Error(Errc::InternalAssertion, "closing edge crosses the path");
    return p;
}

CrossingSet duplicate_apex(const CrossingSet& cs, const std::vector<Vertex>& rotation_of_vn) {
    const int n = cs.n();
    if (static_cast<int>(rotation_of_vn.size()) != n - 1) throw Error(Errc::BadRotation, "rotation must list the other n-1 vertices");
    std::vector<int> rank(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < rotation_of_vn.size(); ++i) {
        const Vertex v = rotation_of_vn[i];
        if (v < 1 || v >= n || rank[static_cast<std::size_t>(v)] >= 0) throw Error(Errc::BadRotation, "rotation is not a permutation of 1..n-1");
        rank[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    const Vertex copy = n + 1;
    CrossingSet out(n + 1, cs.pairs());
    for (Vertex vi = 1; vi < n; ++vi) {
        const Edge fresh(copy, vi);
        for (Vertex vj = 1; vj < n; ++vj)
            if (rank[static_cast<std::size_t>(vi)] < rank[static_cast<std::size_t>(vj)]) out.insert(fresh, Edge(n, vj));
        for (const auto& [e, f] : cs.pairs()) {
            if (e == Edge(n, vi)) out.insert(fresh, f);
            if (f == Edge(n, vi)) out.insert(fresh, e);
        }
    }
    return out;
}

}  // namespace drawkit
