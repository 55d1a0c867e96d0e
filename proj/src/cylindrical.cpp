#include "drawkit/cylindrical.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>

namespace drawkit {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(Errc::InvalidDrawing, msg); }

enum class Ring { Outer, Inner };

/// Per-vertex lookup built from the drawing's vertex lists.
struct Layout {
    int n = 0;
    std::vector<std::optional<Ring>> ring;  // by vertex
    std::vector<Rational> angle;

    explicit Layout(const CylindricalDrawing& cd) : n(cd.n), ring(static_cast<std::size_t>(cd.n + 1)),
                                                   angle(static_cast<std::size_t>(cd.n + 1)) {
        if (cd.n < 2) bad("cylindrical drawing needs n >= 2");
        auto place = [&](const std::vector<CylVertex>& vs, Ring r) {
            for (const auto& cv : vs) {
                if (cv.v < 1 || cv.v > n) bad("vertex " + std::to_string(cv.v) + " out of range");
                if (ring[static_cast<std::size_t>(cv.v)]) bad("vertex " + std::to_string(cv.v) + " placed twice");
                if (cv.angle < 0 || cv.angle >= 1) bad("angle outside [0,1)");
                ring[static_cast<std::size_t>(cv.v)] = r;
                angle[static_cast<std::size_t>(cv.v)] = cv.angle;
            }
            for (std::size_t i = 0; i < vs.size(); ++i)
                for (std::size_t j = i + 1; j < vs.size(); ++j)
                    if (vs[i].angle == vs[j].angle) bad("two vertices share an angle on one circle");
        };
        place(cd.outer, Ring::Outer);
        place(cd.inner, Ring::Inner);
        for (int v = 1; v <= n; ++v)
            if (!ring[static_cast<std::size_t>(v)]) bad("vertex " + std::to_string(v) + " is on no circle");
    }

    const Rational& at(Vertex v) const { return angle[static_cast<std::size_t>(v)]; }
    Ring of(Vertex v) const { return *ring[static_cast<std::size_t>(v)]; }
};

Arc ce_arc(const Layout& L, const CircleEdge& ce) {
    return ce.arc == ArcDir::Ccw ? make_arc(L.at(ce.u), L.at(ce.v)) : make_arc(L.at(ce.v), L.at(ce.u));
}

Arc le_wedge(const Layout& L, const LateralEdge& le) {
    if (sgn(le.omega) > 0) return Arc{L.at(le.u), le.omega};
    if (sgn(le.omega) < 0) return Arc{L.at(le.w), -le.omega};
    throw Error(Errc::InvalidArgument, "lateral edge with zero winding has no wedge");
}

/// x = delta + omega_f - omega_e; the pair stays uncrossed iff 0 <= x <= 1.
Rational lateral_offset(const Layout& L, const LateralEdge& e, const LateralEdge& f) {
    return frac(L.at(f.u) - L.at(e.u)) + f.omega - e.omega;
}

bool in_unit(const Rational& x) { return x >= 0 && x <= 1; }

std::string text(Edge e) { return "{" + std::to_string(e.a) + "," + std::to_string(e.b) + "}"; }

void check_structure(const CylindricalDrawing& cd, const Layout& L) {
    std::set<Edge> seen;
    for (const auto& le : cd.lateral) {
        if (le.u < 1 || le.u > cd.n || le.w < 1 || le.w > cd.n) bad("lateral edge endpoint out of range");
        if (L.of(le.u) != Ring::Outer || L.of(le.w) != Ring::Inner) bad("lateral edge must run outer to inner");
        if (!seen.insert(Edge(le.u, le.w)).second) bad("edge " + text(Edge(le.u, le.w)) + " listed twice");
        if (frac(L.at(le.u) + le.omega) != L.at(le.w))
            bad("winding of " + text(Edge(le.u, le.w)) + " does not reach its inner vertex");
    }
    for (const auto& ce : cd.circle) {
        if (ce.u < 1 || ce.u > cd.n || ce.v < 1 || ce.v > cd.n || ce.u == ce.v) bad("circle edge endpoint out of range");
        if (L.of(ce.u) != L.of(ce.v)) bad("circle edge joins different circles");
        if (!seen.insert(Edge(ce.u, ce.v)).second) bad("edge " + text(Edge(ce.u, ce.v)) + " listed twice");
    }
    if (static_cast<int>(seen.size()) != edge_count(cd.n)) bad("drawing is not complete");
}

bool guarded(const Layout& L, const Arc& arc, Vertex v) { return arc.contains(L.at(v)); }

void check_pairs(const CylindricalDrawing& cd, const Layout& L) {
    const auto& lat = cd.lateral;
    for (std::size_t i = 0; i < lat.size(); ++i)
        for (std::size_t j = i + 1; j < lat.size(); ++j) {
            const auto& e = lat[i];
            const auto& f = lat[j];
            const Rational x = lateral_offset(L, e, f);
            const std::string name = text(Edge(e.u, e.w)) + " and " + text(Edge(f.u, f.w));
            if (e.u == f.u) {
                if (abs(f.omega - e.omega) >= 1) bad("edges " + name + " at one outer vertex wind apart");
            } else if (e.w == f.w) {
                if (x != 0 && x != 1) bad("edges " + name + " at one inner vertex cross");
            } else if (x < -1 || x > 2) {
                bad("edges " + name + " would cross twice");
            }
        }
    for (std::size_t i = 0; i < cd.circle.size(); ++i) {
        const auto& e = cd.circle[i];
        if (e.face != Face::Lateral) continue;
        const Arc ae = ce_arc(L, e);
        for (std::size_t j = i + 1; j < cd.circle.size(); ++j) {
            const auto& f = cd.circle[j];
            if (f.face != Face::Lateral || L.of(f.u) != L.of(e.u)) continue;
            const Arc af = ce_arc(L, f);
            if (guarded(L, ae, f.u) && guarded(L, ae, f.v) && guarded(L, af, e.u) && guarded(L, af, e.v))
                bad("circle edges " + text(Edge(e.u, e.v)) + " and " + text(Edge(f.u, f.v)) + " guard each other");
        }
    }
}

const CircleEdge& find_circle_edge(const CylindricalDrawing& cd, Edge e) {
    for (const auto& ce : cd.circle)
        if (Edge(ce.u, ce.v) == e) return ce;
    throw Error(Errc::InvalidArgument, "edge " + text(e) + " is not a circle edge");
}

bool linked(const Layout& L, Edge e, Edge f) {
    // f's endpoints on different sides of the chord e
    const Arc a = make_arc(L.at(e.a), L.at(e.b));
    return a.contains(L.at(f.a)) != a.contains(L.at(f.b));
}

CylindricalDrawing rotate_outer(const CylindricalDrawing& cd, const Rational& t) {
    CylindricalDrawing out = cd;
    for (auto& cv : out.outer) cv.angle = frac(cv.angle + t);
    for (auto& le : out.lateral) le.omega -= t;
    return out;
}

// ---------------------------------------------------------------- realization

/// r(phi) = r0 + slope * (phi - lo) on the lifted interval [lo, hi].
struct Piece {
    Rational lo, hi, r0, slope;
    Rational at(const Rational& phi) const { return r0 + slope * (phi - lo); }
};

struct Strand {
    Edge edge;
    Rational start;  // in [0, 1)
    Rational length;
    std::vector<Piece> pieces;

    /// Lifted parameter of angle a inside the open support, if any.
    std::optional<Rational> lift(const Rational& a) const {
        for (int k = 0; k <= 1; ++k) {
            Rational phi = a + k;
            if (phi > start && phi < start + length) return phi;
        }
        return std::nullopt;
    }
    Rational radius(const Rational& phi) const {
        for (const auto& p : pieces)
            if (phi >= p.lo && phi <= p.hi) return p.at(phi);
        throw Error(Errc::InternalAssertion, "radius requested outside strand");
    }
};

[[noreturn]] void mismatch(const std::string& msg) { throw Error(Errc::RealizationMismatch, msg); }

Strand trapezoid(Edge e, const Arc& arc, const Rational& base, int sign, const Rational& depth, const Rational& ramp) {
    Strand s{e, arc.start, arc.length, {}};
    const Rational top = base + sign * depth;
    const Rational lo = arc.start, hi = arc.start + arc.length;
    s.pieces.push_back({lo, lo + ramp, base, sign * depth / ramp});
    if (lo + ramp < hi - ramp) s.pieces.push_back({lo + ramp, hi - ramp, top, Rational(0)});
    s.pieces.push_back({hi - ramp, hi, top, -sign * depth / ramp});
    return s;
}

std::vector<Strand> build_strands(const CylindricalDrawing& cd, const Layout& L, const Rational& sep) {
    std::vector<Strand> strands;
    for (const auto& le : cd.lateral) {
        const Edge e(le.u, le.w);
        if (sgn(le.omega) > 0)
            strands.push_back({e, L.at(le.u), le.omega, {{L.at(le.u), L.at(le.u) + le.omega, Rational(2), -1 / le.omega}}});
        else
            strands.push_back({e, L.at(le.w), -le.omega, {{L.at(le.w), L.at(le.w) - le.omega, Rational(1), -1 / le.omega}}});
    }
    const Rational ramp = sep / 3;
    // one band per (circle, face): nested arcs get increasing depth with length
    for (Ring ring : {Ring::Outer, Ring::Inner})
        for (Face face : {Face::Home, Face::Lateral}) {
            std::vector<std::pair<Arc, Edge>> group;
            for (const auto& ce : cd.circle)
                if (ce.face == face && L.of(ce.u) == ring) group.emplace_back(ce_arc(L, ce), Edge(ce.u, ce.v));
            std::sort(group.begin(), group.end(), [](const auto& x, const auto& y) {
                return x.first.length != y.first.length ? x.first.length < y.first.length : x.second < y.second;
            });
            const Rational base = ring == Ring::Outer ? 2 : 1;
            const Rational width = face == Face::Home ? (ring == Ring::Outer ? Rational(1) : make_rational(1, 2)) : sep / 4;
            const int sign = (ring == Ring::Outer) == (face == Face::Home) ? 1 : -1;
            const auto count = static_cast<long>(group.size());
            for (long k = 0; k < count; ++k) {
                const Rational depth = width * make_rational(k + 1, count + 1);
                strands.push_back(trapezoid(group[static_cast<std::size_t>(k)].second, group[static_cast<std::size_t>(k)].first,
                                            base, sign, depth, ramp));
            }
        }
    return strands;
}

void add_intersections(const Strand& s, const Strand& t, std::vector<Rational>& crit) {
    for (const auto& p : s.pieces)
        for (const auto& q0 : t.pieces)
            for (int k = -1; k <= 1; ++k) {
                const Piece q{q0.lo + k, q0.hi + k, q0.r0, q0.slope};
                const Rational lo = std::max(p.lo, q.lo), hi = std::min(p.hi, q.hi);
                if (lo > hi) continue;
                const Rational dlo = p.at(lo) - q.at(lo);
                const Rational dslope = p.slope - q.slope;
                if (sgn(dslope) == 0) {
                    if (sgn(dlo) == 0 && lo < hi) mismatch("edges " + text(s.edge) + " and " + text(t.edge) + " overlap");
                    if (sgn(dlo) == 0) crit.push_back(frac(lo));
                    continue;
                }
                const Rational phi = lo - dlo / dslope;
                if (phi >= lo && phi <= hi) crit.push_back(frac(phi));
            }
}

std::vector<Edge> radial_order(const std::vector<Strand>& strands, const Rational& a) {
    std::vector<std::pair<Rational, Edge>> alive;
    for (const auto& s : strands)
        if (auto phi = s.lift(a)) alive.emplace_back(s.radius(*phi), s.edge);
    std::sort(alive.begin(), alive.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t i = 1; i < alive.size(); ++i)
        if (alive[i].first == alive[i - 1].first)
            mismatch("edges " + text(alive[i - 1].second) + " and " + text(alive[i].second) + " meet between events");
    std::vector<Edge> out;
    for (auto& [r, e] : alive) out.push_back(e);
    return out;
}

Rational min_separation(std::vector<Rational> angles) {
    std::sort(angles.begin(), angles.end());
    Rational sep(1);
    for (std::size_t i = 0; i < angles.size(); ++i) {
        const Rational next = i + 1 < angles.size() ? angles[i + 1] : angles.front() + 1;
        if (next - angles[i] < sep) sep = next - angles[i];
    }
    return sep;
}

}  // namespace

void validate(const CylindricalDrawing& cd) {
    const Layout L(cd);
    check_structure(cd, L);
    check_pairs(cd, L);
}

Arc arc_of(const CylindricalDrawing& cd, const CircleEdge& ce) { return ce_arc(Layout(cd), ce); }

Arc lateral_wedge(const CylindricalDrawing& cd, const LateralEdge& le) { return le_wedge(Layout(cd), le); }

std::vector<Vertex> guards(const CylindricalDrawing& cd, Edge e) {
    const Layout L(cd);
    const CircleEdge& ce = find_circle_edge(cd, e);
    if (ce.face != Face::Lateral) throw Error(Errc::WrongFace, "edge " + text(e) + " lies in its home face");
    const Arc arc = ce_arc(L, ce);
    std::vector<Vertex> out;
    for (const auto& cv : L.of(ce.u) == Ring::Outer ? cd.outer : cd.inner)
        if (arc.contains(cv.angle)) out.push_back(cv.v);
    std::sort(out.begin(), out.end());
    return out;
}

CrossingSet crossing_set(const CylindricalDrawing& cd) {
    validate(cd);
    const Layout L(cd);
    CrossingSet cs(cd.n);
    // lateral pairs by winding
    for (std::size_t i = 0; i < cd.lateral.size(); ++i)
        for (std::size_t j = i + 1; j < cd.lateral.size(); ++j) {
            const auto& e = cd.lateral[i];
            const auto& f = cd.lateral[j];
            if (e.u == f.u || e.w == f.w) continue;
            if (!in_unit(lateral_offset(L, e, f))) cs.insert(Edge(e.u, e.w), Edge(f.u, f.w));
        }
    for (std::size_t i = 0; i < cd.circle.size(); ++i) {
        const auto& ce = cd.circle[i];
        const Edge e(ce.u, ce.v);
        const Ring ring = L.of(ce.u);
        if (ce.face == Face::Home) {
            for (std::size_t j = i + 1; j < cd.circle.size(); ++j) {
                const auto& cf = cd.circle[j];
                const Edge f(cf.u, cf.v);
                if (cf.face == Face::Home && L.of(cf.u) == ring && !e.shares_vertex(f) && linked(L, e, f)) cs.insert(e, f);
            }
            continue;
        }
        const Arc arc = ce_arc(L, ce);
        auto exactly_one = [&](Vertex x, Vertex y) { return guarded(L, arc, x) != guarded(L, arc, y); };
        for (const auto& le : cd.lateral) {
            const Edge f(le.u, le.w);
            const Vertex near = ring == Ring::Outer ? le.u : le.w;
            if (!e.shares_vertex(f) && guarded(L, arc, near)) cs.insert(e, f);
        }
        for (std::size_t j = 0; j < cd.circle.size(); ++j) {
            const auto& cf = cd.circle[j];
            const Edge f(cf.u, cf.v);
            if (j == i || cf.face != Face::Lateral || L.of(cf.u) != ring || e.shares_vertex(f)) continue;
            const bool mine = exactly_one(f.a, f.b);
            const Arc other = ce_arc(L, cf);
            const bool theirs = guarded(L, other, e.a) != guarded(L, other, e.b);
            if (mine != theirs) bad("guard rule disagrees for " + text(e) + " and " + text(f));
            if (mine) cs.insert(e, f);
        }
    }
    return cs;
}

RimReport uncrossed_rim_edges(const CylindricalDrawing& cd) {
    const CrossingSet cs = crossing_set(cd);
    RimReport rep;
    auto scan = [&](std::vector<CylVertex> vs, RimStatus& st) {
        if (vs.size() < 2) return;
        std::sort(vs.begin(), vs.end(), [](const auto& x, const auto& y) { return x.angle < y.angle; });
        std::set<Edge> rims;
        for (std::size_t i = 0; i < vs.size(); ++i) rims.insert(Edge(vs[i].v, vs[(i + 1) % vs.size()].v));
        for (const Edge& e : rims) (cs.is_crossed(e) ? st.crossed : st.uncrossed).push_back(e);
        if (st.crossed.size() > 1) throw Error(Errc::InternalAssertion, "two crossed rim edges on one circle");
    };
    scan(cd.outer, rep.outer);
    scan(cd.inner, rep.inner);
    return rep;
}

CylindricalDrawing normalize_winding(const CylindricalDrawing& cd) {
    validate(cd);
    if (cd.lateral.empty()) return cd;
    Rational hi = cd.lateral.front().omega, lo = hi;
    bool all_small = true;
    for (const auto& le : cd.lateral) {
        hi = std::max(hi, le.omega);
        lo = std::min(lo, le.omega);
        all_small = all_small && abs(le.omega) < 1;
    }
    if (hi - lo >= 2) throw Error(Errc::RangeTooWide, "winding range " + to_string(hi - lo) + " is at least 2");
    // admissible rotations form the open interval (hi - 1, lo + 1)
    const Rational left = hi - 1, right = lo + 1;
    const Rational preferred = all_small ? Rational(0) : (hi + lo) / 2;
    std::vector<Rational> blocked;
    for (const auto& o : cd.outer)
        for (const auto& i : cd.inner) {
            const Rational base = frac(i.angle - o.angle);
            for (Rational t = base + floor(left); t < right + 1; t += 1)
                if (t > left && t < right) blocked.push_back(t);
        }
    Rational t = preferred;
    if (std::find(blocked.begin(), blocked.end(), preferred) != blocked.end()) {
        std::sort(blocked.begin(), blocked.end());
        blocked.erase(std::unique(blocked.begin(), blocked.end()), blocked.end());
        std::vector<Rational> cuts{left};
        cuts.insert(cuts.end(), blocked.begin(), blocked.end());
        cuts.push_back(right);
        std::optional<Rational> best;
        for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
            const Rational mid = (cuts[k] + cuts[k + 1]) / 2;
            if (!best || abs(mid - preferred) < abs(*best - preferred)) best = mid;
        }
        t = *best;
    }
    if (sgn(t) == 0) return cd;
    return rotate_outer(cd, t);
}

std::vector<EdgePair> find_double_spirals(const CylindricalDrawing& cd) {
    const Layout L(cd);
    std::vector<EdgePair> out;
    for (std::size_t i = 0; i < cd.lateral.size(); ++i)
        for (std::size_t j = i + 1; j < cd.lateral.size(); ++j) {
            const auto& e = cd.lateral[i];
            const auto& f = cd.lateral[j];
            if (e.u == f.u || e.w == f.w || sgn(e.omega) == 0 || sgn(e.omega) != sgn(f.omega)) continue;
            if (arcs_cover(le_wedge(L, e), le_wedge(L, f))) out.push_back(make_edge_pair(Edge(e.u, e.w), Edge(f.u, f.w)));
        }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

const LateralEdge& find_lateral(const CylindricalDrawing& cd, Edge e) {
    for (const auto& le : cd.lateral)
        if (Edge(le.u, le.w) == e) return le;
    throw Error(Errc::InternalAssertion, "missing lateral edge " + text(e));
}

/// Moves f's inner vertex out of e's wedge past e's outer vertex, dragging the inner vertices in between.
CylindricalDrawing resolve_spiral(const CylindricalDrawing& cd, const LateralEdge& e, const LateralEdge& f) {
    const Layout L(cd);
    const bool clockwise = sgn(e.omega) < 0;
    const Rational& ta = L.at(e.u);
    const Rational& td = L.at(f.w);
    // distance from d towards a in the direction of the move
    auto dist = [&](const Rational& x, const Rational& y) { return clockwise ? frac(y - x) : frac(x - y); };
    const Rational span = dist(td, ta);
    std::vector<std::pair<Rational, Vertex>> moved;  // by distance from d
    std::set<Vertex> moving;
    for (const auto& cv : cd.inner) {
        const Rational d = dist(td, cv.angle);
        if (cv.v == f.w || (sgn(d) > 0 && d < span)) {
            moved.emplace_back(d, cv.v);
            moving.insert(cv.v);
        }
    }
    std::sort(moved.begin(), moved.end());
    // free room just past a
    Rational gap(1);
    for (const auto& ring : {cd.outer, cd.inner})
        for (const auto& cv : ring) {
            if (moving.count(cv.v) || cv.v == e.u) continue;
            const Rational d = dist(ta, cv.angle);
            if (sgn(d) > 0 && d < gap) gap = d;
        }
    CylindricalDrawing out = cd;
    const auto count = static_cast<long>(moved.size());
    std::map<Vertex, Rational> shift;
    for (long k = 0; k < count; ++k) {
        // d lands nearest to a; the others keep their order behind it
        const Vertex v = moved[static_cast<std::size_t>(k)].second;
        const Rational step = gap * make_rational(k + 1, count + 1);
        const Rational target = clockwise ? frac(ta + step) : frac(ta - step);
        const Rational delta = clockwise ? frac(target - L.at(v)) : -frac(L.at(v) - target);
        shift[v] = delta;
        for (auto& cv : out.inner)
            if (cv.v == v) cv.angle = target;
    }
    for (auto& le : out.lateral)
        if (auto it = shift.find(le.w); it != shift.end()) le.omega += it->second;
    return out;
}

}  // namespace

CylindricalDrawing remove_double_spirals(const CylindricalDrawing& cd) {
    const CrossingSet before = crossing_set(cd);
    CylindricalDrawing cur = normalize_winding(cd);
    const std::size_t budget = find_double_spirals(cur).size();
    std::size_t steps = 0;
    for (auto spirals = find_double_spirals(cur); !spirals.empty(); spirals = find_double_spirals(cur)) {
        if (++steps > budget)
            throw Error(Errc::NonTermination, "double-spiral removal exceeded " + std::to_string(budget) + " steps");
        std::optional<EdgePair> pick;
        for (const auto& p : spirals)
            if (sgn(find_lateral(cur, p.first).omega) < 0) {
                pick = p;
                break;
            }
        if (!pick) pick = spirals.front();
        const LateralEdge e = find_lateral(cur, pick->first);
        const LateralEdge f = find_lateral(cur, pick->second);
        cur = normalize_winding(resolve_spiral(cur, e, f));
    }
    if (crossing_set(cur) != before) throw Error(Errc::InternalAssertion, "double-spiral removal changed the crossings");
    return cur;
}

CircularWiring to_circular_wiring(const CylindricalDrawing& cd) {
    const CrossingSet expected = crossing_set(cd);
    const Layout L(cd);
    for (const auto& le : cd.lateral)
        if (abs(le.omega) >= 1) throw Error(Errc::InvalidArgument, "windings not normalized");
    std::vector<Rational> vangles;
    for (int v = 1; v <= cd.n; ++v) vangles.push_back(L.at(v));
    {
        auto sorted = vangles;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw Error(Errc::InvalidArgument, "vertex angles must be distinct across both circles");
    }
    const Rational sep = min_separation(vangles);
    const std::vector<Strand> strands = build_strands(cd, L, sep);

    std::vector<Rational> crit = vangles;
    for (std::size_t i = 0; i < strands.size(); ++i)
        for (std::size_t j = i + 1; j < strands.size(); ++j) add_intersections(strands[i], strands[j], crit);
    std::sort(crit.begin(), crit.end());
    crit.erase(std::unique(crit.begin(), crit.end()), crit.end());

    const std::size_t C = crit.size();
    std::vector<std::vector<Edge>> after(C);  // order in the interval following crit[j]
    for (std::size_t j = 0; j < C; ++j) {
        const Rational next = j + 1 < C ? crit[j + 1] : crit.front() + 1;
        after[j] = radial_order(strands, frac((crit[j] + next) / 2));
    }
    std::map<Rational, Vertex> vertex_at;
    for (int v = 1; v <= cd.n; ++v) vertex_at[L.at(v)] = v;

    CircularWiring cw;
    cw.n = cd.n;
    cw.angle.assign(vangles.begin(), vangles.end());
    cw.base_order = after[C - 1];
    auto push_swaps = [&](const Rational& a, const std::vector<Edge>& from, const std::vector<Edge>& to) {
        std::vector<int> levels;
        bubble_realize(from, to, levels);
        for (int k : levels) {
            CircularEvent ev;
            ev.angle = a;
            ev.level = k;
            cw.events.push_back(std::move(ev));
        }
    };
    for (std::size_t j = 0; j < C; ++j) {
        const Rational& a = crit[j];
        const std::vector<Edge>& before = after[(j + C - 1) % C];
        const std::vector<Edge>& next = after[j];
        auto vit = vertex_at.find(a);
        if (vit == vertex_at.end()) {
            if (std::set<Edge>(before.begin(), before.end()) != std::set<Edge>(next.begin(), next.end()))
                mismatch("edge set changes away from a vertex");
            push_swaps(a, before, next);
            continue;
        }
        const Vertex v = vit->second;
        const Rational rv = L.of(v) == Ring::Outer ? 2 : 1;
        std::vector<Edge> ending, starting, pass_before, pass_after;
        int pos = -1;
        for (std::size_t k = 0; k < before.size(); ++k) {
            if (before[k].incident_to(v)) {
                if (pos < 0) pos = static_cast<int>(pass_before.size());
                ending.push_back(before[k]);
            } else {
                pass_before.push_back(before[k]);
            }
        }
        for (const Edge& e : next) (e.incident_to(v) ? starting : pass_after).push_back(e);
        if (std::set<Edge>(pass_before.begin(), pass_before.end()) != std::set<Edge>(pass_after.begin(), pass_after.end()))
            mismatch("passing edges change at vertex " + std::to_string(v));
        int below = 0;
        for (const auto& s : strands) {
            if (s.edge.incident_to(v)) continue;
            if (auto phi = s.lift(a)) {
                const Rational r = s.radius(*phi);
                if (r == rv) mismatch("edge " + text(s.edge) + " runs through vertex " + std::to_string(v));
                below += r < rv ? 1 : 0;
            }
        }
        if (pos >= 0 && pos != below) mismatch("ending edges at " + std::to_string(v) + " split by a passing edge");
        pos = below;
        std::vector<Edge> target(pass_after.begin(), pass_after.begin() + pos);
        target.insert(target.end(), ending.begin(), ending.end());
        target.insert(target.end(), pass_after.begin() + pos, pass_after.end());
        std::vector<Edge> check(pass_after.begin(), pass_after.begin() + pos);
        check.insert(check.end(), starting.begin(), starting.end());
        check.insert(check.end(), pass_after.begin() + pos, pass_after.end());
        if (check != next) mismatch("starting edges at " + std::to_string(v) + " split by a passing edge");
        push_swaps(a, before, target);
        CircularEvent ev;
        ev.kind = CircularEvent::Kind::Vertex;
        ev.angle = a;
        ev.v = v;
        ev.pos = pos;
        ev.ending = ending;
        ev.starting = starting;
        cw.events.push_back(std::move(ev));
    }
    try {
        validate(cw);
    } catch (const Error& err) {
        mismatch(std::string("realized wiring is not simple: ") + err.what());
    }
    if (crossing_set(cw) != expected) mismatch("realized crossings differ from the rule-based crossings");
    return cw;
}

bool is_strongly_cylindrical(const CylindricalDrawing& cd) {
    return std::all_of(cd.circle.begin(), cd.circle.end(), [](const CircleEdge& ce) { return ce.face == Face::Home; });
}

CircularWiring to_strongly_c_monotone(const CylindricalDrawing& cd) {
    if (!is_strongly_cylindrical(cd)) throw Error(Errc::InvalidArgument, "drawing is not strongly cylindrical");
    const CrossingSet expected = crossing_set(cd);
    CylindricalDrawing d = remove_double_spirals(cd);
    const Layout L(d);
    std::vector<Arc> wedges;
    for (const auto& le : d.lateral) wedges.push_back(le_wedge(L, le));

    // ray through the first gap after the smallest-angle outer vertex
    const auto& anchor_ring = d.outer.empty() ? d.inner : d.outer;
    Rational anchor = anchor_ring.front().angle;
    for (const auto& cv : anchor_ring) anchor = std::min(anchor, cv.angle);
    Rational gap(1);
    for (int v = 1; v <= d.n; ++v) {
        const Rational g = frac(L.at(v) - anchor);
        if (sgn(g) > 0 && g < gap) gap = g;
    }
    const Rational ray = frac(anchor + gap / 2);

    for (auto& ce : d.circle) {
        const Arc ccw = make_arc(L.at(ce.u), L.at(ce.v));
        const Arc cw = make_arc(L.at(ce.v), L.at(ce.u));
        auto forbidden = [&](const Arc& a) {
            return std::any_of(wedges.begin(), wedges.end(), [&](const Arc& w) { return arcs_cover(a, w); });
        };
        const bool no_ccw = forbidden(ccw), no_cw = forbidden(cw);
        if (no_ccw && no_cw)
            throw Error(Errc::BothDirectionsForbidden, "edge " + text(Edge(ce.u, ce.v)) + " has no admissible direction");
        if (no_ccw) ce.arc = ArcDir::Cw;
        else if (no_cw) ce.arc = ArcDir::Ccw;
        else ce.arc = ccw.contains(ray) ? ArcDir::Cw : ArcDir::Ccw;
    }
    CircularWiring out = to_circular_wiring(d);
    if (crossing_set(out) != expected) throw Error(Errc::RealizationMismatch, "crossings changed");
    if (!is_strongly_c_monotone(out)) throw Error(Errc::NotStronglyCMonotone, "a star covers the circle");
    return out;
}

}  // namespace drawkit
