#include "drawkit/circular.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace drawkit {

bool Arc::contains(const Rational& a) const { return frac(a - start) <= length; }

Arc make_arc(const Rational& from, const Rational& to) {
    const Rational len = frac(to - from);
    if (sgn(len) == 0) throw Error(Errc::InvalidArgument, "arc endpoints coincide");
    return Arc{frac(from), len};
}

bool arcs_cover(const Arc& x, const Arc& y) {
    // the open complement of x, starting where x ends, must lie inside y
    const Rational d = frac(x.start + x.length - y.start);
    return d + (1 - x.length) <= y.length;
}

bool arcs_cover(const std::vector<Arc>& arcs) {
    if (arcs.empty()) return false;
    std::vector<Rational> bounds;
    for (const Arc& a : arcs) {
        bounds.push_back(a.start);
        bounds.push_back(frac(a.start + a.length));
    }
    std::sort(bounds.begin(), bounds.end());
    bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());
    // closed arcs: only the open gaps between consecutive boundary points can be uncovered
    for (std::size_t i = 0; i < bounds.size(); ++i) {
        const Rational& lo = bounds[i];
        const Rational hi = i + 1 < bounds.size() ? bounds[i + 1] : bounds.front() + 1;
        const Rational mid = frac((lo + hi) / 2);
        if (std::none_of(arcs.begin(), arcs.end(), [&](const Arc& a) { return a.contains(mid); })) return false;
    }
    return true;
}

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(Errc::InvalidDrawing, msg); }

std::string edge_text(Edge e) { return "{" + std::to_string(e.a) + "," + std::to_string(e.b) + "}"; }

struct CircularRun {
    std::vector<std::vector<Edge>> before;  // order ahead of each event
    std::vector<EdgePair> swaps;
    std::vector<int> start_event;  // per edge index
    std::vector<int> end_event;
};

CircularRun run(const CircularWiring& cw) {
    const int n = cw.n;
    if (n < 2) bad("circular wiring needs n >= 2");
    if (static_cast<int>(cw.angle.size()) != n) bad("expected one angle per vertex");
    for (int v = 0; v < n; ++v) {
        const Rational& a = cw.angle[static_cast<std::size_t>(v)];
        if (a < 0 || a >= 1) bad("vertex angle outside [0,1)");
        for (int u = 0; u < v; ++u)
            if (cw.angle[static_cast<std::size_t>(u)] == a) bad("two vertices share an angle");
    }
    const int m = edge_count(n);
    CircularRun r;
    r.start_event.assign(static_cast<std::size_t>(m), -1);
    r.end_event.assign(static_cast<std::size_t>(m), -1);
    std::vector<bool> seen_vertex(static_cast<std::size_t>(n + 1), false);
    auto check_edge = [&](Edge e) {
        if (e.a < 1 || e.b > n || e.a >= e.b) bad("edge out of range");
    };

    for (std::size_t i = 0; i < cw.events.size(); ++i) {
        const auto& ev = cw.events[i];
        if (ev.angle < 0 || ev.angle >= 1) bad("event angle outside [0,1)");
        if (i > 0 && ev.angle < cw.events[i - 1].angle) bad("events not sorted by angle");
        if (ev.kind != CircularEvent::Kind::Vertex) continue;
        if (ev.v < 1 || ev.v > n || seen_vertex[static_cast<std::size_t>(ev.v)]) bad("bad or repeated vertex event");
        seen_vertex[static_cast<std::size_t>(ev.v)] = true;
        if (ev.angle != cw.angle[static_cast<std::size_t>(ev.v - 1)]) bad("vertex event away from its vertex angle");
        for (Edge e : ev.starting) {
            check_edge(e);
            if (!e.incident_to(ev.v)) bad("vertex event starts a non-incident edge");
            auto& slot = r.start_event[static_cast<std::size_t>(edge_index(n, e))];
            if (slot >= 0) bad("edge " + edge_text(e) + " starts twice");
            slot = static_cast<int>(i);
        }
        for (Edge e : ev.ending) {
            check_edge(e);
            if (!e.incident_to(ev.v)) bad("vertex event ends a non-incident edge");
            auto& slot = r.end_event[static_cast<std::size_t>(edge_index(n, e))];
            if (slot >= 0) bad("edge " + edge_text(e) + " ends twice");
            slot = static_cast<int>(i);
        }
    }
    for (int v = 1; v <= n; ++v)
        if (!seen_vertex[static_cast<std::size_t>(v)]) bad("vertex " + std::to_string(v) + " has no event");
    std::set<Edge> alive_at_zero;
    for (const Edge& e : all_edges(n)) {
        const auto k = static_cast<std::size_t>(edge_index(n, e));
        if (r.start_event[k] < 0 || r.end_event[k] < 0) bad("edge " + edge_text(e) + " missing from the events");
        if (cw.events[static_cast<std::size_t>(r.start_event[k])].v == cw.events[static_cast<std::size_t>(r.end_event[k])].v)
            bad("edge " + edge_text(e) + " starts and ends at the same vertex");
        if (r.end_event[k] < r.start_event[k]) alive_at_zero.insert(e);
    }
    if (std::set<Edge>(cw.base_order.begin(), cw.base_order.end()) != alive_at_zero ||
        alive_at_zero.size() != cw.base_order.size())
        bad("base order does not list exactly the edges alive at angle 0");

    std::set<EdgePair> swapped;
    std::vector<Edge> cur = cw.base_order;
    for (const auto& ev : cw.events) {
        r.before.push_back(cur);
        if (ev.kind == CircularEvent::Kind::Vertex) {
            if (ev.pos < 0 || static_cast<std::size_t>(ev.pos) + ev.ending.size() > cur.size())
                bad("vertex position of " + std::to_string(ev.v) + " out of range");
            if (!std::equal(ev.ending.begin(), ev.ending.end(), cur.begin() + ev.pos))
                bad("edges ending at " + std::to_string(ev.v) + " do not arrive as a block");
            cur.erase(cur.begin() + ev.pos, cur.begin() + ev.pos + static_cast<std::ptrdiff_t>(ev.ending.size()));
            cur.insert(cur.begin() + ev.pos, ev.starting.begin(), ev.starting.end());
        } else {
            if (ev.level < 0 || static_cast<std::size_t>(ev.level) + 1 >= cur.size()) bad("swap level out of range");
            const Edge e = cur[static_cast<std::size_t>(ev.level)], f = cur[static_cast<std::size_t>(ev.level) + 1];
            if (e.shares_vertex(f)) bad("incident edges " + edge_text(e) + " and " + edge_text(f) + " swap");
            const EdgePair p = make_edge_pair(e, f);
            if (!swapped.insert(p).second) bad("edges " + edge_text(e) + " and " + edge_text(f) + " swap twice");
            r.swaps.push_back(p);
            std::swap(cur[static_cast<std::size_t>(ev.level)], cur[static_cast<std::size_t>(ev.level) + 1]);
        }
    }
    if (cur != cw.base_order) bad("radial order after a full turn differs from the base order");
    return r;
}

int kept_below(const std::vector<Edge>& order, std::size_t limit, const std::vector<int>& label) {
    int count = 0;
    for (std::size_t i = 0; i < limit; ++i)
        count += (label[static_cast<std::size_t>(order[i].a)] && label[static_cast<std::size_t>(order[i].b)]) ? 1 : 0;
    return count;
}

}  // namespace

void validate(const CircularWiring& cw) { (void)run(cw); }

CrossingSet crossing_set(const CircularWiring& cw) { return CrossingSet(cw.n, run(cw).swaps); }

Arc wedge(const CircularWiring& cw, Edge e) {
    Vertex from = 0, to = 0;
    for (const auto& ev : cw.events) {
        if (ev.kind != CircularEvent::Kind::Vertex) continue;
        if (std::find(ev.starting.begin(), ev.starting.end(), e) != ev.starting.end()) from = ev.v;
        if (std::find(ev.ending.begin(), ev.ending.end(), e) != ev.ending.end()) to = ev.v;
    }
    if (!from || !to) throw Error(Errc::InvalidArgument, "edge " + edge_text(e) + " not in the wiring");
    return make_arc(cw.angle[static_cast<std::size_t>(from - 1)], cw.angle[static_cast<std::size_t>(to - 1)]);
}

StrongCMonotoneReport strong_c_monotone_report(const CircularWiring& cw) {
    const CircularRun r = run(cw);
    const auto edges = all_edges(cw.n);
    std::vector<Arc> w;
    for (const Edge& e : edges) {
        const auto k = static_cast<std::size_t>(edge_index(cw.n, e));
        const Vertex from = cw.events[static_cast<std::size_t>(r.start_event[k])].v;
        const Vertex to = cw.events[static_cast<std::size_t>(r.end_event[k])].v;
        w.push_back(make_arc(cw.angle[static_cast<std::size_t>(from - 1)], cw.angle[static_cast<std::size_t>(to - 1)]));
    }
    StrongCMonotoneReport rep;
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (arcs_cover(w[i], w[j])) {
                rep.no_covering_pair = false;
                if (edges[i].shares_vertex(edges[j])) rep.no_covering_incident_pair = false;
            }
    for (int v = 1; v <= cw.n; ++v) {
        std::vector<Arc> star;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (edges[i].incident_to(v)) star.push_back(w[i]);
        if (arcs_cover(star)) rep.no_covering_star = false;
    }
    return rep;
}

bool is_strongly_c_monotone(const CircularWiring& cw) {
    const auto rep = strong_c_monotone_report(cw);
    if (rep.no_covering_pair != rep.no_covering_incident_pair || rep.no_covering_pair != rep.no_covering_star)
        throw Error(Errc::InternalAssertion, "pair, incident-pair and star covering checks disagree");
    return rep.no_covering_star;
}

std::vector<GapEdge> gap_edges(const CircularWiring& cw) {
    const int n = cw.n;
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) order[static_cast<std::size_t>(v - 1)] = v;
    std::sort(order.begin(), order.end(), [&](Vertex x, Vertex y) {
        return cw.angle[static_cast<std::size_t>(x - 1)] < cw.angle[static_cast<std::size_t>(y - 1)];
    });
    std::vector<GapEdge> out;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Vertex u = order[i], v = order[(i + 1) % order.size()];
        const Edge e(u, v);
        const Arc gap = make_arc(cw.angle[static_cast<std::size_t>(u - 1)], cw.angle[static_cast<std::size_t>(v - 1)]);
        out.push_back({e, wedge(cw, e) == gap});
    }
    return out;
}

LinearCut cut_to_linear(const CircularWiring& cw, const Rational& angle_in) {
    const CircularRun r = run(cw);
    const int n = cw.n;
    const Rational cut = frac(angle_in);
    for (int v = 1; v <= n; ++v)
        if (cw.angle[static_cast<std::size_t>(v - 1)] == cut)
            throw Error(Errc::CutBlocked, "vertex " + std::to_string(v) + " lies on the cut");
    for (const Edge& e : all_edges(n)) {
        const auto k = static_cast<std::size_t>(edge_index(n, e));
        const Vertex from = cw.events[static_cast<std::size_t>(r.start_event[k])].v;
        const Vertex to = cw.events[static_cast<std::size_t>(r.end_event[k])].v;
        if (make_arc(cw.angle[static_cast<std::size_t>(from - 1)], cw.angle[static_cast<std::size_t>(to - 1)]).contains(cut))
            throw Error(Errc::CutBlocked, "edge " + edge_text(e) + " spans the cut");
    }
    // first event strictly after the cut, cyclically
    std::size_t first = 0;
    while (first < cw.events.size() && cw.events[first].angle <= cut) ++first;
    if (first == cw.events.size()) first = 0;

    LinearCut out;
    std::vector<int> label(static_cast<std::size_t>(n + 1), 0);
    for (std::size_t s = 0; s < cw.events.size(); ++s) {
        const auto& ev = cw.events[(first + s) % cw.events.size()];
        if (ev.kind == CircularEvent::Kind::Vertex) {
            out.original_of.push_back(ev.v);
            label[static_cast<std::size_t>(ev.v)] = static_cast<int>(out.original_of.size());
        }
    }
    auto relabel = [&](Edge e) { return Edge(label[static_cast<std::size_t>(e.a)], label[static_cast<std::size_t>(e.b)]); };
    LinearWiring& lw = out.wiring;
    lw.n = n;
    lw.strips.resize(static_cast<std::size_t>(n - 1));
    lw.vertex_pos.resize(static_cast<std::size_t>(n));
    lw.left_order.resize(static_cast<std::size_t>(n));
    lw.right_order.resize(static_cast<std::size_t>(n));
    int seen = 0;
    for (std::size_t s = 0; s < cw.events.size(); ++s) {
        const auto& ev = cw.events[(first + s) % cw.events.size()];
        if (ev.kind == CircularEvent::Kind::Vertex) {
            const auto vi = static_cast<std::size_t>(seen);
            lw.vertex_pos[vi] = ev.pos;
            for (Edge e : ev.ending) lw.left_order[vi].push_back(relabel(e));
            for (Edge e : ev.starting) lw.right_order[vi].push_back(relabel(e));
            ++seen;
        } else {
            if (seen < 1 || seen >= n) throw Error(Errc::InternalAssertion, "swap outside the cut span");
            lw.strips[static_cast<std::size_t>(seen - 1)].push_back(ev.level);
        }
    }
    validate(lw);
    return out;
}

CircularWiring induce(const CircularWiring& cw, std::vector<Vertex> subset) {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    if (subset.size() < 2) throw Error(Errc::SubsetTooSmall, "induced wiring needs at least 2 vertices");
    const CircularRun r = run(cw);
    std::vector<int> label(static_cast<std::size_t>(cw.n + 1), 0);
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] < 1 || subset[i] > cw.n) throw Error(Errc::InvalidArgument, "subset vertex out of range");
        label[static_cast<std::size_t>(subset[i])] = static_cast<int>(i + 1);
    }
    auto kept = [&](Edge e) { return label[static_cast<std::size_t>(e.a)] && label[static_cast<std::size_t>(e.b)]; };
    auto relabel = [&](Edge e) { return Edge(label[static_cast<std::size_t>(e.a)], label[static_cast<std::size_t>(e.b)]); };
    auto filtered = [&](const std::vector<Edge>& order) {
        std::vector<Edge> o;
        for (Edge e : order)
            if (kept(e)) o.push_back(relabel(e));
        return o;
    };

    CircularWiring out;
    out.n = static_cast<int>(subset.size());
    for (Vertex v : subset) out.angle.push_back(cw.angle[static_cast<std::size_t>(v - 1)]);
    out.base_order = filtered(cw.base_order);
    for (std::size_t i = 0; i < cw.events.size(); ++i) {
        const auto& ev = cw.events[i];
        const auto& before = r.before[i];
        if (ev.kind == CircularEvent::Kind::Vertex) {
            if (!label[static_cast<std::size_t>(ev.v)]) continue;
            CircularEvent ne;
            ne.kind = CircularEvent::Kind::Vertex;
            ne.angle = ev.angle;
            ne.v = label[static_cast<std::size_t>(ev.v)];
            ne.pos = kept_below(before, static_cast<std::size_t>(ev.pos), label);
            ne.ending = filtered(ev.ending);
            ne.starting = filtered(ev.starting);
            out.events.push_back(std::move(ne));
        } else {
            const auto k = static_cast<std::size_t>(ev.level);
            if (!kept(before[k]) || !kept(before[k + 1])) continue;
            CircularEvent ne;
            ne.angle = ev.angle;
            ne.level = kept_below(before, k, label);
            out.events.push_back(std::move(ne));
        }
    }
    validate(out);
    return out;
}

}  // namespace drawkit
