#include "drawkit/monotone.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace drawkit {

namespace {

std::string edge_text(Edge e) { return "{" + std::to_string(e.a) + "," + std::to_string(e.b) + "}"; }

[[noreturn]] void bad(const std::string& msg) { throw Error(Errc::InvalidDrawing, msg); }

void check_incident_lists(int n, Vertex v, const std::vector<Edge>& left, const std::vector<Edge>& right,
                          Errc code) {
    std::vector<Edge> l = left, r = right, el, er;
    for (int u = 1; u < v; ++u) el.emplace_back(u, v);
    for (int u = v + 1; u <= n; ++u) er.emplace_back(v, u);
    std::sort(l.begin(), l.end());
    std::sort(r.begin(), r.end());
    if (l != el || r != er)
        throw Error(code, "incident edge orders at vertex " + std::to_string(v) + " do not list its edges");
}

std::size_t index_of(const std::vector<Edge>& order, Edge e) {
    return static_cast<std::size_t>(std::find(order.begin(), order.end(), e) - order.begin());
}

}  // namespace

WiringTrace trace(const LinearWiring& lw) {
    const int n = lw.n;
    if (n < 2) bad("wiring needs n >= 2");
    const auto N = static_cast<std::size_t>(n);
    if (lw.strips.size() != N - 1 || lw.vertex_pos.size() != N || lw.left_order.size() != N ||
        lw.right_order.size() != N)
        bad("wiring field sizes do not match n");
    for (int v = 1; v <= n; ++v)
        check_incident_lists(n, v, lw.left_order[static_cast<std::size_t>(v - 1)],
                             lw.right_order[static_cast<std::size_t>(v - 1)], Errc::InvalidDrawing);

    WiringTrace t;
    t.passing.resize(N);
    t.enter.resize(N - 1);
    t.exit.resize(N - 1);
    t.swaps.resize(N - 1);
    std::set<EdgePair> swapped;
    std::vector<Edge> cur;
    for (int v = 1; v <= n; ++v) {
        const auto vi = static_cast<std::size_t>(v - 1);
        const int pos = lw.vertex_pos[vi];
        const auto& ending = lw.left_order[vi];
        if (pos < 0 || static_cast<std::size_t>(pos) + ending.size() > cur.size())
            bad("vertex position of " + std::to_string(v) + " out of range");
        if (!std::equal(ending.begin(), ending.end(), cur.begin() + pos))
            bad("edges ending at " + std::to_string(v) + " do not arrive as the block left_order");
        cur.erase(cur.begin() + pos, cur.begin() + pos + static_cast<std::ptrdiff_t>(ending.size()));
        t.passing[vi] = cur;
        if (v == n) break;
        const auto& starting = lw.right_order[vi];
        cur.insert(cur.begin() + pos, starting.begin(), starting.end());
        t.enter[vi] = cur;
        for (int k : lw.strips[vi]) {
            if (k < 0 || static_cast<std::size_t>(k) + 1 >= cur.size())
                bad("swap position " + std::to_string(k) + " invalid in strip " + std::to_string(v));
            const Edge e = cur[static_cast<std::size_t>(k)], f = cur[static_cast<std::size_t>(k) + 1];
            if (e.shares_vertex(f)) bad("incident edges " + edge_text(e) + " and " + edge_text(f) + " swap");
            const EdgePair p = make_edge_pair(e, f);
            if (!swapped.insert(p).second) bad("edges " + edge_text(e) + " and " + edge_text(f) + " swap twice");
            t.swaps[vi].push_back(p);
            std::swap(cur[static_cast<std::size_t>(k)], cur[static_cast<std::size_t>(k) + 1]);
        }
        t.exit[vi] = cur;
    }
    return t;
}

void validate(const LinearWiring& lw) { (void)trace(lw); }

CrossingSet crossing_set(const LinearWiring& lw) {
    const WiringTrace t = trace(lw);
    std::vector<EdgePair> pairs;
    for (const auto& s : t.swaps) pairs.insert(pairs.end(), s.begin(), s.end());
    return CrossingSet(lw.n, std::move(pairs));
}

LinearWiring induce(const LinearWiring& lw, std::vector<Vertex> subset) {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    if (subset.size() < 2) throw Error(Errc::SubsetTooSmall, "induced wiring needs at least 2 vertices");
    const int n = lw.n;
    std::vector<int> label(static_cast<std::size_t>(n + 1), 0);
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] < 1 || subset[i] > n) throw Error(Errc::InvalidArgument, "subset vertex out of range");
        label[static_cast<std::size_t>(subset[i])] = static_cast<int>(i + 1);
    }
    auto kept = [&](Edge e) { return label[static_cast<std::size_t>(e.a)] && label[static_cast<std::size_t>(e.b)]; };
    auto relabel = [&](Edge e) {
        return Edge(label[static_cast<std::size_t>(e.a)], label[static_cast<std::size_t>(e.b)]);
    };
    auto filtered = [&](const std::vector<Edge>& order) {
        std::vector<Edge> out;
        for (Edge e : order)
            if (kept(e)) out.push_back(relabel(e));
        return out;
    };

    const WiringTrace t = trace(lw);
    const int k = static_cast<int>(subset.size());
    LinearWiring out;
    out.n = k;
    out.strips.resize(static_cast<std::size_t>(k - 1));
    out.vertex_pos.resize(static_cast<std::size_t>(k));
    out.left_order.resize(static_cast<std::size_t>(k));
    out.right_order.resize(static_cast<std::size_t>(k));
    for (int j = 1; j <= k; ++j) {
        const Vertex v = subset[static_cast<std::size_t>(j - 1)];
        const auto vi = static_cast<std::size_t>(v - 1);
        const auto& passing = t.passing[vi];
        int below = 0;
        for (int i = 0; i < lw.vertex_pos[vi]; ++i) below += kept(passing[static_cast<std::size_t>(i)]) ? 1 : 0;
        out.vertex_pos[static_cast<std::size_t>(j - 1)] = below;
        out.left_order[static_cast<std::size_t>(j - 1)] = filtered(lw.left_order[vi]);
        out.right_order[static_cast<std::size_t>(j - 1)] = filtered(lw.right_order[vi]);
    }
    // Replay the original strips, keeping swaps between retained edges.
    for (int j = 1; j < k; ++j) {
        auto& strip = out.strips[static_cast<std::size_t>(j - 1)];
        for (Vertex v = subset[static_cast<std::size_t>(j - 1)]; v < subset[static_cast<std::size_t>(j)]; ++v) {
            const auto vi = static_cast<std::size_t>(v - 1);
            std::vector<Edge> cur = t.enter[vi];
            for (int pos : lw.strips[vi]) {
                const auto p = static_cast<std::size_t>(pos);
                if (kept(cur[p]) && kept(cur[p + 1])) {
                    int idx = 0;
                    for (std::size_t i = 0; i < p; ++i) idx += kept(cur[i]) ? 1 : 0;
                    strip.push_back(idx);
                }
                std::swap(cur[p], cur[p + 1]);
            }
        }
    }
    return out;
}

std::map<Vertex, Side> vertex_sides(const LinearWiring& lw, Edge e) {
    const WiringTrace t = trace(lw);
    std::map<Vertex, Side> out;
    for (Vertex v = e.a + 1; v < e.b; ++v) {
        const auto vi = static_cast<std::size_t>(v - 1);
        const std::size_t idx = index_of(t.passing[vi], e);
        // the strand below the vertex leaves the vertex above it
        out[v] = idx < static_cast<std::size_t>(lw.vertex_pos[vi]) ? Side::Above : Side::Below;
    }
    return out;
}

XBoundedData::XBoundedData(int n)
    : left_order(static_cast<std::size_t>(n)),
      right_order(static_cast<std::size_t>(n)),
      n_(n),
      sides_(static_cast<std::size_t>(edge_count(n))) {
    for (const Edge& e : all_edges(n))
        sides_[static_cast<std::size_t>(edge_index(n, e))].assign(static_cast<std::size_t>(e.b - e.a - 1), Side::Above);
}

Side XBoundedData::passes(Edge e, Vertex v) const {
    if (!(e.a < v && v < e.b)) throw Error(Errc::InvalidArgument, "vertex is not strictly inside the edge's span");
    return sides_[static_cast<std::size_t>(edge_index(n_, e))][static_cast<std::size_t>(v - e.a - 1)];
}

void XBoundedData::set_passes(Edge e, Vertex v, Side s) {
    if (!(e.a < v && v < e.b)) throw Error(Errc::InvalidArgument, "vertex is not strictly inside the edge's span");
    sides_[static_cast<std::size_t>(edge_index(n_, e))][static_cast<std::size_t>(v - e.a - 1)] = s;
}

Order partial_order_at(const XBoundedData& xb, Vertex v, Edge e, Edge f) {
    if (e == f) return Order::Incomparable;
    const bool e_inc = e.incident_to(v), f_inc = f.incident_to(v);
    const bool e_pass = e.a < v && v < e.b, f_pass = f.a < v && v < f.b;
    const auto vi = static_cast<std::size_t>(v - 1);
    if (e_inc && f_inc) {
        const bool e_right = e.other(v) > v, f_right = f.other(v) > v;
        if (e_right != f_right) return Order::Incomparable;
        const auto& order = e_right ? xb.right_order[vi] : xb.left_order[vi];
        return index_of(order, e) < index_of(order, f) ? Order::Less : Order::Greater;
    }
    if (e_pass && f_inc) return xb.passes(e, v) == Side::Below ? Order::Less : Order::Greater;
    if (f_pass && e_inc) return xb.passes(f, v) == Side::Above ? Order::Less : Order::Greater;
    if (e_pass && f_pass) {
        const Side se = xb.passes(e, v), sf = xb.passes(f, v);
        if (se == sf) return Order::Incomparable;
        return se == Side::Below ? Order::Less : Order::Greater;
    }
    return Order::Incomparable;
}

CrossingSet predicted_crossings(const XBoundedData& xb) {
    const int n = xb.n();
    const auto edges = all_edges(n);
    CrossingSet cs(n);
    auto flips = [&](Edge e, Edge f, Vertex v, Vertex w) {
        const Order o1 = partial_order_at(xb, v, e, f), o2 = partial_order_at(xb, w, e, f);
        if (o1 == Order::Incomparable || o2 == Order::Incomparable)
            throw Error(Errc::IncomparableAtRequiredVertex,
                        edge_text(e) + " and " + edge_text(f) + " are incomparable at a required vertex");
        return o1 != o2;
    };
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            Edge e = edges[i], f = edges[j];
            if (e.shares_vertex(f)) continue;
            if (f.a < e.a) std::swap(e, f);
            const bool nested = f.b < e.b;
            const bool linked = f.a < e.b && e.b < f.b;
            if (nested && flips(e, f, f.a, f.b)) cs.insert(e, f);
            if (linked && flips(e, f, f.a, e.b)) cs.insert(e, f);
        }
    return cs;
}

void bubble_realize(const std::vector<Edge>& from, const std::vector<Edge>& to, std::vector<int>& swaps) {
    if (from.size() != to.size()) throw Error(Errc::InternalAssertion, "bubble_realize: orders differ in size");
    std::vector<std::size_t> rank(from.size());
    for (std::size_t i = 0; i < from.size(); ++i) {
        const std::size_t r = index_of(to, from[i]);
        if (r == to.size()) throw Error(Errc::InternalAssertion, "bubble_realize: orders differ in content");
        rank[i] = r;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k + 1 < rank.size(); ++k)
            if (rank[k] > rank[k + 1]) {
                std::swap(rank[k], rank[k + 1]);
                swaps.push_back(static_cast<int>(k));
                changed = true;
            }
    }
}

LinearWiring to_x_monotone(const XBoundedData& xb) {
    const int n = xb.n();
    if (n < 2) throw Error(Errc::InconsistentInput, "x-bounded data needs n >= 2");
    const auto N = static_cast<std::size_t>(n);
    if (xb.left_order.size() != N || xb.right_order.size() != N)
        throw Error(Errc::InconsistentInput, "incident edge orders missing");
    for (int v = 1; v <= n; ++v)
        check_incident_lists(n, v, xb.left_order[static_cast<std::size_t>(v - 1)],
                             xb.right_order[static_cast<std::size_t>(v - 1)], Errc::InconsistentInput);

    LinearWiring lw;
    lw.n = n;
    lw.strips.resize(N - 1);
    lw.vertex_pos.assign(N, 0);
    lw.left_order.resize(N);
    lw.right_order = xb.right_order;

    std::vector<Edge> cur;  // edges passing the current vertex, bottom to top
    for (int i = 1; i < n; ++i) {
        const auto ii = static_cast<std::size_t>(i - 1);
        auto passes_below = [&](Edge e) { return xb.passes(e, i) == Side::Below; };
        // the previous strip already grouped these edges around vertex i
        if (!std::is_partitioned(cur.begin(), cur.end(), passes_below))
            throw Error(Errc::InternalAssertion, "passing edges out of group order");
        const auto pos = std::partition_point(cur.begin(), cur.end(), passes_below) - cur.begin();
        lw.vertex_pos[ii] = static_cast<int>(pos);

        std::vector<Edge> left(cur.begin(), cur.begin() + pos);
        left.insert(left.end(), xb.right_order[ii].begin(), xb.right_order[ii].end());
        left.insert(left.end(), cur.begin() + pos, cur.end());

        const Vertex next = i + 1;
        std::vector<Edge> below, ending, above;
        for (Edge e : left) {
            if (e.b == next)
                ending.push_back(e);
            else if (xb.passes(e, next) == Side::Below)
                below.push_back(e);
            else
                above.push_back(e);
        }
        std::vector<Edge> right = below;
        right.insert(right.end(), ending.begin(), ending.end());
        right.insert(right.end(), above.begin(), above.end());
        bubble_realize(left, right, lw.strips[ii]);

        lw.left_order[static_cast<std::size_t>(next - 1)] = ending;
        cur = below;
        cur.insert(cur.end(), above.begin(), above.end());
    }
    CrossingSet got;
    try {
        got = crossing_set(lw);
    } catch (const Error& err) {
        throw Error(Errc::InconsistentInput, std::string("redraw is not simple: ") + err.what());
    }
    if (got != predicted_crossings(xb))
        throw Error(Errc::InconsistentInput, "redrawn crossings differ from the predicted crossings");
    return lw;
}

XBoundedData extract_xbounded(const LinearWiring& lw) {
    const WiringTrace t = trace(lw);
    XBoundedData xb(lw.n);
    for (int v = 1; v <= lw.n; ++v) {
        const auto vi = static_cast<std::size_t>(v - 1);
        const auto& passing = t.passing[vi];
        for (std::size_t i = 0; i < passing.size(); ++i)
            xb.set_passes(passing[i], v,
                          i < static_cast<std::size_t>(lw.vertex_pos[vi]) ? Side::Below : Side::Above);
        xb.left_order[vi] = lw.left_order[vi];
        xb.right_order[vi] = lw.right_order[vi];
    }
    return xb;
}

}  // namespace drawkit
