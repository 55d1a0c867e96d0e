// Small brute-force helpers shared by the unit tests. None of them calls into
// the constructive path code, so they can serve as independent checks.
#ifndef DRAWKIT_TESTS_SUPPORT_HPP
#define DRAWKIT_TESTS_SUPPORT_HPP

#include "drawkit/crossing_set.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace testsupport {

using drawkit::Edge;
using drawkit::Vertex;

inline bool nested(Edge e, Edge f) {
    return (e.a < f.a && f.b < e.b) || (f.a < e.a && e.b < f.b);
}

inline bool linked(Edge e, Edge f) {
    return (e.a < f.a && f.a < e.b && e.b < f.b) || (f.a < e.a && e.a < f.b && f.b < e.b);
}

/// All independent pairs of K_n satisfying `rule`, as a CrossingSet.
inline drawkit::CrossingSet pairs_by_rule(int n, const std::function<bool(Edge, Edge)>& rule) {
    drawkit::CrossingSet cs(n);
    const auto edges = drawkit::all_edges(n);
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (!edges[i].shares_vertex(edges[j]) && rule(edges[i], edges[j])) cs.insert(edges[i], edges[j]);
    return cs;
}

inline long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Plain pairwise check, written without the library helpers.
inline bool plain_crossing_free(const drawkit::CrossingSet& cs, const std::vector<Vertex>& p, bool closed) {
    std::vector<Edge> es;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) es.emplace_back(p[i], p[i + 1]);
    if (closed && p.size() > 2) es.emplace_back(p.back(), p.front());
    for (const auto& pr : cs.pairs()) {
        const bool x = std::find(es.begin(), es.end(), pr.first) != es.end();
        const bool y = std::find(es.begin(), es.end(), pr.second) != es.end();
        if (x && y) return false;
    }
    return true;
}

inline bool valid_ham_path(const drawkit::CrossingSet& cs, const std::vector<Vertex>& p, Vertex a, Vertex b) {
    const int n = cs.n();
    if (static_cast<int>(p.size()) != n || p.front() != a || p.back() != b) return false;
    std::set<Vertex> seen(p.begin(), p.end());
    if (static_cast<int>(seen.size()) != n || *seen.begin() != 1 || *seen.rbegin() != n) return false;
    return plain_crossing_free(cs, p, false);
}

/// Every crossing-free Hamiltonian a-b path, by permuting the interior vertices.
inline std::vector<std::vector<Vertex>> all_cf_paths(const drawkit::CrossingSet& cs, Vertex a, Vertex b) {
    std::vector<Vertex> mid;
    for (Vertex v = 1; v <= cs.n(); ++v)
        if (v != a && v != b) mid.push_back(v);
    std::vector<std::vector<Vertex>> out;
    do {
        std::vector<Vertex> p{a};
        p.insert(p.end(), mid.begin(), mid.end());
        p.push_back(b);
        if (plain_crossing_free(cs, p, false)) out.push_back(p);
    } while (std::next_permutation(mid.begin(), mid.end()));
    return out;
}

}  // namespace testsupport

#endif
