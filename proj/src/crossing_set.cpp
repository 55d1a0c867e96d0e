#include "drawkit/crossing_set.hpp"

#include <algorithm>
#include <string>

namespace drawkit {

namespace {

void check_pair(int n, Edge e, Edge f) {
    auto in_range = [n](Edge x) { return x.a >= 1 && x.b <= n && x.a < x.b; };
    if (!in_range(e) || !in_range(f))
        throw Error(Errc::InvalidArgument, "edge out of range for n=" + std::to_string(n));
    if (e.shares_vertex(f)) throw Error(Errc::InvalidArgument, "crossing pair of incident edges");
}

}  // namespace

CrossingSet::CrossingSet(int n, std::vector<EdgePair> pairs) : n_(n), pairs_(std::move(pairs)) {
    for (auto& p : pairs_) {
        check_pair(n_, p.first, p.second);
        p = make_edge_pair(p.first, p.second);
    }
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool CrossingSet::contains(Edge e, Edge f) const {
    return std::binary_search(pairs_.begin(), pairs_.end(), make_edge_pair(e, f));
}

bool CrossingSet::is_crossed(Edge e) const {
    return std::any_of(pairs_.begin(), pairs_.end(),
                       [e](const EdgePair& p) { return p.first == e || p.second == e; });
}

void CrossingSet::insert(Edge e, Edge f) {
    check_pair(n_, e, f);
    const EdgePair p = make_edge_pair(e, f);
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p);
    if (it == pairs_.end() || *it != p) pairs_.insert(it, p);
}

CrossingSet CrossingSet::relabeled(const std::vector<Vertex>& perm) const {
    std::vector<EdgePair> out;
    out.reserve(pairs_.size());
    for (const auto& [e, f] : pairs_)
        out.push_back(make_edge_pair(Edge(perm[e.a - 1], perm[e.b - 1]),
                                     Edge(perm[f.a - 1], perm[f.b - 1])));
    CrossingSet cs(n_);
    std::sort(out.begin(), out.end());
    cs.pairs_ = std::move(out);
    return cs;
}

CrossingSet CrossingSet::restricted(const std::vector<Vertex>& subset) const {
    std::vector<int> index(static_cast<std::size_t>(n_ + 1), 0);
    for (std::size_t i = 0; i < subset.size(); ++i) index[static_cast<std::size_t>(subset[i])] = static_cast<int>(i + 1);
    std::vector<EdgePair> out;
    for (const auto& [e, f] : pairs_) {
        const int a = index[e.a], b = index[e.b], c = index[f.a], d = index[f.b];
        if (a && b && c && d) out.push_back(make_edge_pair(Edge(a, b), Edge(c, d)));
    }
    CrossingSet cs(static_cast<int>(subset.size()));
    std::sort(out.begin(), out.end());
    cs.pairs_ = std::move(out);
    return cs;
}

CrossingMatrix::CrossingMatrix(const CrossingSet& cs)
    : n_(cs.n()),
      m_(edge_count(cs.n())),
      bits_(static_cast<std::size_t>(m_) * static_cast<std::size_t>(m_), false),
      crossed_(static_cast<std::size_t>(m_), false) {
    for (const auto& [e, f] : cs.pairs()) {
        const int i = edge_index(n_, e), j = edge_index(n_, f);
        bits_[static_cast<std::size_t>(i * m_ + j)] = true;
        bits_[static_cast<std::size_t>(j * m_ + i)] = true;
        crossed_[static_cast<std::size_t>(i)] = true;
        crossed_[static_cast<std::size_t>(j)] = true;
    }
}

}  // namespace drawkit
