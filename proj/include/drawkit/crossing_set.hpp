#ifndef DRAWKIT_CROSSING_SET_HPP
#define DRAWKIT_CROSSING_SET_HPP

#include "drawkit/common.hpp"

#include <compare>
#include <utility>
#include <vector>

namespace drawkit {

/// Unordered pair of independent edges, stored with first < second.
using EdgePair = std::pair<Edge, Edge>;

inline EdgePair make_edge_pair(Edge e, Edge f) { return e < f ? EdgePair{e, f} : EdgePair{f, e}; }

/**
 * @brief Set of crossing pairs of independent edges of K_n.
 *
 * Pairs are kept sorted, each pair with its smaller edge first. This encoding
 * is the one the lexicographic minimum of canonical forms refers to.
 */
class CrossingSet {
public:
    CrossingSet() = default;
    explicit CrossingSet(int n) : n_(n) {}
    /// Throws InvalidArgument on incident pairs or out-of-range vertices.
    CrossingSet(int n, std::vector<EdgePair> pairs);

    int n() const { return n_; }
    const std::vector<EdgePair>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }
    bool empty() const { return pairs_.empty(); }

    bool contains(Edge e, Edge f) const;
    /// True iff some pair involves e.
    bool is_crossed(Edge e) const;

    void insert(Edge e, Edge f);

    /// Vertex v becomes perm[v-1].
    CrossingSet relabeled(const std::vector<Vertex>& perm) const;
    /// Pairs among `subset` (ascending), relabeled 1..|subset| by index order.
    CrossingSet restricted(const std::vector<Vertex>& subset) const;

    friend bool operator==(const CrossingSet&, const CrossingSet&) = default;
    friend auto operator<=>(const CrossingSet&, const CrossingSet&) = default;

private:
    int n_ = 0;
    std::vector<EdgePair> pairs_;
};

/// Fast pairwise lookup by edge index.
class CrossingMatrix {
public:
    explicit CrossingMatrix(const CrossingSet& cs);
    bool cross(Edge e, Edge f) const {
        return bits_[static_cast<std::size_t>(edge_index(n_, e) * m_ + edge_index(n_, f))];
    }
    bool crossed(Edge e) const { return crossed_[static_cast<std::size_t>(edge_index(n_, e))]; }
    int n() const { return n_; }

private:
    int n_;
    int m_;
    std::vector<bool> bits_;
    std::vector<bool> crossed_;
};

}  // namespace drawkit

#endif
