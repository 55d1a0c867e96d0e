#ifndef DRAWKIT_MONOTONE_HPP
#define DRAWKIT_MONOTONE_HPP

#include "drawkit/crossing_set.hpp"

#include <map>
#include <vector>

namespace drawkit {

enum class Side { Below, Above };

/**
 * @brief x-monotone drawing of K_n as a wiring diagram.
 *
 * Vertices 1..n sit left to right. Strip i (1-based, between vertices i and
 * i+1) holds swap positions k, each exchanging the edges at positions k and
 * k+1 (0-based, bottom to top) of the strip's current edge order. At vertex v,
 * vertex_pos[v-1] edges pass below it; left_order / right_order list the edges
 * ending / starting at v from bottom to top.
 *
 * The order entering strip i is the order passing vertex i with right_order[i]
 * inserted at vertex_pos[i]; on leaving the strip, the edges ending at i+1 must
 * form the block left_order[i+1] starting at vertex_pos[i+1].
 */
struct LinearWiring {
    int n = 0;
    std::vector<std::vector<int>> strips;  // n-1 entries
    std::vector<int> vertex_pos;           // n entries
    std::vector<std::vector<Edge>> left_order;
    std::vector<std::vector<Edge>> right_order;

    friend bool operator==(const LinearWiring&, const LinearWiring&) = default;
};

/// Edge orders reconstructed by running a wiring from left to right.
struct WiringTrace {
    std::vector<std::vector<Edge>> passing;  // per vertex: edges passing its column, bottom to top
    std::vector<std::vector<Edge>> enter;    // per strip: order at the left boundary
    std::vector<std::vector<Edge>> exit;     // per strip: order at the right boundary
    std::vector<std::vector<EdgePair>> swaps;  // per strip: crossing pairs in swap order
};

/// Runs the wiring and checks every invariant; throws InvalidDrawing on a breach.
WiringTrace trace(const LinearWiring& lw);
void validate(const LinearWiring& lw);

CrossingSet crossing_set(const LinearWiring& lw);

/// Sub-wiring on `subset`, relabeled 1..k in left-to-right order. Throws SubsetTooSmall below 2 vertices.
LinearWiring induce(const LinearWiring& lw, std::vector<Vertex> subset);

/// Side of each vertex strictly between e's endpoints relative to e's strand.
std::map<Vertex, Side> vertex_sides(const LinearWiring& lw, Edge e);

/**
 * @brief x-bounded drawing data: where each edge passes its interior vertices and the
 * bottom-to-top order of the edges leaving each vertex to either side.
 *
 * passes(e, v) == Below means e crosses the vertical line through v below v.
 */
class XBoundedData {
public:
    XBoundedData() = default;
    explicit XBoundedData(int n);

    int n() const { return n_; }
    Side passes(Edge e, Vertex v) const;
    void set_passes(Edge e, Vertex v, Side s);

    std::vector<std::vector<Edge>> left_order;   // per vertex
    std::vector<std::vector<Edge>> right_order;  // per vertex

    friend bool operator==(const XBoundedData&, const XBoundedData&) = default;

private:
    int n_ = 0;
    // per edge index: sides at the interior vertices a+1..b-1
    std::vector<std::vector<Side>> sides_;
};

enum class Order { Less, Greater, Incomparable };

/// The vertex-local order <_v between edges e and f.
Order partial_order_at(const XBoundedData& xb, Vertex v, Edge e, Edge f);

/// Crossings implied by the orders at the relevant endpoints. Throws IncomparableAtRequiredVertex.
CrossingSet predicted_crossings(const XBoundedData& xb);

/// Strip-by-strip redraw into an x-monotone wiring with the same vertex order. Throws InconsistentInput.
LinearWiring to_x_monotone(const XBoundedData& xb);

/// Reads sides and vertex-local orders off a wiring.
XBoundedData extract_xbounded(const LinearWiring& lw);

/**
 * @brief Builds the wiring leading from order `from` to order `to` by bottom-up bubble passes.
 *
 * Appends the swap positions to `swaps`; the number of swaps equals the number of inversions.
 */
void bubble_realize(const std::vector<Edge>& from, const std::vector<Edge>& to, std::vector<int>& swaps);

}  // namespace drawkit

#endif
