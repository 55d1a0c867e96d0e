#ifndef DRAWKIT_CIRCULAR_HPP
#define DRAWKIT_CIRCULAR_HPP

#include "drawkit/crossing_set.hpp"
#include "drawkit/monotone.hpp"
#include "drawkit/rational.hpp"

#include <vector>

namespace drawkit {

/// Closed counter-clockwise arc of the unit-turn circle: [start, start + length].
struct Arc {
    Rational start;   // in [0, 1)
    Rational length;  // in (0, 1)

    bool contains(const Rational& angle) const;
    friend bool operator==(const Arc&, const Arc&) = default;
};

Arc make_arc(const Rational& from, const Rational& to);  // counter-clockwise from `from` to `to`

/// True iff the union of two closed arcs is the whole circle.
bool arcs_cover(const Arc& x, const Arc& y);
/// True iff the union of the closed arcs is the whole circle.
bool arcs_cover(const std::vector<Arc>& arcs);

struct CircularEvent {
    enum class Kind { Vertex, Swap };
    Kind kind = Kind::Swap;
    Rational angle;
    // vertex events
    Vertex v = 0;
    int pos = 0;                 // edges passing below (closer to the origin than) the vertex
    std::vector<Edge> ending;    // edges whose wedge ends here, bottom to top
    std::vector<Edge> starting;  // edges whose wedge starts here, bottom to top
    // swap events: radial levels `level` and `level + 1` exchange
    int level = 0;

    friend bool operator==(const CircularEvent&, const CircularEvent&) = default;
};

/**
 * @brief c-monotone drawing of K_n as a circular wiring diagram around the origin.
 *
 * Angles are in turns. Events are sorted by angle in [0, 1); several events may
 * share an angle and then apply in list order. base_order is the radial order
 * (origin outwards) of the edges alive just before angle 0, ahead of any event
 * at angle 0. Every edge runs counter-clockwise from the vertex event where it
 * starts to the one where it ends.
 */
struct CircularWiring {
    int n = 0;
    std::vector<Rational> angle;  // per vertex
    std::vector<Edge> base_order;
    std::vector<CircularEvent> events;

    friend bool operator==(const CircularWiring&, const CircularWiring&) = default;
};

/// Runs the wiring around the full circle; throws InvalidDrawing on any invariant breach.
void validate(const CircularWiring& cw);

CrossingSet crossing_set(const CircularWiring& cw);

/// Angular support of e.
Arc wedge(const CircularWiring& cw, Edge e);

struct StrongCMonotoneReport {
    bool no_covering_pair = true;
    bool no_covering_incident_pair = true;
    bool no_covering_star = true;
};

StrongCMonotoneReport strong_c_monotone_report(const CircularWiring& cw);

/// Star-based decision; throws InternalAssertion if the pair-based checks disagree.
bool is_strongly_c_monotone(const CircularWiring& cw);

struct GapEdge {
    Edge edge;
    bool contained_in_gap = false;
};

/// The n edges between circularly consecutive vertices, in counter-clockwise order from the smallest angle.
std::vector<GapEdge> gap_edges(const CircularWiring& cw);

struct LinearCut {
    LinearWiring wiring;
    std::vector<Vertex> original_of;  // original_of[i-1] = vertex of cw at position i
};

/// Opens the circle at `angle`; throws CutBlocked if a wedge or vertex lies on it.
LinearCut cut_to_linear(const CircularWiring& cw, const Rational& angle);

/// Restriction to `subset`, relabeled 1..k in index order. Throws SubsetTooSmall below 2 vertices.
CircularWiring induce(const CircularWiring& cw, std::vector<Vertex> subset);

}  // namespace drawkit

#endif
