#ifndef DRAWKIT_CYLINDRICAL_HPP
#define DRAWKIT_CYLINDRICAL_HPP

#include "drawkit/circular.hpp"
#include "drawkit/crossing_set.hpp"
#include "drawkit/rational.hpp"

#include <vector>

namespace drawkit {

enum class Face { Home, Lateral };
enum class ArcDir { Cw, Ccw };

struct CylVertex {
    Vertex v = 0;
    Rational angle;  // in [0, 1)

    friend bool operator==(const CylVertex&, const CylVertex&) = default;
};

/// Edge from outer vertex u to inner vertex w turning omega times counter-clockwise.
struct LateralEdge {
    Vertex u = 0;
    Vertex w = 0;
    Rational omega;

    friend bool operator==(const LateralEdge&, const LateralEdge&) = default;
};

/**
 * @brief Edge between two vertices of the same circle.
 *
 * The arc runs from u in direction `arc` to v. For a home-face edge it is the
 * side the edge is drawn along; for a lateral-face edge it is the guarded arc.
 */
struct CircleEdge {
    Vertex u = 0;
    Vertex v = 0;
    Face face = Face::Home;
    ArcDir arc = ArcDir::Ccw;

    friend bool operator==(const CircleEdge&, const CircleEdge&) = default;
};

/**
 * @brief Cylindrical drawing of K_n: vertices on an outer and an inner circle.
 *
 * Every vertex 1..n lies on exactly one circle. Every outer/inner pair has one
 * lateral edge and every same-circle pair one circle edge.
 */
struct CylindricalDrawing {
    int n = 0;
    std::vector<CylVertex> outer;
    std::vector<CylVertex> inner;
    std::vector<LateralEdge> lateral;
    std::vector<CircleEdge> circle;

    friend bool operator==(const CylindricalDrawing&, const CylindricalDrawing&) = default;
};

/// Structural and pairwise validity checks; throws InvalidDrawing.
void validate(const CylindricalDrawing& cd);

/// Counter-clockwise arc described by a circle edge's endpoints and direction.
Arc arc_of(const CylindricalDrawing& cd, const CircleEdge& ce);

/// Angular support of a lateral edge: from the outer vertex for omega > 0, from the inner one otherwise.
Arc lateral_wedge(const CylindricalDrawing& cd, const LateralEdge& le);

/// Vertices in the closed guarded arc of a lateral-face circle edge. Throws WrongFace.
std::vector<Vertex> guards(const CylindricalDrawing& cd, Edge e);

/// Crossings from the guard and winding rules; throws InvalidDrawing.
CrossingSet crossing_set(const CylindricalDrawing& cd);

struct RimStatus {
    std::vector<Edge> uncrossed;
    std::vector<Edge> crossed;
};

struct RimReport {
    RimStatus outer;
    RimStatus inner;
};

/// Crossing status of every rim edge; throws InternalAssertion if a circle has two crossed rim edges.
RimReport uncrossed_rim_edges(const CylindricalDrawing& cd);

/// Rotates the outer circle so that every |omega| < 1. Throws RangeTooWide.
CylindricalDrawing normalize_winding(const CylindricalDrawing& cd);

/// Non-incident same-sign lateral pairs whose wedges cover the circle.
std::vector<EdgePair> find_double_spirals(const CylindricalDrawing& cd);

/// Moves inner vertices until no double-spiral is left. Throws NonTermination.
CylindricalDrawing remove_double_spirals(const CylindricalDrawing& cd);

/// Exact c-monotone realization. Requires |omega| < 1 and distinct angles; throws RealizationMismatch.
CircularWiring to_circular_wiring(const CylindricalDrawing& cd);

bool is_strongly_cylindrical(const CylindricalDrawing& cd);

/// Chooses home-arc directions and realizes. Throws BothDirectionsForbidden or NotStronglyCMonotone.
CircularWiring to_strongly_c_monotone(const CylindricalDrawing& cd);

}  // namespace drawkit

#endif
