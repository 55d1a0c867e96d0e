#ifndef DRAWKIT_POINTS_HPP
#define DRAWKIT_POINTS_HPP

#include "drawkit/crossing_set.hpp"
#include "drawkit/rational.hpp"

#include <vector>

namespace drawkit {

struct Point {
    Rational x;
    Rational y;
};

/// Points in general position; point i is vertex i+1.
using PointSet = std::vector<Point>;

/// Sign of the cross product (b - a) x (c - a): +1 counter-clockwise, -1 clockwise, 0 collinear.
int orientation(const Point& a, const Point& b, const Point& c);

/// True iff the closed segments pq and rs share an interior crossing point.
bool segments_cross(const Point& p, const Point& q, const Point& r, const Point& s);

/// Throws DegeneratePointSet on repeated x-coordinates or collinear triples.
void check_general_position(const PointSet& ps);

/// Other vertices around each point in clockwise order, each list starting at its smallest vertex.
std::vector<std::vector<Vertex>> clockwise_rotations(const PointSet& ps);

/// Crossings of the straight-line drawing, by exact segment tests.
CrossingSet segment_crossings(const PointSet& ps);

}  // namespace drawkit

#endif
