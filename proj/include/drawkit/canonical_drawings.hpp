#ifndef DRAWKIT_CANONICAL_DRAWINGS_HPP
#define DRAWKIT_CANONICAL_DRAWINGS_HPP

#include "drawkit/crossing_set.hpp"
#include "drawkit/cylindrical.hpp"
#include "drawkit/monotone.hpp"
#include "drawkit/points.hpp"
#include "drawkit/rotation.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace drawkit {

struct ModelledCrossings {
    CrossingSet crossings;
    LinearWiring wiring;
};

/// Points (k, k^2) for k = 1..n.
PointSet parabola_points(int n);

/// Convex drawing: linked pairs cross. Throws InvalidArgument below n = 3.
ModelledCrossings convex(int n);

/// Twisted drawing: nested pairs cross. Throws InvalidArgument below n = 3.
CrossingSet twisted(int n);

/// Straight-line drawing on `ps`. Throws DegeneratePointSet.
std::pair<RotationSystem, CrossingSet> from_points(const PointSet& ps);

/// x-monotone wiring of the straight-line drawing; requires strictly increasing x.
LinearWiring wiring_from_points(const PointSet& ps);

/// The wiring is labeled by spine position; crossings use the original labels.
struct TwoPageDrawing {
    CrossingSet crossings;
    LinearWiring wiring;
    std::vector<Vertex> spine;  // spine[i-1] = original vertex at position i
};

/// Edges on the same page cross iff linked along the spine; page_of_edge is indexed by edge_index.
TwoPageDrawing two_page(int n, const std::vector<Vertex>& spine, const std::vector<int>& page_of_edge);

/// Page assignment of a two-page K_8 with 18 crossings along the identity spine.
std::vector<int> two_page_k8_pages();

/// Geodesic drawing on the cylinder: ceil(n/2) outer and floor(n/2) inner vertices.
CylindricalDrawing hill(int n);

/// Seeded rejection sampler; home-face circle edges only when `strong`. Throws GaveUp.
CylindricalDrawing random_cylindrical(int n, std::uint64_t seed, bool strong, int attempts = 500);

struct XMonotoneSample {
    LinearWiring wiring;
    std::optional<PointSet> points;  // set when drawn from a point set
};

/// Integer points in general position with strictly increasing x.
PointSet random_points(int n, std::uint64_t seed);

XMonotoneSample random_x_monotone_sample(int n, std::uint64_t seed);
LinearWiring random_x_monotone(int n, std::uint64_t seed);

}  // namespace drawkit

#endif
