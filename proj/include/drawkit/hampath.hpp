#ifndef DRAWKIT_HAMPATH_HPP
#define DRAWKIT_HAMPATH_HPP

#include "drawkit/circular.hpp"
#include "drawkit/crossing_set.hpp"
#include "drawkit/cylindrical.hpp"
#include "drawkit/monotone.hpp"

#include <functional>
#include <vector>

namespace drawkit {

/// Distinct vertices in path order. A cycle is stored without repeating its first vertex.
using VertexPath = std::vector<Vertex>;

/// Edges between consecutive vertices, plus the closing edge when `closed`.
std::vector<Edge> path_edges(const VertexPath& p, bool closed = false);

/// True iff no two edges of p form a pair in cs.
bool is_crossing_free(const CrossingSet& cs, const VertexPath& p, bool closed = false);

/// True iff p visits every vertex 1..n exactly once.
bool is_hamiltonian(int n, const VertexPath& p);

/// Throws InternalAssertion unless p is a crossing-free Hamiltonian path from a to b.
void check_ham_path(const CrossingSet& cs, const VertexPath& p, Vertex a, Vertex b, const char* who);

/// Induction on the edge {1, n}. Throws InvalidArgument for a == b or out-of-range ends.
VertexPath path_x_monotone(const LinearWiring& lw, Vertex a, Vertex b);

/// Gap-edge construction; throws NotStronglyCMonotone on other input.
VertexPath path_strong_c_mon(const CircularWiring& cw, Vertex a, Vertex b);

/// Rim walks stitched by lateral edges.
VertexPath path_cylindrical(const CylindricalDrawing& cd, Vertex a, Vertex b);

/// Span-two search with a general non-nested backtracking fallback.
VertexPath path_twisted(int n, Vertex a, Vertex b);

using PathFn = std::function<VertexPath(Vertex, Vertex)>;

/// Closes a path between the ends of `uncrossed` into a cycle. Throws EdgeIsCrossed.
VertexPath cycle_via_uncrossed(const CrossingSet& cs, Edge uncrossed, const PathFn& path_fn);

/**
 * @brief Adds vertex n+1 next to vertex n.
 *
 * `rotation_of_vn` is the clockwise rotation at n, read from the cell where the
 * copy is placed. Throws BadRotation unless it is a permutation of 1..n-1.
 */
CrossingSet duplicate_apex(const CrossingSet& cs, const std::vector<Vertex>& rotation_of_vn);

}  // namespace drawkit

#endif
