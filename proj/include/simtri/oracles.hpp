#pragma once

// Brute-force oracles built directly on the definitions: geometric search
// for triangle representations, orientation enumeration, and exact
// intersection of closed triangles.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "simtri/graph.hpp"
#include "simtri/order.hpp"
#include "simtri/triangles.hpp"

namespace simtri {

struct OracleLimits {
  std::size_t max_vertices = 6;
  std::size_t max_edges = 20;
};

// Closed filled triangles with apex at y = 1 and base on y = 0 share a point.
// Integer orientation predicates only, so the decision is exact.
bool exact_triangle_intersection(const TriangleRepresentation& t, Vertex u, Vertex v);
bool closed_triangles_intersect(const Triangle& first, const Triangle& second);

// Searches every apex ordering and every arrangement of 2n distinct base
// endpoints on the grid 1..2n for triangles whose intersection graph is
// `graph`. Throws LimitExceeded above limits.max_vertices.
std::optional<TriangleRepresentation> geometric_search_realization(const Graph& graph,
                                                                   const OracleLimits& limits = {});

// Same search, for triangles with u < v iff T(u) lies completely left of T(v).
std::optional<TriangleRepresentation> geometric_search_order_realization(const PartialOrder& order,
                                                                         const OracleLimits& limits = {});

enum class OrientationMode { transitive, alternating };

// Visits every orientation of `graph` that passes the mode's predicate,
// out of all 2^|E| direction assignments. Stops early when `visit` returns
// false. Throws LimitExceeded above limits.max_edges.
void for_each_orientation(const Graph& graph, OrientationMode mode,
                          const std::function<bool(const Orientation&)>& visit, const OracleLimits& limits = {});
std::vector<Orientation> enumerate_orientations(const Graph& graph, OrientationMode mode,
                                                const OracleLimits& limits = {});

// Some alternating orientation of G and transitive orientation of its
// complement have an acyclic union.
bool corollary1_check(const Graph& graph, const OracleLimits& limits = {});

// Every transitive orientation of the complement extends by some
// alternating orientation of G to an acyclic union. Throws
// NotSimpleTriangle if `graph` is rejected by recognize.
bool corollary2_check(const Graph& graph, const OracleLimits& limits = {});

}  // namespace simtri
