#pragma once

#include <cstddef>
#include <vector>

#include "simtri/ordering.hpp"

namespace simtri {

// Triangle spanned by an apex on the top line (y = 1) and a closed base
// interval on the bottom line (y = 0).
struct Triangle {
  int apex = 0;
  int base_left = 0;
  int base_right = 0;

  friend bool operator==(const Triangle&, const Triangle&) = default;
};

// One triangle per vertex. Apices are pairwise distinct and every base has
// base_left < base_right.
class TriangleRepresentation {
 public:
  TriangleRepresentation() = default;
  // Throws InvalidRepresentation if the invariants do not hold.
  explicit TriangleRepresentation(std::vector<Triangle> triangles);

  std::size_t size() const noexcept { return triangles_.size(); }
  const Triangle& operator[](Vertex v) const { return triangles_[static_cast<std::size_t>(v)]; }
  const std::vector<Triangle>& triangles() const noexcept { return triangles_; }

  // Vertices sorted by apex coordinate.
  VertexOrdering apex_ordering() const;

  friend bool operator==(const TriangleRepresentation&, const TriangleRepresentation&) = default;

 private:
  std::vector<Triangle> triangles_;
};

// True iff one triangle lies completely to the left of the other: its apex
// and its whole base are strictly left of the other's.
bool triangles_disjoint(const TriangleRepresentation& t, Vertex u, Vertex v);

// True iff T(u) lies completely to the left of T(v).
bool triangle_left_of(const TriangleRepresentation& t, Vertex u, Vertex v);

}  // namespace simtri
