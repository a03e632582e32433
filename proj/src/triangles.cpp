#include "simtri/triangles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "simtri/error.hpp"

namespace simtri {

TriangleRepresentation::TriangleRepresentation(std::vector<Triangle> triangles)
    : triangles_(std::move(triangles)) {
  std::set<int> apices;
  for (std::size_t v = 0; v < triangles_.size(); ++v) {
    const Triangle& t = triangles_[v];
    if (t.base_left >= t.base_right) {
      throw InvalidRepresentation("vertex " + std::to_string(v) + " has an empty or inverted base");
    }
    if (!apices.insert(t.apex).second) {
      throw InvalidRepresentation("apex " + std::to_string(t.apex) + " is used twice");
    }
  }
}

VertexOrdering TriangleRepresentation::apex_ordering() const {
  std::vector<Vertex> order(triangles_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [this](Vertex u, Vertex v) { return (*this)[u].apex < (*this)[v].apex; });
  return VertexOrdering(std::move(order));
}

bool triangle_left_of(const TriangleRepresentation& t, Vertex u, Vertex v) {
  return t[u].apex < t[v].apex && t[u].base_right < t[v].base_left;
}

bool triangles_disjoint(const TriangleRepresentation& t, Vertex u, Vertex v) {
  return triangle_left_of(t, u, v) || triangle_left_of(t, v, u);
}

}  // namespace simtri
