#include "simtri/oracles.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>

#include "simtri/error.hpp"
#include "simtri/recognizer.hpp"

namespace simtri {
namespace {

struct Point {
  std::int64_t x;
  std::int64_t y;
};

std::int64_t cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

int sign(std::int64_t value) { return (value > 0) - (value < 0); }

bool on_segment(const Point& p, const Point& a, const Point& b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool segments_intersect(const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
  const int d1 = sign(cross(q1, q2, p1));
  const int d2 = sign(cross(q1, q2, p2));
  const int d3 = sign(cross(p1, p2, q1));
  const int d4 = sign(cross(p1, p2, q2));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && on_segment(p1, q1, q2)) return true;
  if (d2 == 0 && on_segment(p2, q1, q2)) return true;
  if (d3 == 0 && on_segment(q1, p1, p2)) return true;
  if (d4 == 0 && on_segment(q2, p1, p2)) return true;
  return false;
}

using Corners = std::array<Point, 3>;

Corners corners(const Triangle& t) {
  return {Point{t.apex, 1}, Point{t.base_left, 0}, Point{t.base_right, 0}};
}

bool contains(const Corners& tri, const Point& p) {
  const int s0 = sign(cross(tri[0], tri[1], p));
  const int s1 = sign(cross(tri[1], tri[2], p));
  const int s2 = sign(cross(tri[2], tri[0], p));
  const bool has_negative = s0 < 0 || s1 < 0 || s2 < 0;
  const bool has_positive = s0 > 0 || s1 > 0 || s2 > 0;
  return !(has_negative && has_positive);
}

void check_vertex_limit(std::size_t n, const OracleLimits& limits) {
  if (n > limits.max_vertices) {
    throw LimitExceeded("oracle limited to " + std::to_string(limits.max_vertices) + " vertices, got " +
                        std::to_string(n));
  }
}

enum class PairShape { intersecting, left_of };

// Places triangles in apex order. Each new vertex gets the next apex and
// two fresh endpoints inserted anywhere into the current endpoint sequence;
// coordinates are sequence positions, so all endpoints stay distinct.
// `required(u, v)` gives the shape for u placed before v, or nullopt when
// no placement of v after u can work.
class GeometricSearch {
 public:
  using Requirement = std::function<std::optional<PairShape>(Vertex earlier, Vertex later)>;

  GeometricSearch(std::size_t n, Requirement required)
      : n_(n), required_(std::move(required)), placed_(n, 0) {}

  std::optional<TriangleRepresentation> run() {
    if (!extend()) return std::nullopt;
    std::vector<Triangle> triangles(n_);
    const auto bases = base_coordinates();
    for (std::size_t rank = 0; rank < apex_order_.size(); ++rank) {
      const auto v = static_cast<std::size_t>(apex_order_[rank]);
      triangles[v] = Triangle{static_cast<int>(rank) + 1, bases[v].first, bases[v].second};
    }
    return TriangleRepresentation(std::move(triangles));
  }

 private:
  struct Endpoint {
    Vertex vertex;
    bool right;
  };

  std::vector<std::pair<int, int>> base_coordinates() const {
    std::vector<std::pair<int, int>> out(n_, {0, 0});
    for (std::size_t i = 0; i < endpoints_.size(); ++i) {
      auto& slot = out[static_cast<std::size_t>(endpoints_[i].vertex)];
      (endpoints_[i].right ? slot.second : slot.first) = static_cast<int>(i) + 1;
    }
    return out;
  }

  bool consistent(Vertex v) const {
    const auto bases = base_coordinates();
    auto triangle_of = [&](Vertex w, std::size_t rank) {
      const auto& base = bases[static_cast<std::size_t>(w)];
      return Triangle{static_cast<int>(rank) + 1, base.first, base.second};
    };
    const Triangle newest = triangle_of(v, apex_order_.size() - 1);
    for (std::size_t rank = 0; rank + 1 < apex_order_.size(); ++rank) {
      const Vertex u = apex_order_[rank];
      const bool meet = closed_triangles_intersect(triangle_of(u, rank), newest);
      const PairShape shape = *required_(u, v);
      if (meet != (shape == PairShape::intersecting)) return false;
    }
    return true;
  }

  bool extend() {
    if (apex_order_.size() == n_) return true;
    for (Vertex v = 0; static_cast<std::size_t>(v) < n_; ++v) {
      if (placed_[static_cast<std::size_t>(v)]) continue;
      bool possible = true;
      for (Vertex u : apex_order_) {
        if (!required_(u, v)) {
          possible = false;
          break;
        }
      }
      if (!possible) continue;

      placed_[static_cast<std::size_t>(v)] = 1;
      apex_order_.push_back(v);
      const std::size_t len = endpoints_.size();
      for (std::size_t left_slot = 0; left_slot <= len; ++left_slot) {
        for (std::size_t right_slot = left_slot; right_slot <= len; ++right_slot) {
          endpoints_.insert(endpoints_.begin() + static_cast<std::ptrdiff_t>(left_slot), Endpoint{v, false});
          endpoints_.insert(endpoints_.begin() + static_cast<std::ptrdiff_t>(right_slot + 1), Endpoint{v, true});
          if (consistent(v) && extend()) return true;
          endpoints_.erase(endpoints_.begin() + static_cast<std::ptrdiff_t>(right_slot + 1));
          endpoints_.erase(endpoints_.begin() + static_cast<std::ptrdiff_t>(left_slot));
        }
      }
      apex_order_.pop_back();
      placed_[static_cast<std::size_t>(v)] = 0;
    }
    return false;
  }

  std::size_t n_;
  Requirement required_;
  std::vector<char> placed_;
  std::vector<Vertex> apex_order_;
  std::vector<Endpoint> endpoints_;
};

// Union acyclicity for orientations already known to be well formed.
bool acyclic_union(std::size_t n, const Orientation& first, const Orientation& second) {
  std::vector<int> indegree(n, 0);
  auto arc = [&](Vertex u, Vertex v) { return first.points(u, v) || second.points(u, v); };
  for (Vertex u = 0; static_cast<std::size_t>(u) < n; ++u) {
    for (Vertex v = 0; static_cast<std::size_t>(v) < n; ++v) indegree[static_cast<std::size_t>(v)] += arc(u, v);
  }
  std::vector<Vertex> ready;
  for (Vertex v = 0; static_cast<std::size_t>(v) < n; ++v) {
    if (indegree[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
  }
  std::size_t emitted = 0;
  while (!ready.empty()) {
    const Vertex u = ready.back();
    ready.pop_back();
    ++emitted;
    for (Vertex v = 0; static_cast<std::size_t>(v) < n; ++v) {
      if (arc(u, v) && --indegree[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
    }
  }
  return emitted == n;
}

}  // namespace

bool closed_triangles_intersect(const Triangle& first, const Triangle& second) {
  const Corners a = corners(first);
  const Corners b = corners(second);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (segments_intersect(a[i], a[(i + 1) % 3], b[j], b[(j + 1) % 3])) return true;
    }
  }
  return contains(a, b[0]) || contains(b, a[0]);
}

bool exact_triangle_intersection(const TriangleRepresentation& t, Vertex u, Vertex v) {
  return closed_triangles_intersect(t[u], t[v]);
}

std::optional<TriangleRepresentation> geometric_search_realization(const Graph& graph, const OracleLimits& limits) {
  check_vertex_limit(graph.size(), limits);
  GeometricSearch search(graph.size(), [&graph](Vertex earlier, Vertex later) -> std::optional<PairShape> {
    return graph.adjacent(earlier, later) ? PairShape::intersecting : PairShape::left_of;
  });
  return search.run();
}

std::optional<TriangleRepresentation> geometric_search_order_realization(const PartialOrder& order,
                                                                         const OracleLimits& limits) {
  check_vertex_limit(order.size(), limits);
  GeometricSearch search(order.size(), [&order](Vertex earlier, Vertex later) -> std::optional<PairShape> {
    if (order.less(later, earlier)) return std::nullopt;
    return order.less(earlier, later) ? PairShape::left_of : PairShape::intersecting;
  });
  return search.run();
}

void for_each_orientation(const Graph& graph, OrientationMode mode,
                          const std::function<bool(const Orientation&)>& visit, const OracleLimits& limits) {
  const auto edges = graph.edges();
  if (edges.size() > limits.max_edges) {
    throw LimitExceeded("orientation enumeration limited to " + std::to_string(limits.max_edges) +
                        " edges, got " + std::to_string(edges.size()));
  }
  const auto cycles = mode == OrientationMode::alternating ? chordless_cycles(graph)
                                                           : std::vector<std::vector<Vertex>>{};
  const std::uint64_t total = std::uint64_t{1} << edges.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Orientation orientation(graph.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const auto [u, v] = edges[e];
      if ((mask >> e) & 1U) {
        orientation.set(v, u);
      } else {
        orientation.set(u, v);
      }
    }
    const bool keep = mode == OrientationMode::transitive ? is_transitive_orientation(graph, orientation)
                                                          : alternates_on(cycles, orientation);
    if (keep && !visit(orientation)) return;
  }
}

std::vector<Orientation> enumerate_orientations(const Graph& graph, OrientationMode mode,
                                                const OracleLimits& limits) {
  std::vector<Orientation> out;
  for_each_orientation(
      graph, mode,
      [&](const Orientation& o) {
        out.push_back(o);
        return true;
      },
      limits);
  return out;
}

bool corollary1_check(const Graph& graph, const OracleLimits& limits) {
  check_vertex_limit(graph.size(), limits);
  const auto alternating = enumerate_orientations(graph, OrientationMode::alternating, limits);
  const auto transitive = enumerate_orientations(complement(graph), OrientationMode::transitive, limits);
  for (const auto& t : transitive) {
    for (const auto& a : alternating) {
      if (acyclic_union(graph.size(), a, t)) return true;
    }
  }
  return false;
}

bool corollary2_check(const Graph& graph, const OracleLimits& limits) {
  check_vertex_limit(graph.size(), limits);
  if (!recognize(graph)) throw NotSimpleTriangle("graph is not a simple-triangle graph");
  const auto alternating = enumerate_orientations(graph, OrientationMode::alternating, limits);
  const auto transitive = enumerate_orientations(complement(graph), OrientationMode::transitive, limits);
  for (const auto& t : transitive) {
    bool extends = false;
    for (const auto& a : alternating) {
      if (acyclic_union(graph.size(), a, t)) {
        extends = true;
        break;
      }
    }
    if (!extends) return false;
  }
  return true;
}

}  // namespace simtri
