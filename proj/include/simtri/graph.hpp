#pragma once

// Simple graphs, vertex orderings, forbidden ordered patterns, the C4 and
// 2K2 rules, and orientation predicates.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "simtri/order.hpp"
#include "simtri/ordering.hpp"

namespace simtri {

using Edge = std::pair<Vertex, Vertex>;

class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  // Throws SizeMismatch for out-of-range endpoints and Error for self loops
  // or repeated edges.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges);

  std::size_t size() const noexcept { return n_; }
  bool adjacent(Vertex u, Vertex v) const { return adj_[index(u, v)] != 0; }
  void add_edge(Vertex u, Vertex v);

  std::size_t edge_count() const;
  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v);
  }

  std::size_t n_ = 0;
  std::vector<char> adj_;
};

// Direction per edge. Built against a graph; points(u, v) is true iff the
// edge uv is directed u -> v.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(std::size_t n) : n_(n), arc_(n * n, 0) {}
  Orientation(std::size_t n, std::span<const Edge> arcs);

  // Every edge u < v of `graph` directed by `ordering`.
  static Orientation from_ordering(const Graph& graph, const Ordering& ordering);

  std::size_t size() const noexcept { return n_; }
  bool points(Vertex u, Vertex v) const {
    return arc_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)] != 0;
  }
  void set(Vertex from, Vertex to);
  std::vector<Edge> arcs() const;

  // Exactly one direction on every edge of `graph` and none elsewhere.
  bool orients(const Graph& graph) const;

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<char> arc_;
};

// Ordered subgraph pattern on 3 or 4 positions (0-based ranks). Pairs not
// listed are unconstrained.
struct OrderedPattern {
  std::string_view name;
  std::size_t size = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> non_edges;
};

namespace patterns {
// u < v < w with uv, vw edges and uw a non-edge.
const OrderedPattern& cp();
// u < v < w with uw an edge and uv, vw non-edges.
const OrderedPattern& cpc();
// Edges 13, 24; non-edges 23, 14.
const OrderedPattern& p1();
// Edges 14, 23; non-edges 13, 24.
const OrderedPattern& p2();
}  // namespace patterns

Graph complement(const Graph& graph);

// First ordering-increasing vertex tuple (lexicographic in positions)
// matching `pattern`, or none.
std::optional<std::vector<Vertex>> find_pattern(const Graph& graph, const VertexOrdering& ordering,
                                                const OrderedPattern& pattern);

bool is_comparability_ordering(const Graph& graph, const VertexOrdering& ordering);
bool is_cocomparability_ordering(const Graph& graph, const VertexOrdering& ordering);

// Vertex 4-sets inducing a chordless 4-cycle, each as (u, v, w, x) with
// edges uv, vw, wx, xu and u the smallest label.
std::vector<std::array<Vertex, 4>> induced_four_cycles(const Graph& graph);
// Vertex 4-sets inducing 2K2, each as (u, v, w, x) with edges uw and vx.
std::vector<std::array<Vertex, 4>> induced_two_k2(const Graph& graph);

// u <v  <=>  w <v  <=>  w <x  <=>  u <x  for the labelled quadruple.
bool rule_comparisons_agree(const VertexOrdering& ordering, const std::array<Vertex, 4>& quad);

bool fulfills_c4_rule(const Graph& graph, const VertexOrdering& ordering);
bool fulfills_2k2_rule(const Graph& graph, const VertexOrdering& ordering);

// u < v iff uv is a non-edge and u precedes v. Throws
// NotComparabilityOrdering unless that relation is transitive.
PartialOrder orient_complement_by_ordering(const Graph& graph, const VertexOrdering& ordering);

bool is_transitive_orientation(const Graph& graph, const Orientation& orientation);

// Chordless cycles of length >= 4, each listed once starting from its
// smallest vertex. Exponential in general; intended for n <= 16.
std::vector<std::vector<Vertex>> chordless_cycles(const Graph& graph);

// Directions alternate along every chordless cycle of length >= 4.
bool is_alternating_orientation(const Graph& graph, const Orientation& orientation);
bool alternates_on(const std::vector<std::vector<Vertex>>& cycles, const Orientation& orientation);

// The union of both orientations has no directed cycle. Throws
// EdgeSetMismatch unless they orient the graph and its complement.
bool union_is_acyclic(const Graph& graph, const Orientation& graph_orientation,
                      const Orientation& complement_orientation);

}  // namespace simtri
