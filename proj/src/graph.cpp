#include "simtri/graph.hpp"

#include <algorithm>
#include <string>

#include "simtri/error.hpp"

namespace simtri {
namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

void require_ordering(const Graph& graph, const VertexOrdering& ordering) {
  if (graph.size() != ordering.size()) {
    throw SizeMismatch("graph has " + std::to_string(graph.size()) + " vertices but ordering has " +
                       std::to_string(ordering.size()));
  }
}

bool matches(const Graph& graph, std::span<const Vertex> tuple, const OrderedPattern& pattern) {
  for (const auto& [i, j] : pattern.edges) {
    if (!graph.adjacent(tuple[idx(i)], tuple[idx(j)])) return false;
  }
  for (const auto& [i, j] : pattern.non_edges) {
    if (graph.adjacent(tuple[idx(i)], tuple[idx(j)])) return false;
  }
  return true;
}

OrderedPattern make_pattern(std::string_view name, std::size_t size,
                            std::vector<std::pair<int, int>> edges,
                            std::vector<std::pair<int, int>> non_edges) {
  return OrderedPattern{name, size, std::move(edges), std::move(non_edges)};
}

// Induced subgraph on four vertices.
int edges_among(const Graph& graph, const std::array<Vertex, 4>& q) {
  int count = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) count += graph.adjacent(q[idx(i)], q[idx(j)]);
  }
  return count;
}

template <typename Visit>
void for_each_quadruple(std::size_t n, Visit&& visit) {
  for (Vertex a = 0; idx(a) < n; ++a) {
    for (Vertex b = a + 1; idx(b) < n; ++b) {
      for (Vertex c = b + 1; idx(c) < n; ++c) {
        for (Vertex d = c + 1; idx(d) < n; ++d) visit(std::array<Vertex, 4>{a, b, c, d});
      }
    }
  }
}

void enumerate_cycles_from(const Graph& graph, std::vector<Vertex>& path, std::vector<char>& on_path,
                      std::vector<std::vector<Vertex>>& out) {
  const Vertex start = path.front();
  const Vertex last = path.back();
  for (Vertex x = start + 1; idx(x) < graph.size(); ++x) {
    if (on_path[idx(x)] || !graph.adjacent(last, x)) continue;
    bool chord = false;
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      if (graph.adjacent(path[i], x)) {
        chord = true;
        break;
      }
    }
    if (chord) continue;
    if (graph.adjacent(start, x)) {
      // Closing edge. Length >= 4 and x > path[1] lists each cycle once.
      if (path.size() >= 3 && x > path[1]) {
        out.push_back(path);
        out.back().push_back(x);
      }
      continue;
    }
    path.push_back(x);
    on_path[idx(x)] = 1;
    enumerate_cycles_from(graph, path, on_path, out);
    on_path[idx(x)] = 0;
    path.pop_back();
  }
}

}  // namespace

Graph::Graph(std::size_t n) : n_(n), adj_(n * n, 0) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || idx(u) >= n || idx(v) >= n) {
      throw SizeMismatch("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") is out of range");
    }
    if (u == v) throw Error("self loop at vertex " + std::to_string(u));
    if (adjacent(u, v)) {
      throw Error("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    }
    add_edge(u, v);
  }
}

Graph::Graph(std::size_t n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u == v) throw Error("self loop at vertex " + std::to_string(u));
  adj_[index(u, v)] = 1;
  adj_[index(v, u)] = 1;
}

std::size_t Graph::edge_count() const {
  return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), char{1})) / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; idx(u) < n_; ++u) {
    for (Vertex v = u + 1; idx(v) < n_; ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

Orientation::Orientation(std::size_t n, std::span<const Edge> arcs) : Orientation(n) {
  for (const auto& [u, v] : arcs) set(u, v);
}

Orientation Orientation::from_ordering(const Graph& graph, const Ordering& ordering) {
  require_ordering(graph, ordering);
  Orientation out(graph.size());
  for (const auto& [u, v] : graph.edges()) {
    if (ordering.before(u, v)) {
      out.set(u, v);
    } else {
      out.set(v, u);
    }
  }
  return out;
}

void Orientation::set(Vertex from, Vertex to) {
  if (from < 0 || to < 0 || idx(from) >= n_ || idx(to) >= n_ || from == to) {
    throw SizeMismatch("arc (" + std::to_string(from) + ", " + std::to_string(to) + ") is invalid");
  }
  arc_[idx(from) * n_ + idx(to)] = 1;
  arc_[idx(to) * n_ + idx(from)] = 0;
}

std::vector<Edge> Orientation::arcs() const {
  std::vector<Edge> out;
  for (Vertex u = 0; idx(u) < n_; ++u) {
    for (Vertex v = 0; idx(v) < n_; ++v) {
      if (points(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Orientation::orients(const Graph& graph) const {
  if (graph.size() != n_) return false;
  for (Vertex u = 0; idx(u) < n_; ++u) {
    for (Vertex v = u + 1; idx(v) < n_; ++v) {
      const int directions = points(u, v) + points(v, u);
      if (directions != (graph.adjacent(u, v) ? 1 : 0)) return false;
    }
  }
  return true;
}

namespace patterns {

const OrderedPattern& cp() {
  static const OrderedPattern pattern = make_pattern("cp", 3, {{0, 1}, {1, 2}}, {{0, 2}});
  return pattern;
}

const OrderedPattern& cpc() {
  static const OrderedPattern pattern = make_pattern("cpc", 3, {{0, 2}}, {{0, 1}, {1, 2}});
  return pattern;
}

const OrderedPattern& p1() {
  static const OrderedPattern pattern = make_pattern("p1", 4, {{0, 2}, {1, 3}}, {{1, 2}, {0, 3}});
  return pattern;
}

const OrderedPattern& p2() {
  static const OrderedPattern pattern = make_pattern("p2", 4, {{0, 3}, {1, 2}}, {{0, 2}, {1, 3}});
  return pattern;
}

}  // namespace patterns

Graph complement(const Graph& graph) {
  Graph out(graph.size());
  for (Vertex u = 0; idx(u) < graph.size(); ++u) {
    for (Vertex v = u + 1; idx(v) < graph.size(); ++v) {
      if (!graph.adjacent(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

std::optional<std::vector<Vertex>> find_pattern(const Graph& graph, const VertexOrdering& ordering,
                                                const OrderedPattern& pattern) {
  require_ordering(graph, ordering);
  const std::size_t n = graph.size();
  const std::size_t k = pattern.size;
  if (k == 0 || k > n) return std::nullopt;

  // Positions i_0 < i_1 < ... < i_{k-1}, advanced like an odometer.
  std::vector<std::size_t> pos(k);
  for (std::size_t i = 0; i < k; ++i) pos[i] = i;
  std::vector<Vertex> tuple(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) tuple[i] = ordering.at(pos[i]);
    if (matches(graph, tuple, pattern)) return tuple;
    std::size_t i = k;
    while (i > 0 && pos[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return std::nullopt;
    ++pos[i - 1];
    for (std::size_t j = i; j < k; ++j) pos[j] = pos[j - 1] + 1;
  }
}

bool is_comparability_ordering(const Graph& graph, const VertexOrdering& ordering) {
  return !find_pattern(graph, ordering, patterns::cp()).has_value();
}

bool is_cocomparability_ordering(const Graph& graph, const VertexOrdering& ordering) {
  return !find_pattern(graph, ordering, patterns::cpc()).has_value();
}

std::vector<std::array<Vertex, 4>> induced_four_cycles(const Graph& graph) {
  std::vector<std::array<Vertex, 4>> out;
  for_each_quadruple(graph.size(), [&](const std::array<Vertex, 4>& q) {
    if (edges_among(graph, q) != 4) return;
    // Four edges with every degree equal to 2 is exactly C4.
    for (int i = 0; i < 4; ++i) {
      int degree = 0;
      for (int j = 0; j < 4; ++j) degree += (i != j) && graph.adjacent(q[idx(i)], q[idx(j)]);
      if (degree != 2) return;
    }
    // w is the vertex opposite u.
    const Vertex u = q[0];
    Vertex w = -1;
    std::vector<Vertex> neighbours;
    for (int i = 1; i < 4; ++i) {
      if (graph.adjacent(u, q[idx(i)])) {
        neighbours.push_back(q[idx(i)]);
      } else {
        w = q[idx(i)];
      }
    }
    out.push_back({u, neighbours[0], w, neighbours[1]});
  });
  return out;
}

std::vector<std::array<Vertex, 4>> induced_two_k2(const Graph& graph) {
  std::vector<std::array<Vertex, 4>> out;
  for_each_quadruple(graph.size(), [&](const std::array<Vertex, 4>& q) {
    if (edges_among(graph, q) != 2) return;
    const Vertex u = q[0];
    Vertex w = -1;
    for (int i = 1; i < 4; ++i) {
      if (graph.adjacent(u, q[idx(i)])) w = q[idx(i)];
    }
    if (w < 0) return;
    std::vector<Vertex> others;
    for (Vertex x : q) {
      if (x != u && x != w) others.push_back(x);
    }
    if (!graph.adjacent(others[0], others[1])) return;
    out.push_back({u, others[0], w, others[1]});
  });
  return out;
}

bool rule_comparisons_agree(const VertexOrdering& ordering, const std::array<Vertex, 4>& quad) {
  const auto [u, v, w, x] = quad;
  const bool first = ordering.before(u, v);
  return ordering.before(w, v) == first && ordering.before(w, x) == first && ordering.before(u, x) == first;
}

bool fulfills_c4_rule(const Graph& graph, const VertexOrdering& ordering) {
  require_ordering(graph, ordering);
  for (const auto& [u, v, w, x] : induced_four_cycles(graph)) {
    if (!rule_comparisons_agree(ordering, {u, v, w, x})) return false;
    if (!rule_comparisons_agree(ordering, {v, w, x, u})) return false;
  }
  return true;
}

bool fulfills_2k2_rule(const Graph& graph, const VertexOrdering& ordering) {
  require_ordering(graph, ordering);
  for (const auto& [u, v, w, x] : induced_two_k2(graph)) {
    if (!rule_comparisons_agree(ordering, {u, v, w, x})) return false;
    if (!rule_comparisons_agree(ordering, {v, w, x, u})) return false;
  }
  return true;
}

PartialOrder orient_complement_by_ordering(const Graph& graph, const VertexOrdering& ordering) {
  require_ordering(graph, ordering);
  const std::size_t n = graph.size();
  std::vector<char> rel(n * n, 0);
  for (Vertex u = 0; idx(u) < n; ++u) {
    for (Vertex v = 0; idx(v) < n; ++v) {
      if (u != v && !graph.adjacent(u, v) && ordering.before(u, v)) rel[idx(u) * n + idx(v)] = 1;
    }
  }
  try {
    return PartialOrder::from_relation(n, std::move(rel));
  } catch (const InvalidOrder& e) {
    throw NotComparabilityOrdering(std::string("ordering does not orient the complement transitively: ") +
                                   e.what());
  }
}

bool is_transitive_orientation(const Graph& graph, const Orientation& orientation) {
  if (!orientation.orients(graph)) return false;
  const auto n = static_cast<Vertex>(graph.size());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (!orientation.points(u, v)) continue;
      for (Vertex w = 0; w < n; ++w) {
        if (orientation.points(v, w) && !orientation.points(u, w)) return false;
      }
    }
  }
  return true;
}

std::vector<std::vector<Vertex>> chordless_cycles(const Graph& graph) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> on_path(graph.size(), 0);
  for (Vertex s = 0; idx(s) < graph.size(); ++s) {
    for (Vertex first = s + 1; idx(first) < graph.size(); ++first) {
      if (!graph.adjacent(s, first)) continue;
      std::vector<Vertex> path{s, first};
      on_path[idx(s)] = on_path[idx(first)] = 1;
      enumerate_cycles_from(graph, path, on_path, out);
      on_path[idx(s)] = on_path[idx(first)] = 0;
    }
  }
  return out;
}

bool alternates_on(const std::vector<std::vector<Vertex>>& cycles, const Orientation& orientation) {
  for (const auto& cycle : cycles) {
    const std::size_t m = cycle.size();
    for (std::size_t i = 0; i < m; ++i) {
      const Vertex prev = cycle[(i + m - 1) % m];
      const Vertex here = cycle[i];
      const Vertex next = cycle[(i + 1) % m];
      if (orientation.points(prev, here) && orientation.points(here, next)) return false;
      if (orientation.points(next, here) && orientation.points(here, prev)) return false;
    }
  }
  return true;
}

bool is_alternating_orientation(const Graph& graph, const Orientation& orientation) {
  if (!orientation.orients(graph)) return false;
  return alternates_on(chordless_cycles(graph), orientation);
}

bool union_is_acyclic(const Graph& graph, const Orientation& graph_orientation,
                      const Orientation& complement_orientation) {
  if (!graph_orientation.orients(graph)) throw EdgeSetMismatch("first orientation does not orient the graph");
  if (!complement_orientation.orients(complement(graph))) {
    throw EdgeSetMismatch("second orientation does not orient the complement");
  }
  const std::size_t n = graph.size();
  std::vector<int> indegree(n, 0);
  auto arc = [&](Vertex u, Vertex v) {
    return graph_orientation.points(u, v) || complement_orientation.points(u, v);
  };
  for (Vertex u = 0; idx(u) < n; ++u) {
    for (Vertex v = 0; idx(v) < n; ++v) indegree[idx(v)] += arc(u, v);
  }
  std::vector<Vertex> ready;
  for (Vertex v = 0; idx(v) < n; ++v) {
    if (indegree[idx(v)] == 0) ready.push_back(v);
  }
  std::size_t emitted = 0;
  while (!ready.empty()) {
    const Vertex u = ready.back();
    ready.pop_back();
    ++emitted;
    for (Vertex v = 0; idx(v) < n; ++v) {
      if (arc(u, v) && --indegree[idx(v)] == 0) ready.push_back(v);
    }
  }
  return emitted == n;
}

}  // namespace simtri
