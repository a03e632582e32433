#include "simtri/recognizer.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <variant>

#include "simtri/error.hpp"
#include "simtri/order.hpp"

namespace simtri {
namespace {

const std::array<const OrderedPattern*, 3>& apex_patterns() {
  static const std::array<const OrderedPattern*, 3> all{&patterns::cpc(), &patterns::p1(), &patterns::p2()};
  return all;
}

bool tuple_matches(const Graph& graph, const std::vector<Vertex>& tuple, const OrderedPattern& pattern) {
  for (const auto& [i, j] : pattern.edges) {
    if (!graph.adjacent(tuple[static_cast<std::size_t>(i)], tuple[static_cast<std::size_t>(j)])) return false;
  }
  for (const auto& [i, j] : pattern.non_edges) {
    if (graph.adjacent(tuple[static_cast<std::size_t>(i)], tuple[static_cast<std::size_t>(j)])) return false;
  }
  return true;
}

// Pattern instance among `prefix` whose last element is prefix.back().
std::optional<PatternWitness> obstruction_ending_at_last(const Graph& graph, std::span<const Vertex> prefix) {
  const std::size_t last = prefix.size() - 1;
  std::vector<Vertex> tuple;
  for (const OrderedPattern* pattern : apex_patterns()) {
    const std::size_t earlier = pattern->size - 1;
    if (earlier > last) continue;
    std::vector<std::size_t> pos(earlier);
    for (std::size_t i = 0; i < earlier; ++i) pos[i] = i;
    while (true) {
      tuple.clear();
      for (std::size_t p : pos) tuple.push_back(prefix[p]);
      tuple.push_back(prefix[last]);
      if (tuple_matches(graph, tuple, *pattern)) return PatternWitness{pattern->name, tuple};
      std::size_t i = earlier;
      while (i > 0 && pos[i - 1] == last - earlier + (i - 1)) --i;
      if (i == 0) break;
      ++pos[i - 1];
      for (std::size_t j = i; j < earlier; ++j) pos[j] = pos[j - 1] + 1;
    }
  }
  return std::nullopt;
}

class ApexSearch {
 public:
  ApexSearch(const Graph& graph, const PruneObserver& on_prune)
      : graph_(graph), on_prune_(on_prune), placed_(graph.size(), 0) {
    prefix_.reserve(graph.size());
  }

  std::optional<VertexOrdering> run() {
    if (extend()) return VertexOrdering(prefix_);
    return std::nullopt;
  }

 private:
  bool extend() {
    if (prefix_.size() == graph_.size()) return true;
    for (Vertex v = 0; static_cast<std::size_t>(v) < graph_.size(); ++v) {
      if (placed_[static_cast<std::size_t>(v)]) continue;
      prefix_.push_back(v);
      if (auto witness = obstruction_ending_at_last(graph_, prefix_)) {
        if (on_prune_) on_prune_(prefix_, *witness);
        prefix_.pop_back();
        continue;
      }
      placed_[static_cast<std::size_t>(v)] = 1;
      if (extend()) return true;
      placed_[static_cast<std::size_t>(v)] = 0;
      prefix_.pop_back();
    }
    return false;
  }

  const Graph& graph_;
  const PruneObserver& on_prune_;
  std::vector<char> placed_;
  std::vector<Vertex> prefix_;
};

}  // namespace

bool verify_representation(const Graph& graph, const TriangleRepresentation& triangles) {
  if (graph.size() != triangles.size()) {
    throw SizeMismatch("graph has " + std::to_string(graph.size()) + " vertices but representation has " +
                       std::to_string(triangles.size()));
  }
  for (Vertex u = 0; static_cast<std::size_t>(u) < graph.size(); ++u) {
    for (Vertex v = u + 1; static_cast<std::size_t>(v) < graph.size(); ++v) {
      if (graph.adjacent(u, v) == triangles_disjoint(triangles, u, v)) return false;
    }
  }
  return true;
}

std::optional<PatternWitness> find_apex_obstruction(const Graph& graph, const VertexOrdering& ordering) {
  for (const OrderedPattern* pattern : apex_patterns()) {
    if (auto tuple = find_pattern(graph, ordering, *pattern)) return PatternWitness{pattern->name, *tuple};
  }
  return std::nullopt;
}

bool check_apex_ordering(const Graph& graph, const VertexOrdering& ordering) {
  return !find_apex_obstruction(graph, ordering).has_value();
}

ApexConditions evaluate_apex_conditions(const Graph& graph, const VertexOrdering& ordering) {
  return evaluate_apex_conditions(graph, complement(graph), ordering);
}

ApexConditions evaluate_apex_conditions(const Graph& graph, const Graph& complement_graph,
                                        const VertexOrdering& ordering) {
  auto absent = [&](const Graph& g, const OrderedPattern& pattern) {
    return !find_pattern(g, ordering, pattern).has_value();
  };
  ApexConditions out;
  out.cocomparability_and_c4 = is_cocomparability_ordering(graph, ordering) && fulfills_c4_rule(graph, ordering);
  out.no_cpc_p1_p2 =
      absent(graph, patterns::cpc()) && absent(graph, patterns::p1()) && absent(graph, patterns::p2());
  out.complement_comparability_and_2k2 =
      is_comparability_ordering(complement_graph, ordering) && fulfills_2k2_rule(complement_graph, ordering);
  out.complement_no_cp_p1_p2 = absent(complement_graph, patterns::cp()) &&
                               absent(complement_graph, patterns::p1()) && absent(complement_graph, patterns::p2());
  return out;
}

TriangleRepresentation realize(const Graph& graph, const VertexOrdering& ordering) {
  if (auto witness = find_apex_obstruction(graph, ordering)) {
    std::string vertices;
    for (Vertex v : witness->vertices) vertices += (vertices.empty() ? "" : ",") + std::to_string(v);
    throw NotApexOrdering("ordering contains " + std::string(witness->pattern) + " at (" + vertices + ")");
  }
  const PartialOrder order = orient_complement_by_ordering(graph, ordering);
  auto built = build_interval_representation(order, ordering);
  if (std::holds_alternative<Anticycle>(built)) {
    throw NotApexOrdering("ordering admits a 4-anticycle in the complement order");
  }
  return order_to_triangles(ordering, std::get<IntervalRepresentation>(built));
}

std::optional<Recognition> recognize(const Graph& graph, const PruneObserver& on_prune) {
  auto ordering = ApexSearch(graph, on_prune).run();
  if (!ordering) return std::nullopt;
  TriangleRepresentation triangles = realize(graph, *ordering);
  if (!verify_representation(graph, triangles)) {
    throw std::logic_error("realized triangles do not represent the graph");
  }
  return Recognition{std::move(*ordering), std::move(triangles)};
}

}  // namespace simtri
