#pragma once

// Apex-ordering recognition of simple-triangle (PI) graphs and synthesis
// of triangle representations.

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "simtri/graph.hpp"
#include "simtri/triangles.hpp"

namespace simtri {

// True iff adjacency coincides with triangle intersection for every pair.
// Throws SizeMismatch.
bool verify_representation(const Graph& graph, const TriangleRepresentation& triangles);

struct PatternWitness {
  std::string_view pattern;  // "cpc", "p1" or "p2"
  std::vector<Vertex> vertices;
};

// First forbidden cpc/p1/p2 instance in the ordering, or none.
std::optional<PatternWitness> find_apex_obstruction(const Graph& graph, const VertexOrdering& ordering);

// No cpc, p1 or p2 subordering.
bool check_apex_ordering(const Graph& graph, const VertexOrdering& ordering);

// The four equivalent characterizations of an apex ordering, evaluated
// independently.
struct ApexConditions {
  bool cocomparability_and_c4 = false;          // G: no cpc, C4 rule
  bool no_cpc_p1_p2 = false;                    // G: no cpc, p1, p2
  bool complement_comparability_and_2k2 = false;  // complement: no cp, 2K2 rule
  bool complement_no_cp_p1_p2 = false;          // complement: no cp, p1, p2

  bool all_agree() const {
    return cocomparability_and_c4 == no_cpc_p1_p2 && no_cpc_p1_p2 == complement_comparability_and_2k2 &&
           complement_comparability_and_2k2 == complement_no_cp_p1_p2;
  }
};

ApexConditions evaluate_apex_conditions(const Graph& graph, const VertexOrdering& ordering);
// Same, reusing a precomputed complement.
ApexConditions evaluate_apex_conditions(const Graph& graph, const Graph& complement_graph,
                                        const VertexOrdering& ordering);

// Triangles with apex order equal to `ordering`. Throws NotApexOrdering with
// the offending pattern when the ordering is not an apex ordering.
TriangleRepresentation realize(const Graph& graph, const VertexOrdering& ordering);

struct Recognition {
  VertexOrdering ordering;
  TriangleRepresentation triangles;
};

// Called for each prefix discarded during the search, with the pattern
// instance completed by the prefix's last vertex.
using PruneObserver = std::function<void(std::span<const Vertex> prefix, const PatternWitness& witness)>;

// Lexicographically least apex ordering with its realization, or none.
std::optional<Recognition> recognize(const Graph& graph, const PruneObserver& on_prune = {});

}  // namespace simtri
