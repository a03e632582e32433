#pragma once

// Text formats:
//
//   graph file   first line n, then one "u v" edge per line (0-based)
//   order file   first line n, then one "u < v" relation per line
//
// Blank lines and lines starting with '#' are ignored in both.

#include <iosfwd>
#include <string>
#include <string_view>

#include "simtri/graph.hpp"
#include "simtri/order.hpp"
#include "simtri/triangles.hpp"

namespace simtri {

// Throws ParseError (with line number), SelfLoop or DuplicateEdge.
Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);

// Throws ParseError or CycleError.
PartialOrder parse_order(std::istream& in);
PartialOrder parse_order(std::string_view text);

std::string format_graph(const Graph& graph);
// Cover relations only; parse_order recovers the closure.
std::string format_order(const PartialOrder& order);

// "2,0,1,3". Throws ParseError or InvalidPermutation.
Ordering parse_ordering(std::string_view text);

enum class RepresentationFormat { structured, svg };

// structured: {"version":1,"triangles":[{"v":0,"apex":1,"base":[1,2]},...]}
std::string emit_representation(const TriangleRepresentation& triangles, RepresentationFormat format);

// Inverse of the structured emitter. Throws ParseError.
TriangleRepresentation parse_representation(std::string_view structured);

}  // namespace simtri
