#pragma once

// Partial orders, linear extensions, alternating anticycles and the
// construction of interval representations for linear-interval orders.

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "simtri/ordering.hpp"
#include "simtri/triangles.hpp"

namespace simtri {

// Strict partial order on 0..n-1, stored as a dense relation matrix.
class PartialOrder {
 public:
  PartialOrder() = default;

  // Antichain on n elements.
  explicit PartialOrder(std::size_t n);

  // Checked constructor: `relation` is row-major n*n with relation[u*n+v]
  // meaning u < v. Throws InvalidOrder if it is not irreflexive and
  // transitive.
  static PartialOrder from_relation(std::size_t n, std::vector<char> relation);

  std::size_t size() const noexcept { return n_; }
  bool less(Vertex u, Vertex v) const { return rel_[index(u, v)] != 0; }
  bool comparable(Vertex u, Vertex v) const { return less(u, v) || less(v, u); }
  std::size_t relation_count() const;

  // Pairs (u, v) with u < v, in row-major order.
  std::vector<std::pair<Vertex, Vertex>> relations() const;

  friend bool operator==(const PartialOrder&, const PartialOrder&) = default;

 private:
  PartialOrder(std::size_t n, std::vector<char> relation) : n_(n), rel_(std::move(relation)) {}
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v);
  }

  std::size_t n_ = 0;
  std::vector<char> rel_;
};

// Closed integer interval [left, right] with left < right.
struct Interval {
  int left = 0;
  int right = 0;

  friend bool operator==(const Interval&, const Interval&) = default;
};

class IntervalRepresentation {
 public:
  IntervalRepresentation() = default;
  explicit IntervalRepresentation(std::vector<Interval> intervals);

  std::size_t size() const noexcept { return intervals_.size(); }
  const Interval& operator[](Vertex v) const { return intervals_[static_cast<std::size_t>(v)]; }
  const std::vector<Interval>& intervals() const noexcept { return intervals_; }

  // The interval order: u < v iff right(u) < left(v).
  PartialOrder induced_order() const;

  friend bool operator==(const IntervalRepresentation&, const IntervalRepresentation&) = default;

 private:
  std::vector<Interval> intervals_;
};

// Alternating 2k-anticycle of a linear extension L of P:
//   a[i] <_P b[i]   and   a[i+1] <_L b[i] with a[i+1] not <_P b[i]
// indices mod k. The second kind of relation is called a dashed arrow.
struct Anticycle {
  std::vector<Vertex> a;
  std::vector<Vertex> b;

  std::size_t half_length() const noexcept { return a.size(); }
  friend bool operator==(const Anticycle&, const Anticycle&) = default;
};

// Transitive closure of `relations` on 0..n-1. Throws CycleError when the
// closure relates an element to itself and SizeMismatch on an out-of-range
// element.
PartialOrder make_partial_order(std::size_t n, std::span<const std::pair<Vertex, Vertex>> relations);
PartialOrder make_partial_order(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> relations);

// The linear order whose ranking is `ordering`.
PartialOrder linear_order(const Ordering& ordering);

bool is_linear_extension(const PartialOrder& order, const LinearExtension& extension);

// Calls `visit` for each linear extension in lexicographic order of the
// permutation; stops early when `visit` returns false.
void for_each_linear_extension(const PartialOrder& order,
                               const std::function<bool(const LinearExtension&)>& visit);
std::vector<LinearExtension> linear_extensions(const PartialOrder& order);

// True iff `cycle` is an alternating anticycle of `extension` over `order`
// (distinct elements, k >= 2, all listed relations present).
bool is_anticycle(const PartialOrder& order, const LinearExtension& extension, const Anticycle& cycle);

// Anticycle with exactly k pairs, or none. Throws NotAnExtension.
std::optional<Anticycle> find_anticycle_of_half_length(const PartialOrder& order,
                                                       const LinearExtension& extension,
                                                       std::size_t k);

// Smallest-k anticycle with 2 <= k <= k_max (default n/2), or none. An empty
// result for k = 2 means the extension fulfills the 2+2 rule.
std::optional<Anticycle> find_alternating_anticycle(const PartialOrder& order,
                                                    const LinearExtension& extension,
                                                    std::optional<std::size_t> k_max = std::nullopt);

// Reduces any anticycle to a 4-anticycle on a subset of its elements.
Anticycle shorten_anticycle(const PartialOrder& order, const LinearExtension& extension, Anticycle cycle);

using IntervalResult = std::variant<IntervalRepresentation, Anticycle>;

// Sweep construction of an interval representation whose interval order,
// intersected with the extension, gives back `order` exactly.
// Endpoints lie in [1, 2n]. Returns a 4-anticycle when a removal pass
// removes nothing. Throws NotAnExtension.
IntervalResult build_interval_representation(const PartialOrder& order, const LinearExtension& extension);

PartialOrder intersect_orders(const PartialOrder& first, const PartialOrder& second);

// No induced 2+2.
bool is_interval_order(const PartialOrder& order);

struct LinearIntervalWitness {
  LinearExtension extension;
  IntervalRepresentation intervals;
};

// Lexicographically least linear extension without a 4-anticycle together
// with its interval representation, or none.
std::optional<LinearIntervalWitness> recognize_linear_interval_order(const PartialOrder& order);

// Apex of v = 1-based position of v in the extension; base = its interval.
TriangleRepresentation order_to_triangles(const LinearExtension& extension,
                                          const IntervalRepresentation& intervals);

// u < v iff T(u) lies completely to the left of T(v).
PartialOrder triangle_order(const TriangleRepresentation& triangles);

}  // namespace simtri
