#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace simtri {

using Vertex = int;

// A permutation of 0..n-1. Position i holds the i-th element; position() is
// the inverse map. Used both as a linear extension of an order and as a
// vertex ordering of a graph.
class Ordering {
 public:
  Ordering() = default;
  // Throws InvalidPermutation unless `order` is a bijection on 0..n-1.
  explicit Ordering(std::vector<Vertex> order);

  static Ordering identity(std::size_t n);

  std::size_t size() const noexcept { return order_.size(); }
  Vertex at(std::size_t i) const { return order_[i]; }
  std::size_t position(Vertex v) const { return position_[static_cast<std::size_t>(v)]; }
  bool before(Vertex u, Vertex v) const { return position(u) < position(v); }

  std::span<const Vertex> elements() const noexcept { return order_; }
  const std::vector<Vertex>& vector() const noexcept { return order_; }

  auto begin() const noexcept { return order_.begin(); }
  auto end() const noexcept { return order_.end(); }

  friend bool operator==(const Ordering& a, const Ordering& b) { return a.order_ == b.order_; }

 private:
  std::vector<Vertex> order_;
  std::vector<std::size_t> position_;
};

using LinearExtension = Ordering;
using VertexOrdering = Ordering;

// "2,0,1" style rendering; parse_ordering in io.hpp is the inverse.
std::string to_string(const Ordering& ordering);

}  // namespace simtri
