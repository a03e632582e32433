#include "simtri/ordering.hpp"

#include <numeric>
#include <sstream>

#include "simtri/error.hpp"

namespace simtri {

Ordering::Ordering(std::vector<Vertex> order) : order_(std::move(order)), position_(order_.size(), 0) {
  const std::size_t n = order_.size();
  std::vector<char> seen(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = order_[i];
    if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)]) {
      throw InvalidPermutation("ordering is not a permutation of 0.." + std::to_string(n) + "-1");
    }
    seen[static_cast<std::size_t>(v)] = 1;
    position_[static_cast<std::size_t>(v)] = i;
  }
}

Ordering Ordering::identity(std::size_t n) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  return Ordering(std::move(order));
}

std::string to_string(const Ordering& ordering) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ordering.size(); ++i) {
    if (i) out << ',';
    out << ordering.at(i);
  }
  return out.str();
}

}  // namespace simtri
