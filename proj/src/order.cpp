#include "simtri/order.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "simtri/error.hpp"

namespace simtri {
namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw SizeMismatch(std::string(what) + ": sizes " + std::to_string(a) + " and " + std::to_string(b));
  }
}

void require_extension(const PartialOrder& order, const LinearExtension& extension) {
  require_same_size(order.size(), extension.size(), "order and extension");
  if (!is_linear_extension(order, extension)) {
    throw NotAnExtension("ordering " + to_string(extension) + " is not a linear extension of the order");
  }
}

// u is L-before v but not P-below it.
class DashedArrows {
 public:
  DashedArrows(const PartialOrder& order, const LinearExtension& extension)
      : n_(order.size()), dashed_(n_ * n_, 0) {
    for (std::size_t u = 0; u < n_; ++u) {
      for (std::size_t v = 0; v < n_; ++v) {
        if (u == v) continue;
        const auto su = static_cast<Vertex>(u);
        const auto sv = static_cast<Vertex>(v);
        dashed_[u * n_ + v] = extension.before(su, sv) && !order.less(su, sv);
      }
    }
  }

  bool operator()(Vertex u, Vertex v) const { return dashed_[idx(u) * n_ + idx(v)] != 0; }

 private:
  std::size_t n_;
  std::vector<char> dashed_;
};

// Depth-first search for a_0 -> b_0 <- a_1 -> b_1 ... closing with a_0 --> b_{k-1}.
// a_0 is the smallest a-label, which fixes the rotation of each cycle.
class AnticycleSearch {
 public:
  AnticycleSearch(const PartialOrder& order, const DashedArrows& dashed, std::size_t k)
      : order_(order), dashed_(dashed), k_(k), used_(order.size(), 0) {}

  std::optional<Anticycle> run() {
    const auto n = static_cast<Vertex>(order_.size());
    if (k_ < 2 || 2 * k_ > order_.size()) return std::nullopt;
    for (Vertex a0 = 0; a0 < n; ++a0) {
      cycle_.a.assign(1, a0);
      cycle_.b.clear();
      used_[idx(a0)] = 1;
      const bool found = extend_from_a();
      used_[idx(a0)] = 0;
      if (found) return cycle_;
    }
    return std::nullopt;
  }

 private:
  // Last entry of cycle_.a is placed; choose its b.
  bool extend_from_a() {
    const auto n = static_cast<Vertex>(order_.size());
    const Vertex a = cycle_.a.back();
    for (Vertex b = 0; b < n; ++b) {
      if (used_[idx(b)] || !order_.less(a, b)) continue;
      cycle_.b.push_back(b);
      used_[idx(b)] = 1;
      bool found = false;
      if (cycle_.b.size() == k_) {
        found = dashed_(cycle_.a.front(), b);
      } else {
        found = extend_from_b();
      }
      used_[idx(b)] = 0;
      if (found) return true;
      cycle_.b.pop_back();
    }
    return false;
  }

  bool extend_from_b() {
    const auto n = static_cast<Vertex>(order_.size());
    const Vertex b = cycle_.b.back();
    for (Vertex a = cycle_.a.front() + 1; a < n; ++a) {
      if (used_[idx(a)] || !dashed_(a, b)) continue;
      cycle_.a.push_back(a);
      used_[idx(a)] = 1;
      const bool found = extend_from_a();
      used_[idx(a)] = 0;
      if (found) return true;
      cycle_.a.pop_back();
    }
    return false;
  }

  const PartialOrder& order_;
  const DashedArrows& dashed_;
  std::size_t k_;
  std::vector<char> used_;
  Anticycle cycle_;
};

// Backtracking over minimal elements in increasing label order.
class ExtensionWalker {
 public:
  ExtensionWalker(const PartialOrder& order, const std::function<bool(const LinearExtension&)>& visit)
      : order_(order), visit_(visit), placed_(order.size(), 0), missing_preds_(order.size(), 0) {
    const auto n = static_cast<Vertex>(order.size());
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (order.less(u, v)) ++missing_preds_[idx(v)];
      }
    }
    prefix_.reserve(order.size());
  }

  bool run() {
    if (prefix_.size() == order_.size()) return visit_(LinearExtension(prefix_));
    const auto n = static_cast<Vertex>(order_.size());
    for (Vertex v = 0; v < n; ++v) {
      if (placed_[idx(v)] || missing_preds_[idx(v)] != 0) continue;
      place(v);
      const bool keep_going = run();
      unplace(v);
      if (!keep_going) return false;
    }
    return true;
  }

 private:
  void place(Vertex v) {
    placed_[idx(v)] = 1;
    prefix_.push_back(v);
    for (Vertex w = 0; w < static_cast<Vertex>(order_.size()); ++w) {
      if (order_.less(v, w)) --missing_preds_[idx(w)];
    }
  }

  void unplace(Vertex v) {
    placed_[idx(v)] = 0;
    prefix_.pop_back();
    for (Vertex w = 0; w < static_cast<Vertex>(order_.size()); ++w) {
      if (order_.less(v, w)) ++missing_preds_[idx(w)];
    }
  }

  const PartialOrder& order_;
  const std::function<bool(const LinearExtension&)>& visit_;
  std::vector<char> placed_;
  std::vector<int> missing_preds_;
  std::vector<Vertex> prefix_;
};

// Witness for a stalled removal pass. Every element of
// `minimal` has a dashed arrow into `rest`, and every element of `rest` is
// above some element of `minimal`, so alternating between the two sets
// must eventually close a cycle.
Anticycle grow_stall_witness(const PartialOrder& order, const LinearExtension& extension,
                             const DashedArrows& dashed, const std::vector<Vertex>& minimal,
                             const std::vector<Vertex>& rest) {
  auto dashed_target = [&](Vertex a) {
    for (Vertex b : rest) {
      if (dashed(a, b)) return b;
    }
    throw std::logic_error("stalled element without an outgoing dashed arrow");
  };
  auto minimal_below = [&](Vertex b) {
    for (Vertex a : minimal) {
      if (order.less(a, b)) return a;
    }
    throw std::logic_error("non-minimal element without a minimal predecessor");
  };

  std::vector<Vertex> xs;
  std::vector<Vertex> ys;
  std::vector<std::ptrdiff_t> seen_at(order.size(), -1);
  Vertex x = minimal.front();
  while (seen_at[idx(x)] < 0) {
    seen_at[idx(x)] = static_cast<std::ptrdiff_t>(xs.size());
    xs.push_back(x);
    ys.push_back(dashed_target(x));
    x = minimal_below(ys.back());
  }
  // xs[s..t-1] with xs[t] == xs[s]; x_j --> y_j and x_{j+1} -> y_j.
  const auto s = static_cast<std::size_t>(seen_at[idx(x)]);
  const std::size_t t = xs.size();
  xs.push_back(x);
  const std::size_t k = t - s;
  Anticycle cycle;
  for (std::size_t m = 0; m < k; ++m) {
    cycle.a.push_back(xs[t - m]);
    cycle.b.push_back(ys[t - 1 - m]);
  }
  return shorten_anticycle(order, extension, std::move(cycle));
}

}  // namespace

PartialOrder::PartialOrder(std::size_t n) : n_(n), rel_(n * n, 0) {}

PartialOrder PartialOrder::from_relation(std::size_t n, std::vector<char> relation) {
  if (relation.size() != n * n) {
    throw SizeMismatch("relation matrix must have " + std::to_string(n * n) + " entries");
  }
  for (auto& entry : relation) entry = entry ? 1 : 0;
  for (std::size_t u = 0; u < n; ++u) {
    if (relation[u * n + u]) throw InvalidOrder("element " + std::to_string(u) + " is below itself");
    for (std::size_t v = 0; v < n; ++v) {
      if (!relation[u * n + v]) continue;
      for (std::size_t w = 0; w < n; ++w) {
        if (relation[v * n + w] && !relation[u * n + w]) {
          throw InvalidOrder("relation is not transitive at (" + std::to_string(u) + ", " +
                             std::to_string(v) + ", " + std::to_string(w) + ")");
        }
      }
    }
  }
  return PartialOrder(n, std::move(relation));
}

std::size_t PartialOrder::relation_count() const {
  return static_cast<std::size_t>(std::count(rel_.begin(), rel_.end(), char{1}));
}

std::vector<std::pair<Vertex, Vertex>> PartialOrder::relations() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = 0; v < n_; ++v) {
      if (rel_[u * n_ + v]) out.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  return out;
}

IntervalRepresentation::IntervalRepresentation(std::vector<Interval> intervals)
    : intervals_(std::move(intervals)) {
  for (std::size_t v = 0; v < intervals_.size(); ++v) {
    if (intervals_[v].left >= intervals_[v].right) {
      throw InvalidRepresentation("interval of element " + std::to_string(v) + " is not proper");
    }
  }
}

PartialOrder IntervalRepresentation::induced_order() const {
  const std::size_t n = intervals_.size();
  std::vector<char> rel(n * n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      rel[u * n + v] = intervals_[u].right < intervals_[v].left;
    }
  }
  return PartialOrder::from_relation(n, std::move(rel));
}

PartialOrder make_partial_order(std::size_t n, std::span<const std::pair<Vertex, Vertex>> relations) {
  std::vector<char> rel(n * n, 0);
  for (const auto& [u, v] : relations) {
    if (u < 0 || v < 0 || idx(u) >= n || idx(v) >= n) {
      throw SizeMismatch("relation (" + std::to_string(u) + ", " + std::to_string(v) +
                         ") is outside 0.." + std::to_string(n) + "-1");
    }
    rel[idx(u) * n + idx(v)] = 1;
  }
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t u = 0; u < n; ++u) {
      if (!rel[u * n + k]) continue;
      for (std::size_t v = 0; v < n; ++v) {
        if (rel[k * n + v]) rel[u * n + v] = 1;
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (rel[v * n + v]) {
      throw CycleError("relations force element " + std::to_string(v) + " below itself");
    }
  }
  return PartialOrder::from_relation(n, std::move(rel));
}

PartialOrder make_partial_order(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> relations) {
  return make_partial_order(n, std::span<const std::pair<Vertex, Vertex>>(relations.begin(), relations.size()));
}

PartialOrder linear_order(const Ordering& ordering) {
  const std::size_t n = ordering.size();
  std::vector<char> rel(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      rel[idx(ordering.at(i)) * n + idx(ordering.at(j))] = 1;
    }
  }
  return PartialOrder::from_relation(n, std::move(rel));
}

bool is_linear_extension(const PartialOrder& order, const LinearExtension& extension) {
  require_same_size(order.size(), extension.size(), "order and extension");
  for (const auto& [u, v] : order.relations()) {
    if (!extension.before(u, v)) return false;
  }
  return true;
}

void for_each_linear_extension(const PartialOrder& order,
                               const std::function<bool(const LinearExtension&)>& visit) {
  ExtensionWalker(order, visit).run();
}

std::vector<LinearExtension> linear_extensions(const PartialOrder& order) {
  std::vector<LinearExtension> out;
  for_each_linear_extension(order, [&](const LinearExtension& l) {
    out.push_back(l);
    return true;
  });
  return out;
}

bool is_anticycle(const PartialOrder& order, const LinearExtension& extension, const Anticycle& cycle) {
  const std::size_t k = cycle.a.size();
  if (k < 2 || cycle.b.size() != k) return false;
  std::vector<char> used(order.size(), 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (Vertex v : {cycle.a[i], cycle.b[i]}) {
      if (v < 0 || idx(v) >= order.size() || used[idx(v)]) return false;
      used[idx(v)] = 1;
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex next_a = cycle.a[(i + 1) % k];
    if (!order.less(cycle.a[i], cycle.b[i])) return false;
    if (!extension.before(next_a, cycle.b[i]) || order.less(next_a, cycle.b[i])) return false;
  }
  return true;
}

std::optional<Anticycle> find_anticycle_of_half_length(const PartialOrder& order,
                                                       const LinearExtension& extension, std::size_t k) {
  require_extension(order, extension);
  const DashedArrows dashed(order, extension);
  return AnticycleSearch(order, dashed, k).run();
}

std::optional<Anticycle> find_alternating_anticycle(const PartialOrder& order,
                                                    const LinearExtension& extension,
                                                    std::optional<std::size_t> k_max) {
  require_extension(order, extension);
  const DashedArrows dashed(order, extension);
  const std::size_t limit = std::min(k_max.value_or(order.size() / 2), order.size() / 2);
  for (std::size_t k = 2; k <= limit; ++k) {
    if (auto found = AnticycleSearch(order, dashed, k).run()) return found;
  }
  return std::nullopt;
}

Anticycle shorten_anticycle(const PartialOrder& order, const LinearExtension& extension, Anticycle cycle) {
  if (!is_anticycle(order, extension, cycle)) {
    throw std::invalid_argument("shorten_anticycle: input is not an alternating anticycle");
  }
  while (cycle.a.size() > 2) {
    const std::size_t k = cycle.a.size();
    bool progressed = false;
    for (std::size_t i = 0; i < k && !progressed; ++i) {
      const std::size_t j = (i + 1) % k;
      const Vertex a_i = cycle.a[i];
      const Vertex b_j = cycle.b[j];
      if (order.less(a_i, b_j)) {
        // (a_i, b_i), (a_j, b_j) collapse into (a_i, b_j).
        cycle.b[i] = b_j;
        cycle.a.erase(cycle.a.begin() + static_cast<std::ptrdiff_t>(j));
        cycle.b.erase(cycle.b.begin() + static_cast<std::ptrdiff_t>(j));
        progressed = true;
      } else if (extension.before(a_i, b_j)) {
        cycle = Anticycle{{a_i, cycle.a[j]}, {cycle.b[i], b_j}};
        progressed = true;
      }
    }
    // Every b_{i+1} preceding a_i would make the extension cyclic.
    if (!progressed) throw std::logic_error("shorten_anticycle: extension is not linear");
  }
  return cycle;
}

IntervalResult build_interval_representation(const PartialOrder& order, const LinearExtension& extension) {
  require_extension(order, extension);
  const std::size_t n = order.size();
  const DashedArrows dashed(order, extension);

  std::vector<char> in_rest(n, 1);  // V
  std::vector<char> in_minimal(n, 0);  // S
  std::vector<Interval> intervals(n);
  std::size_t remaining = n;
  int counter = 0;

  while (remaining > 0) {
    ++counter;
    // Elements of V \ S that are minimal in the suborder induced by V.
    for (Vertex a : extension) {
      if (!in_rest[idx(a)] || in_minimal[idx(a)]) continue;
      bool minimal = true;
      for (Vertex b : extension) {
        if (in_rest[idx(b)] && order.less(b, a)) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        in_minimal[idx(a)] = 1;
        intervals[idx(a)].left = counter;
      }
    }

    ++counter;
    std::vector<Vertex> removable;
    for (Vertex a : extension) {
      if (!in_minimal[idx(a)]) continue;
      bool blocked = false;
      for (Vertex b : extension) {
        if (in_rest[idx(b)] && !in_minimal[idx(b)] && dashed(a, b)) {
          blocked = true;
          break;
        }
      }
      if (!blocked) removable.push_back(a);
    }

    if (removable.empty()) {
      std::vector<Vertex> minimal;
      std::vector<Vertex> rest;
      for (Vertex v : extension) {
        if (in_minimal[idx(v)]) {
          minimal.push_back(v);
        } else if (in_rest[idx(v)]) {
          rest.push_back(v);
        }
      }
      return grow_stall_witness(order, extension, dashed, minimal, rest);
    }
    for (Vertex a : removable) {
      in_rest[idx(a)] = 0;
      in_minimal[idx(a)] = 0;
      intervals[idx(a)].right = counter;
      --remaining;
    }
  }
  return IntervalRepresentation(std::move(intervals));
}

PartialOrder intersect_orders(const PartialOrder& first, const PartialOrder& second) {
  require_same_size(first.size(), second.size(), "intersect_orders");
  const std::size_t n = first.size();
  std::vector<char> rel(n * n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      const auto su = static_cast<Vertex>(u);
      const auto sv = static_cast<Vertex>(v);
      rel[u * n + v] = first.less(su, sv) && second.less(su, sv);
    }
  }
  return PartialOrder::from_relation(n, std::move(rel));
}

bool is_interval_order(const PartialOrder& order) {
  // a0 < b0 and a1 < b1 with a0 !< b1 and a1 !< b0 already forces the other
  // four pairs to be incomparable.
  const auto pairs = order.relations();
  for (const auto& [a0, b0] : pairs) {
    for (const auto& [a1, b1] : pairs) {
      if (a1 == a0 || a1 == b0 || b1 == a0 || b1 == b0) continue;
      if (!order.less(a0, b1) && !order.less(a1, b0)) return false;
    }
  }
  return true;
}

std::optional<LinearIntervalWitness> recognize_linear_interval_order(const PartialOrder& order) {
  const std::size_t n = order.size();
  std::vector<Vertex> prefix;
  std::vector<std::size_t> position(n, 0);
  std::vector<char> placed(n, 0);
  std::optional<LinearExtension> accepted;

  // A 4-anticycle whose L-last element is v, which then plays b1.
  auto closes_anticycle = [&](Vertex v) {
    for (Vertex a1 : prefix) {
      if (!order.less(a1, v)) continue;
      for (Vertex a0 : prefix) {
        if (a0 == a1 || order.less(a0, v)) continue;
        for (Vertex b0 : prefix) {
          if (b0 == a1 || b0 == a0 || !order.less(a0, b0)) continue;
          if (position[idx(a1)] < position[idx(b0)] && !order.less(a1, b0)) return true;
        }
      }
    }
    return false;
  };

  std::function<bool()> search = [&]() -> bool {
    if (prefix.size() == n) {
      accepted.emplace(prefix);
      return true;
    }
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
      if (placed[idx(v)]) continue;
      bool ready = true;
      for (Vertex u = 0; u < static_cast<Vertex>(n) && ready; ++u) {
        if (!placed[idx(u)] && order.less(u, v)) ready = false;
      }
      if (!ready || closes_anticycle(v)) continue;
      placed[idx(v)] = 1;
      position[idx(v)] = prefix.size();
      prefix.push_back(v);
      if (search()) return true;
      prefix.pop_back();
      placed[idx(v)] = 0;
    }
    return false;
  };

  if (!search()) return std::nullopt;
  auto result = build_interval_representation(order, *accepted);
  auto* intervals = std::get_if<IntervalRepresentation>(&result);
  if (intervals == nullptr) {
    throw std::logic_error("anticycle-free extension stalled the interval construction");
  }
  return LinearIntervalWitness{*accepted, std::move(*intervals)};
}

TriangleRepresentation order_to_triangles(const LinearExtension& extension,
                                          const IntervalRepresentation& intervals) {
  require_same_size(extension.size(), intervals.size(), "extension and intervals");
  std::vector<Triangle> triangles(extension.size());
  for (std::size_t v = 0; v < triangles.size(); ++v) {
    const auto sv = static_cast<Vertex>(v);
    triangles[v] = Triangle{static_cast<int>(extension.position(sv)) + 1, intervals[sv].left, intervals[sv].right};
  }
  return TriangleRepresentation(std::move(triangles));
}

PartialOrder triangle_order(const TriangleRepresentation& triangles) {
  const std::size_t n = triangles.size();
  std::vector<char> rel(n * n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v) rel[u * n + v] = triangle_left_of(triangles, static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  return PartialOrder::from_relation(n, std::move(rel));
}

}  // namespace simtri
