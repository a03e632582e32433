#include "simtri/order.hpp"

#include <gtest/gtest.h>

#include <random>
#include <variant>

#include "simtri/error.hpp"
#include "support/brute.hpp"

namespace simtri {
namespace {

using testing::all_orders;
using testing::filtered_extensions;
using testing::has_four_anticycle;

// 2+2 with a0 = 0, a1 = 1, b0 = 2, b1 = 3.
PartialOrder two_plus_two() { return make_partial_order(4, {{0, 2}, {1, 3}}); }

PartialOrder chain3() { return make_partial_order(3, {{0, 1}, {1, 2}}); }

std::vector<Interval> intervals_of(const IntervalResult& result) {
  return std::get<IntervalRepresentation>(result).intervals();
}

TEST(MakePartialOrder, ClosureAddsTransitivePairs) {
  const PartialOrder p = chain3();
  EXPECT_TRUE(p.less(0, 2));
  EXPECT_EQ(p.relation_count(), 3u);
}

TEST(MakePartialOrder, RejectsCycles) {
  EXPECT_THROW(make_partial_order(2, {{0, 1}, {1, 0}}), CycleError);
  EXPECT_THROW(make_partial_order(3, {{0, 1}, {1, 2}, {2, 0}}), CycleError);
  EXPECT_THROW(make_partial_order(1, {{0, 0}}), CycleError);
}

TEST(MakePartialOrder, EmptyRelationIsAntichain) {
  const PartialOrder p = make_partial_order(4, {});
  EXPECT_EQ(p.relation_count(), 0u);
  EXPECT_EQ(p, PartialOrder(4));
}

TEST(MakePartialOrder, OutOfRange) { EXPECT_THROW(make_partial_order(2, {{0, 2}}), SizeMismatch); }

TEST(PartialOrder, CheckedConstructorRejectsNonTransitive) {
  std::vector<char> rel(9, 0);
  rel[0 * 3 + 1] = 1;
  rel[1 * 3 + 2] = 1;
  EXPECT_THROW(PartialOrder::from_relation(3, rel), InvalidOrder);
}

TEST(LinearExtension, Membership) {
  const PartialOrder chain = make_partial_order(2, {{0, 1}});
  EXPECT_TRUE(is_linear_extension(chain, LinearExtension({0, 1})));
  EXPECT_FALSE(is_linear_extension(chain, LinearExtension({1, 0})));
  for (const auto& perm : testing::all_permutations(3)) {
    EXPECT_TRUE(is_linear_extension(PartialOrder(3), LinearExtension(perm)));
  }
  EXPECT_THROW(is_linear_extension(chain, LinearExtension({0, 1, 2})), SizeMismatch);
}

TEST(LinearExtension, EnumerationExamples) {
  const auto chain = linear_extensions(chain3());
  ASSERT_EQ(chain.size(), 1u);
  EXPECT_EQ(chain.front(), LinearExtension({0, 1, 2}));
  EXPECT_EQ(linear_extensions(PartialOrder(3)).size(), 6u);

  // Permutation filter gives the expected count for 2+2.
  const auto brute = filtered_extensions(two_plus_two());
  ASSERT_EQ(brute.size(), 6u);
  EXPECT_EQ(linear_extensions(two_plus_two()).size(), 6u);
}

TEST(LinearExtension, EnumerationMatchesPermutationFilterInLexOrder) {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& order : all_orders(n)) {
      const auto expected = filtered_extensions(order);
      const auto actual = linear_extensions(order);
      ASSERT_EQ(actual.size(), expected.size());
      for (std::size_t i = 0; i < actual.size(); ++i) EXPECT_EQ(actual[i].vector(), expected[i]);
    }
  }
}

TEST(LinearExtension, EarlyStop) {
  int visited = 0;
  for_each_linear_extension(PartialOrder(4), [&](const LinearExtension&) { return ++visited < 3; });
  EXPECT_EQ(visited, 3);
}

TEST(Anticycle, TwoPlusTwoWithInterleavedExtension) {
  const auto found = find_alternating_anticycle(two_plus_two(), LinearExtension({0, 1, 2, 3}));
  ASSERT_TRUE(found);
  EXPECT_EQ(found->a, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(found->b, (std::vector<Vertex>{2, 3}));
}

TEST(Anticycle, TwoPlusTwoRuleDischarged) {
  // L = (a0, b0, a1, b1): b0 precedes a1.
  EXPECT_FALSE(find_alternating_anticycle(two_plus_two(), LinearExtension({0, 2, 1, 3})));
}

TEST(Anticycle, FourAnticycleFoundBeforeSixAnticycle) {
  // a0..a2 = 0..2, b0..b2 = 3..5.
  const PartialOrder p = make_partial_order(6, {{0, 3}, {1, 4}, {2, 5}, {0, 4}, {1, 5}, {2, 3}});
  const LinearExtension l({0, 1, 2, 3, 4, 5});
  const Anticycle six{{0, 1, 2}, {3, 4, 5}};
  ASSERT_TRUE(is_anticycle(p, l, six));

  const auto found = find_alternating_anticycle(p, l);
  ASSERT_TRUE(found);
  EXPECT_EQ(found->half_length(), 2u);
  std::vector<Vertex> elements{found->a[0], found->a[1], found->b[0], found->b[1]};
  std::sort(elements.begin(), elements.end());
  EXPECT_EQ(elements, (std::vector<Vertex>{0, 1, 3, 5}));  // {a0, a1, b0, b2}
  EXPECT_TRUE(is_anticycle(p, l, *found));

  const auto k3 = find_anticycle_of_half_length(p, l, 3);
  ASSERT_TRUE(k3);
  EXPECT_TRUE(is_anticycle(p, l, *k3));
}

TEST(Anticycle, RequiresExtension) {
  EXPECT_THROW(find_alternating_anticycle(two_plus_two(), LinearExtension({2, 0, 1, 3})), NotAnExtension);
}

TEST(Anticycle, ShortenSixToFour) {
  const PartialOrder p = make_partial_order(6, {{0, 3}, {1, 4}, {2, 5}, {0, 4}, {1, 5}, {2, 3}});
  const LinearExtension l({0, 1, 2, 3, 4, 5});
  const Anticycle shortened = shorten_anticycle(p, l, Anticycle{{0, 1, 2}, {3, 4, 5}});
  EXPECT_EQ(shortened.half_length(), 2u);
  EXPECT_TRUE(is_anticycle(p, l, shortened));
}

TEST(Anticycle, KTwoDetectionMatchesDefinition) {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const auto& order : all_orders(n)) {
      for_each_linear_extension(order, [&](const LinearExtension& l) {
        EXPECT_EQ(find_anticycle_of_half_length(order, l, 2).has_value(), has_four_anticycle(order, l));
        return true;
      });
    }
  }
}

TEST(Anticycle, FourAnticycleIffTwoPlusTwoRuleViolated) {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const auto& order : all_orders(n)) {
      const auto N = static_cast<Vertex>(n);
      for_each_linear_extension(order, [&](const LinearExtension& l) {
        bool violated = false;
        for (Vertex a0 = 0; a0 < N; ++a0) {
          for (Vertex b0 = 0; b0 < N; ++b0) {
            for (Vertex a1 = 0; a1 < N; ++a1) {
              for (Vertex b1 = 0; b1 < N; ++b1) {
                const std::set<Vertex> four{a0, b0, a1, b1};
                if (four.size() != 4 || !order.less(a0, b0) || !order.less(a1, b1)) continue;
                // Induced 2+2: the other four pairs incomparable.
                if (order.comparable(a0, a1) || order.comparable(a0, b1) || order.comparable(b0, a1) ||
                    order.comparable(b0, b1)) {
                  continue;
                }
                if (!l.before(b0, a1) && !l.before(b1, a0)) violated = true;
              }
            }
          }
        }
        EXPECT_EQ(find_alternating_anticycle(order, l, 2).has_value(), violated);
        return true;
      });
    }
  }
}

TEST(Anticycle, EveryAnticycleImpliesAFourAnticycle) {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const auto& order : all_orders(n)) {
      for_each_linear_extension(order, [&](const LinearExtension& l) {
        if (find_alternating_anticycle(order, l)) {
          EXPECT_TRUE(find_anticycle_of_half_length(order, l, 2).has_value());
        }
        return true;
      });
    }
  }
}

TEST(IntervalConstruction, Chain) {
  const auto result = build_interval_representation(chain3(), LinearExtension({0, 1, 2}));
  EXPECT_EQ(intervals_of(result), (std::vector<Interval>{{1, 2}, {3, 4}, {5, 6}}));
}

TEST(IntervalConstruction, Antichain) {
  const auto result = build_interval_representation(PartialOrder(2), LinearExtension({0, 1}));
  EXPECT_EQ(intervals_of(result), (std::vector<Interval>{{1, 2}, {1, 2}}));
}

TEST(IntervalConstruction, TwoPlusTwo) {
  const LinearExtension l({0, 2, 1, 3});
  const auto result = build_interval_representation(two_plus_two(), l);
  // a0 = [1,4], a1 = [1,2], b0 = [5,6], b1 = [3,4].
  const auto intervals = intervals_of(result);
  EXPECT_EQ(intervals, (std::vector<Interval>{{1, 4}, {1, 2}, {5, 6}, {3, 4}}));
  const PartialOrder induced = IntervalRepresentation(intervals).induced_order();
  EXPECT_EQ(intersect_orders(linear_order(l), induced), two_plus_two());
}

TEST(IntervalConstruction, StallReturnsAnticycle) {
  const LinearExtension l({0, 1, 2, 3});
  const auto result = build_interval_representation(two_plus_two(), l);
  ASSERT_TRUE(std::holds_alternative<Anticycle>(result));
  const auto& cycle = std::get<Anticycle>(result);
  EXPECT_EQ(cycle.half_length(), 2u);
  EXPECT_TRUE(is_anticycle(two_plus_two(), l, cycle));
}

TEST(IntervalConstruction, RejectsNonExtension) {
  EXPECT_THROW(build_interval_representation(chain3(), LinearExtension({1, 0, 2})), NotAnExtension);
}

TEST(IntervalConstruction, EmptyOrder) {
  const auto result = build_interval_representation(PartialOrder(0), LinearExtension());
  EXPECT_TRUE(intervals_of(result).empty());
}

TEST(IntervalConstruction, ContractOnAllSmallOrders) {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const auto& order : all_orders(n)) {
      for_each_linear_extension(order, [&](const LinearExtension& l) {
        const auto result = build_interval_representation(order, l);
        if (has_four_anticycle(order, l)) {
          EXPECT_TRUE(std::holds_alternative<Anticycle>(result));
          if (const auto* c = std::get_if<Anticycle>(&result)) EXPECT_TRUE(is_anticycle(order, l, *c));
          return true;
        }
        const auto* rep = std::get_if<IntervalRepresentation>(&result);
        EXPECT_NE(rep, nullptr);
        if (rep == nullptr) return true;
        for (const auto& iv : rep->intervals()) {
          EXPECT_GE(iv.left, 1);
          EXPECT_LT(iv.left, iv.right);
          EXPECT_LE(iv.right, static_cast<int>(2 * n));
        }
        EXPECT_EQ(intersect_orders(linear_order(l), rep->induced_order()), order);
        return true;
      });
    }
  }
}

TEST(IntervalConstruction, RandomLargerOrders) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 6 + static_cast<std::size_t>(trial % 4);
    const PartialOrder order = testing::random_order(n, 0.3, rng);
    const LinearExtension l = testing::random_extension(order, rng);
    const auto result = build_interval_representation(order, l);
    if (const auto* rep = std::get_if<IntervalRepresentation>(&result)) {
      EXPECT_FALSE(has_four_anticycle(order, l));
      EXPECT_EQ(intersect_orders(linear_order(l), rep->induced_order()), order);
    } else {
      EXPECT_TRUE(has_four_anticycle(order, l));
      EXPECT_TRUE(is_anticycle(order, l, std::get<Anticycle>(result)));
    }
  }
}

TEST(IntersectOrders, Examples) {
  EXPECT_EQ(intersect_orders(chain3(), chain3()), chain3());
  EXPECT_EQ(intersect_orders(linear_order(LinearExtension({0, 1, 2})), PartialOrder(3)), PartialOrder(3));
  EXPECT_THROW(intersect_orders(chain3(), PartialOrder(2)), SizeMismatch);
}

TEST(IntervalOrder, Examples) {
  EXPECT_TRUE(is_interval_order(chain3()));
  EXPECT_FALSE(is_interval_order(two_plus_two()));
  EXPECT_TRUE(is_interval_order(PartialOrder(3)));
}

TEST(IntervalOrder, InducedOrdersOfIntervalsAreIntervalOrders) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coord(1, 12);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Interval> ivs;
    for (int v = 0; v < 6; ++v) {
      int a = coord(rng);
      int b = coord(rng);
      if (a == b) ++b;
      ivs.push_back({std::min(a, b), std::max(a, b)});
    }
    EXPECT_TRUE(is_interval_order(IntervalRepresentation(ivs).induced_order()));
  }
}

TEST(LinearIntervalRecognition, LinearOrderAcceptedWithItself) {
  const auto w = recognize_linear_interval_order(linear_order(LinearExtension({2, 0, 3, 1})));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->extension, LinearExtension({2, 0, 3, 1}));
}

TEST(LinearIntervalRecognition, IntervalOrdersAcceptAnyExtension) {
  for (const auto& order : all_orders(4)) {
    if (!is_interval_order(order)) continue;
    for_each_linear_extension(order, [&](const LinearExtension& l) {
      EXPECT_FALSE(find_alternating_anticycle(order, l, 2));
      return true;
    });
    EXPECT_TRUE(recognize_linear_interval_order(order));
  }
}

TEST(LinearIntervalRecognition, TwoPlusTwo) {
  const auto w = recognize_linear_interval_order(two_plus_two());
  ASSERT_TRUE(w);
  EXPECT_EQ(w->extension, LinearExtension({0, 2, 1, 3}));
  EXPECT_EQ(w->intervals.intervals(), (std::vector<Interval>{{1, 4}, {1, 2}, {5, 6}, {3, 4}}));
}

TEST(LinearIntervalRecognition, LexicographicallyLeastAcceptingExtension) {
  for (const auto& order : all_orders(5)) {
    std::optional<std::vector<Vertex>> expected;
    for (const auto& perm : filtered_extensions(order)) {
      if (!has_four_anticycle(order, LinearExtension(perm))) {
        expected = perm;
        break;
      }
    }
    const auto w = recognize_linear_interval_order(order);
    ASSERT_EQ(w.has_value(), expected.has_value());
    if (w) EXPECT_EQ(w->extension.vector(), *expected);
  }
}

TEST(OrderToTriangles, Chain) {
  const auto rep = std::get<IntervalRepresentation>(build_interval_representation(chain3(), LinearExtension({0, 1, 2})));
  const auto t = order_to_triangles(LinearExtension({0, 1, 2}), rep);
  EXPECT_EQ(t.triangles(), (std::vector<Triangle>{{1, 1, 2}, {2, 3, 4}, {3, 5, 6}}));
  EXPECT_TRUE(triangles_disjoint(t, 0, 1));
  EXPECT_TRUE(triangles_disjoint(t, 0, 2));
  EXPECT_TRUE(triangles_disjoint(t, 1, 2));
}

TEST(OrderToTriangles, Antichain) {
  const auto t = order_to_triangles(LinearExtension({0, 1}), IntervalRepresentation({{1, 2}, {1, 2}}));
  EXPECT_EQ(t[0].apex, 1);
  EXPECT_EQ(t[1].apex, 2);
  EXPECT_FALSE(triangles_disjoint(t, 0, 1));
}

TEST(OrderToTriangles, TwoPlusTwoDisjointPairs) {
  const LinearExtension l({0, 2, 1, 3});
  const auto rep = std::get<IntervalRepresentation>(build_interval_representation(two_plus_two(), l));
  const auto t = order_to_triangles(l, rep);
  EXPECT_EQ(t[0].apex, 1);
  EXPECT_EQ(t[2].apex, 2);
  EXPECT_EQ(t[1].apex, 3);
  EXPECT_EQ(t[3].apex, 4);
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v = u + 1; v < 4; ++v) {
      const bool expected = (u == 0 && v == 2) || (u == 1 && v == 3);
      EXPECT_EQ(triangles_disjoint(t, u, v), expected) << u << "," << v;
    }
  }
  EXPECT_EQ(triangle_order(t), two_plus_two());
}

TEST(OrderToTriangles, SizeMismatch) {
  EXPECT_THROW(order_to_triangles(LinearExtension({0, 1}), IntervalRepresentation({{1, 2}})), SizeMismatch);
}

}  // namespace
}  // namespace simtri
