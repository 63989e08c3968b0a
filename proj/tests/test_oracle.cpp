#include <set>
#include <vector>

#include "doctest.h"
#include "seriesforge/oracle.hpp"

using namespace seriesforge;
using namespace seriesforge::oracle;

namespace {

TreePtr leaf(int label) {
  auto n = std::make_shared<TreeNode>();
  n->label = label;
  return n;
}

TreePtr inner(int color, std::vector<TreePtr> children) {
  auto n = std::make_shared<TreeNode>();
  n->color = color;
  n->children = std::move(children);
  return n;
}

}  // namespace

TEST_CASE("tree predicates") {
  auto t = inner(1, {leaf(1), inner(2, {leaf(2), leaf(3), leaf(4)})});
  CHECK(is_series_reduced(*t));
  CHECK(is_multipartite(*t, 2));
  CHECK_FALSE(is_multipartite(*t, 1));
  CHECK(leaf_labels(*t) == std::vector<int>{1, 2, 3, 4});
  CHECK(tree_weight(*t) == weight_var(1, 2) * weight_var(2, 3));
  CHECK(cyclic_arrangements(*t) == BigInt(2));
  CHECK(inner_vertex_count(*t) == 2);

  auto same_color = inner(1, {leaf(1), inner(1, {leaf(2), leaf(3)})});
  CHECK_FALSE(is_multipartite(*same_color, 2));
  auto unary = inner(1, {inner(2, {leaf(1), leaf(2)})});
  CHECK_FALSE(is_series_reduced(*unary));

  auto swapped = inner(1, {inner(2, {leaf(4), leaf(3), leaf(2)}), leaf(1)});
  CHECK(canonical_labeled_code(*t) == canonical_labeled_code(*swapped));
}

TEST_CASE("labeled tree enumeration") {
  auto e = enum_labeled_trees(3, 2);
  CHECK(e.count == BigInt(8));
  CHECK(e.weight == weight_var(1, 3) + weight_var(2, 3) + 6 * weight_var(1, 2) * weight_var(2, 2));
  auto one = enum_labeled_trees(1, 3);
  CHECK(one.count == BigInt(1));
  CHECK(one.weight == WeightPoly(1));
  CHECK(enum_labeled_trees(5, 2).count == BigInt(472));
  CHECK_THROWS_AS(enum_labeled_trees(9, 2), EnumerationBoundError);
  CHECK_THROWS_AS(enum_labeled_trees(3, 5), EnumerationBoundError);
}

TEST_CASE("mobile enumeration") {
  CHECK(enum_mobiles(3, 2) == BigInt(10));
  CHECK(enum_mobiles(1, 3) == BigInt(1));
  CHECK(enum_mobiles(4, 3) == BigInt(318));
  CHECK_THROWS_AS(enum_mobiles(7, 1), EnumerationBoundError);
}

TEST_CASE("UltraMap") {
  UltraMap d(3, {1, 2, 2});  // D(1,2)=1, D(1,3)=2, D(2,3)=2
  CHECK(d(2, 1) == 1);
  CHECK(d(3, 2) == 2);
  CHECK(d.is_symbolic_ultrametric());
  CHECK_THROWS_AS(d(1, 1), std::out_of_range);
  CHECK_THROWS_AS(UltraMap(3, {1, 2}), std::invalid_argument);
  CHECK_FALSE(UltraMap(3, {1, 2, 3}).is_symbolic_ultrametric());
  // Path 1-2-3-4 valued 1 with the complementary pairs valued 2.
  // Pairs in order: (1,2) (1,3) (1,4) (2,3) (2,4) (3,4).
  CHECK_FALSE(UltraMap(4, {1, 2, 2, 1, 2, 1}).is_symbolic_ultrametric());
  CHECK(UltraMap(4, {1, 1, 1, 1, 1, 1}).is_symbolic_ultrametric());
}

TEST_CASE("ultrametric enumeration") {
  CHECK(enum_ultrametrics(3, 2) == BigInt(8));
  CHECK(enum_ultrametrics(4, 2) == BigInt(52));  // of 2^6 = 64 maps
  for (unsigned m = 1; m <= 3; ++m) CHECK(enum_ultrametrics(2, m) == BigInt(m));
  CHECK_THROWS_AS(enum_ultrametrics(6, 2), EnumerationBoundError);
}

TEST_CASE("unlabeled tree enumeration") {
  CHECK(enum_unlabeled_trees(1) == std::map<unsigned, BigInt>{{0, BigInt(1)}});
  CHECK(enum_unlabeled_trees(4) == std::map<unsigned, BigInt>{{1, BigInt(1)}, {2, BigInt(2)}, {3, BigInt(2)}});
  CHECK(enum_unlabeled_trees(6) ==
        std::map<unsigned, BigInt>{{1, BigInt(1)}, {2, BigInt(4)}, {3, BigInt(10)}, {4, BigInt(12)}, {5, BigInt(6)}});
  CHECK_THROWS_AS(enum_unlabeled_trees(9), EnumerationBoundError);
  CHECK(enum_unlabeled_colored_trees(4, 2) == BigInt(10));
}

TEST_CASE("chain-increasing enumeration") {
  CHECK(enum_chain_increasing(3, 1) == BigInt(8));
  for (unsigned m = 0; m <= 3; ++m) CHECK(enum_chain_increasing(1, m) == BigInt(1));
  CHECK(enum_chain_increasing(4, 2) == BigInt(243));
  CHECK(enum_chain_increasing(5, 0) == BigInt(1));
  CHECK_THROWS_AS(enum_chain_increasing(8, 1), EnumerationBoundError);
}

TEST_CASE("counting helpers") {
  CHECK(count_set_partitions(4, 2) == BigInt(7));
  CHECK(count_set_partitions(4, 2, 2) == BigInt(3));
  CHECK(count_set_partitions(0, 0) == BigInt(1));
  CHECK(count_permutations_by_cycles(3, 1, true) == BigInt(2));
  CHECK(count_permutations_by_cycles(4, 2, false) == BigInt(11));
  std::vector<BigRational> ones(5, BigRational(1));
  CHECK(bell_partial_by_definition(5, 2, ones) == BigRational(15));
  CHECK(bell_partial_by_definition(0, 0, ones) == BigRational(1));
}
