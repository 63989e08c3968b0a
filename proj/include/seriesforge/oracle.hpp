#pragma once

// Brute-force enumerators of the actual combinatorial objects. Nothing here
// calls the Bell or series machinery; these routines exist to check it.

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "seriesforge/bigint.hpp"
#include "seriesforge/weight_poly.hpp"

namespace seriesforge::oracle {

/// Thrown when a request exceeds an enumerator's size cap.
class EnumerationBoundError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Rooted tree node. Leaves carry a label (0 when unlabeled) and no color;
/// inner vertices carry a color >= 1 and their children.
/// Chain-increasing binary trees reuse the type: a chain has a label and at
/// most one child, a junction has color >= 1, label 0 and two children.
struct TreeNode {
  int label = 0;
  int color = 0;
  std::vector<std::shared_ptr<const TreeNode>> children;

  bool is_leaf() const { return children.empty(); }
};
using TreePtr = std::shared_ptr<const TreeNode>;

/// Every vertex has 0 or >= 2 children.
bool is_series_reduced(const TreeNode& root);
/// Inner vertices colored in 1..colors with no inner child sharing its parent's color.
bool is_multipartite(const TreeNode& root, int colors);
/// Leaf labels in depth-first order.
std::vector<int> leaf_labels(const TreeNode& root);
/// prod over inner vertices of x_{color, out-degree}.
WeightPoly tree_weight(const TreeNode& root);
/// prod over inner vertices of (out-degree - 1)!, the number of cyclic
/// arrangements of the children.
BigInt cyclic_arrangements(const TreeNode& root);
std::size_t inner_vertex_count(const TreeNode& root);

/// Canonical text of a labeled colored tree: children sorted by their codes.
std::string canonical_labeled_code(const TreeNode& root);

struct LabeledEnumeration {
  BigInt count;
  WeightPoly weight;          // sum of w(T) over all trees
  BigInt mobile_count;        // sum of cyclic_arrangements(T)
};

/// All rooted leaf-labeled m-partite series-reduced trees on labels {1..s},
/// built by recursive set partition of the label set. Caps: 1 <= s <= 8,
/// 1 <= m <= 4, at most 10^7 trees.
LabeledEnumeration enum_labeled_trees(unsigned s, unsigned m);

/// Labeled m-partite trees weighted by their cyclic arrangements. Caps: s <= 6, m <= 3.
BigInt enum_mobiles(unsigned s, unsigned m);

/// Symmetric map on unordered distinct pairs of {1..s} with values in {1..m}.
class UltraMap {
 public:
  UltraMap(unsigned s, std::vector<int> pair_values);
  unsigned size() const { return s_; }
  /// D(x, y) for x != y, both in 1..s.
  int operator()(unsigned x, unsigned y) const;
  /// At most two distinct values on every triple, and no four distinct points
  /// with D(a,b) = D(b,c) = D(c,d) != D(b,d) = D(d,a) = D(a,c).
  bool is_symbolic_ultrametric() const;

 private:
  unsigned s_;
  std::vector<int> values_;
};

/// Exhaustive count over all m^{C(s,2)} maps. Caps: s <= 5, m <= 3.
BigInt enum_ultrametrics(unsigned s, unsigned m);

/// Canonical code of an unlabeled tree: "L" for a leaf, "(" + sorted child
/// codes + ")" for an inner vertex, with the color prefixed when colored.
using CanonicalCode = std::string;

/// Rooted unlabeled series-reduced trees with s leaves bucketed by number of
/// inner vertices. Cap: s <= 8.
std::map<unsigned, BigInt> enum_unlabeled_trees(unsigned s);

/// Isomorphism classes of rooted unlabeled m-partite series-reduced trees
/// (inner vertices colored). For m >= 3 this is smaller than the number of
/// (shape, proper coloring) pairs once a shape has identical sibling subtrees.
/// Caps: s <= 6, m <= 3.
BigInt enum_unlabeled_colored_trees(unsigned s, unsigned m);

/// Binary trees with m-colored junctions and chains labeled {1..s} increasing
/// from the root. Colorings are counted as m^{junctions}. Caps: s <= 7, m <= 3.
BigInt enum_chain_increasing(unsigned s, unsigned m);

/// B_{n,k} from its definition as a sum over (alpha_1, ..., alpha_{n-k+1}).
BigRational bell_partial_by_definition(unsigned n, unsigned k, std::span<const BigRational> x);

/// Set partitions of {1..n} into exactly k blocks, each of size >= min_block,
/// by explicit enumeration of restricted growth strings. Cap: n <= 10.
BigInt count_set_partitions(unsigned n, unsigned k, unsigned min_block = 1);

/// Permutations of {1..n} with exactly k cycles (no fixed points when
/// fixed_point_free), by explicit enumeration. Cap: n <= 9.
BigInt count_permutations_by_cycles(unsigned n, unsigned k, bool fixed_point_free);

}  // namespace seriesforge::oracle
