#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "snake_atlas/node_arena.hpp"
#include "snake_atlas/signed_permutation.hpp"

namespace snake_atlas {

/// Complete increasing binary tree with n labelled nodes and empty leaves
/// (an element of T_n). Every labelled node has zero or two children and
/// labels increase away from the root. n = 0 is the lone empty leaf, which
/// only appears as the seed of the growth process.
///
/// The canonical serialization is the inorder word, with 0 for empty leaves.
class IncBinTree {
 public:
  /// The tree consisting of a single empty leaf.
  IncBinTree();

  /// Rebuilds the unique tree with this inorder word; the root is the
  /// smallest label and each flank is rebuilt recursively. Throws
  /// std::invalid_argument if the word is not the inorder word of a tree in T_n.
  static IncBinTree from_word(std::span<const int> word);

  /// Takes the reachable part of `arena` below `root`, validating every invariant.
  static IncBinTree from_arena(const NodeArena& arena, int root);

  int size() const noexcept { return n_; }
  int root() const noexcept { return root_; }
  const NodeArena& arena() const noexcept { return arena_; }
  const Node& node(int id) const { return arena_.at(id); }

  /// Node index holding `label`, or -1.
  int find(int label) const;

  Word inorder_word() const;

  /// Inorder word with "o" for empty leaves, e.g. "o,1,o,2,o".
  std::string to_string() const;

  friend bool operator==(const IncBinTree& a, const IncBinTree& b) {
    return a.inorder_word() == b.inorder_word();
  }

 private:
  NodeArena arena_;
  int root_ = 0;
  int n_ = 0;
};

/// Membership in T*_{n,k} (starred) or T°_{n,k}, where k = rmlab.
struct TreeClass {
  bool starred = false;
  int rmlab = 0;

  friend bool operator==(const TreeClass&, const TreeClass&) = default;
};

/// Number of empty leaves.
int stat_emp(const IncBinTree& tree);

/// Number of labelled leaves.
int labelled_leaves(const IncBinTree& tree);

/// Label of the last labelled node on the rightmost path.
int stat_rmlab(const IncBinTree& tree);

TreeClass classify(const IncBinTree& tree);

/// True when the leaf at the end of the leftmost path is empty.
bool in_TL(const IncBinTree& tree);

/// Mirror image (left and right exchanged at every node).
IncBinTree flip(const IncBinTree& tree);

/// All of T_n, or the trees of one class, in the order produced by the growth
/// process: starting from one empty leaf, label j is placed on each empty
/// leaf (in inorder) first as a labelled leaf, then with two empty children.
/// Throws CeilingExceeded above the tree ceiling.
std::vector<IncBinTree> enumerate_trees(int n, std::optional<TreeClass> filter = std::nullopt);

/// Inorder words of all of T_n, in the same order as enumerate_trees.
std::vector<Word> enumerate_tree_words(int n);

namespace detail {
/// Builds the complete subtree with this inorder word below `parent` and
/// returns its index. Labels need not be 1..m; the root is the minimum.
/// Throws std::invalid_argument when the word has no such subtree.
int build_subtree(std::span<const int> word, NodeArena& arena, int parent);
}  // namespace detail

}  // namespace snake_atlas
