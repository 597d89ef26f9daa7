#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "snake_atlas/node_arena.hpp"
#include "snake_atlas/signed_permutation.hpp"
#include "snake_atlas/tree.hpp"

namespace snake_atlas {

enum class RootColor { white, black };

/// One component: its root colour and the arena index of the root. The root
/// has a single child, stored as `right`.
struct ForestComponent {
  RootColor color = RootColor::white;
  int root = -1;
};

/// Element of F_n: coloured-root increasing forests in which every root has
/// one child and every other internal node two ordered children. Components
/// are kept in increasing order of their roots.
class IncForest {
 public:
  /// The empty forest (n = 0).
  IncForest() = default;

  /// Copies the listed components out of `arena`, sorts them by root label
  /// and validates every invariant (std::invalid_argument on failure).
  static IncForest from_arena(const NodeArena& arena, std::vector<ForestComponent> components);

  /// Builds from (colour, word) pairs, where a word is the root label followed
  /// by the inorder word of the root's child, 0 marking empty leaves.
  static IncForest from_words(const std::vector<std::pair<RootColor, Word>>& components);

  int size() const noexcept { return n_; }
  const NodeArena& arena() const noexcept { return arena_; }
  const Node& node(int id) const { return arena_.at(id); }
  const std::vector<ForestComponent>& components() const noexcept { return components_; }

  /// Node index holding `label`, or -1.
  int find(int label) const;

  /// Root label followed by the inorder word of the child.
  Word component_word(std::size_t i) const;

  /// E.g. "W[1,o] B[2,o,3,o]", components in root order.
  std::string to_string() const;

  friend bool operator==(const IncForest& a, const IncForest& b);

 private:
  NodeArena arena_;
  std::vector<ForestComponent> components_;
  int n_ = 0;
};

int stat_emp(const IncForest& forest);
int labelled_leaves(const IncForest& forest);
bool all_white(const IncForest& forest);
/// Root label of the last component (the largest root).
int last_root(const IncForest& forest);

/// F_n, F^(W)_n or F^(W)_{n,k}, grown label by label: each new label j is
/// placed on each empty leaf (as a leaf, then with two empty children), then
/// as a new white root, then as a new black root. Throws CeilingExceeded.
std::vector<IncForest> enumerate_forests(int n, bool white_only = false,
                                         std::optional<int> last_root_label = std::nullopt);

/// T°_{n,k} -> F^(W)_{n,k}: drop the rightmost leaf and the rightmost-path
/// edges; each path node becomes a white root over its former left subtree.
IncForest mu(const IncBinTree& tree);

/// Inverse of mu; throws DomainError when a root is black.
IncBinTree mu_inverse(const IncForest& forest);

}  // namespace snake_atlas
