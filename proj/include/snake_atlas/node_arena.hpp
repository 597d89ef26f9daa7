#pragma once

#include <vector>

namespace snake_atlas {

/// One vertex of a plane tree. Label 0 marks an empty leaf.
///
/// Forest roots have a single child, stored as `right`, so that an inorder
/// walk visits a root before its subtree.
struct Node {
  int label = 0;
  int parent = -1;
  int left = -1;
  int right = -1;

  bool is_empty() const noexcept { return label == 0; }
  bool has_children() const noexcept { return left >= 0 || right >= 0; }
};

/// Index-linked node storage shared by trees and forests. Nodes are never
/// erased; detached nodes are simply unreachable and dropped on compaction.
class NodeArena {
 public:
  int add(int label, int parent = -1) {
    nodes_.push_back(Node{label, parent, -1, -1});
    return static_cast<int>(nodes_.size()) - 1;
  }

  /// Gives `id` two fresh empty leaves.
  void add_empty_pair(int id) {
    const int l = add(0, id);
    const int r = add(0, id);
    nodes_[static_cast<std::size_t>(id)].left = l;
    nodes_[static_cast<std::size_t>(id)].right = r;
  }

  void attach_left(int parent, int child) {
    at(parent).left = child;
    if (child >= 0) at(child).parent = parent;
  }
  void attach_right(int parent, int child) {
    at(parent).right = child;
    if (child >= 0) at(child).parent = parent;
  }

  /// Drops the children of `id` (they become unreachable).
  void clear_children(int id) {
    at(id).left = -1;
    at(id).right = -1;
  }

  Node& at(int id) { return nodes_[static_cast<std::size_t>(id)]; }
  const Node& at(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
  int node_count() const noexcept { return static_cast<int>(nodes_.size()); }

  /// Inorder walk (left, node, right) from `id`.
  template <class F>
  void inorder(int id, F&& visit) const {
    if (id < 0) return;
    inorder(at(id).left, visit);
    visit(id);
    inorder(at(id).right, visit);
  }

  /// Copies the subtree under `id` into `dest`, returning the new index.
  int copy_subtree(int id, NodeArena& dest, int parent = -1) const {
    const Node& src = at(id);
    const int nid = dest.add(src.label, parent);
    if (src.left >= 0) {
      const int l = copy_subtree(src.left, dest, nid);
      dest.at(nid).left = l;
    }
    if (src.right >= 0) {
      const int r = copy_subtree(src.right, dest, nid);
      dest.at(nid).right = r;
    }
    return nid;
  }

 private:
  std::vector<Node> nodes_;
};

}  // namespace snake_atlas
