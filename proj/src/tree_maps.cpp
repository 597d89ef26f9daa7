#include "snake_atlas/tree_maps.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "snake_atlas/errors.hpp"

namespace snake_atlas {

namespace {

// Adds `delta` to every label strictly above `threshold`.
void shift_labels_above(NodeArena& a, int threshold, int delta) {
  for (int id = 0; id < a.node_count(); ++id)
    if (a.at(id).label > threshold) a.at(id).label += delta;
}

int find_in(const NodeArena& a, int root, int label) {
  int found = -1;
  a.inorder(root, [&](int id) {
    if (a.at(id).label == label) found = id;
  });
  return found;
}

void swap_labels(NodeArena& a, int root, int x, int y) {
  const int ix = find_in(a, root, x);
  const int iy = find_in(a, root, y);
  a.at(ix).label = y;
  a.at(iy).label = x;
}

int rightmost_leaf(const NodeArena& a, int root) {
  int id = root;
  while (a.at(id).right >= 0) id = a.at(id).right;
  return id;
}

IncBinTree rebuild(const NodeArena& a, int root, const char* map) {
  try {
    return IncBinTree::from_arena(a, root);
  } catch (const std::invalid_argument& e) {
    throw std::logic_error(std::string(map) + " produced an invalid tree: " + e.what());
  }
}

TreeClass require_class(const IncBinTree& t, const char* map) {
  if (t.size() == 0) throw DomainError(std::string(map) + ": the lone empty leaf is not in the domain");
  return classify(t);
}

}  // namespace

PsiResult psi_star(const IncBinTree& tree) {
  const TreeClass c = require_class(tree, "psi_star");
  if (!c.starred || c.rmlab < 2)
    throw DomainError("psi_star expects a tree in T*_{n,k} with k >= 2, got " + tree.to_string());
  const int k = c.rmlab;
  NodeArena a = tree.arena();
  const int root = tree.root();
  const int v = find_in(a, root, k);
  const int u = find_in(a, root, k - 1);
  if (a.at(v).parent != u) {
    swap_labels(a, root, k - 1, k);
    return {rebuild(a, root, "psi_star"), "a"};
  }
  a.at(v).label = 0;
  shift_labels_above(a, k, -1);
  return {rebuild(a, root, "psi_star"), "b"};
}

IncBinTree psi_star_inverse(const IncBinTree& image) {
  const TreeClass c = require_class(image, "psi_star_inverse");
  NodeArena a = image.arena();
  const int root = image.root();
  if (c.starred) {
    if (c.rmlab >= image.size())
      throw DomainError("psi_star_inverse: T*_{n,n} is not in the image, got " + image.to_string());
    swap_labels(a, root, c.rmlab, c.rmlab + 1);
    return rebuild(a, root, "psi_star_inverse");
  }
  const int leaf = rightmost_leaf(a, root);
  shift_labels_above(a, c.rmlab, 1);
  a.at(leaf).label = c.rmlab + 1;
  return rebuild(a, root, "psi_star_inverse");
}

PsiResult psi_circ(const IncBinTree& tree) {
  const TreeClass c = require_class(tree, "psi_circ");
  if (c.starred || c.rmlab >= tree.size())
    throw DomainError("psi_circ expects a tree in T°_{n,k} with k < n, got " + tree.to_string());
  const int k = c.rmlab;
  NodeArena a = tree.arena();
  const int root = tree.root();
  const int v = find_in(a, root, k);
  const int w = find_in(a, root, k + 1);
  if (a.at(w).parent != v) {
    swap_labels(a, root, k, k + 1);
    return {rebuild(a, root, "psi_circ"), "a"};
  }
  // v's right child is the empty rightmost leaf, so w is its left child.
  if (!a.at(w).has_children()) {
    a.clear_children(v);
    shift_labels_above(a, k + 1, -1);
    return {rebuild(a, root, "psi_circ"), "b-leaf"};
  }
  const int tau1 = a.at(w).left;
  const int tau2 = a.at(w).right;
  a.attach_left(v, tau1);
  a.attach_right(v, w);
  a.attach_left(w, tau2);
  a.attach_right(w, a.add(0, w));
  return {rebuild(a, root, "psi_circ"), "b-internal"};
}

IncBinTree psi_circ_inverse(const IncBinTree& image) {
  const TreeClass c = require_class(image, "psi_circ_inverse");
  NodeArena a = image.arena();
  const int root = image.root();
  if (c.starred) {
    const int v = find_in(a, root, c.rmlab);
    shift_labels_above(a, c.rmlab, 1);
    a.attach_left(v, a.add(c.rmlab + 1, v));
    a.attach_right(v, a.add(0, v));
    return rebuild(a, root, "psi_circ_inverse");
  }
  if (c.rmlab < 2)
    throw DomainError("psi_circ_inverse: T°_{n,1} is not in the image, got " + image.to_string());
  const int k = c.rmlab - 1;
  const int v = find_in(a, root, k);
  const int w = find_in(a, root, k + 1);
  if (a.at(w).parent != v) {
    swap_labels(a, root, k, k + 1);
    return rebuild(a, root, "psi_circ_inverse");
  }
  const int tau1 = a.at(v).left;
  const int tau2 = a.at(w).left;
  a.attach_left(v, w);
  a.attach_right(v, a.add(0, v));
  a.attach_left(w, tau1);
  a.attach_right(w, tau2);
  return rebuild(a, root, "psi_circ_inverse");
}

IncBinTree psi_cap(const IncBinTree& tree) {
  const TreeClass c = require_class(tree, "psi_cap");
  if (!c.starred || c.rmlab != tree.size())
    throw DomainError("psi_cap expects a tree in T*_{n,n}, got " + tree.to_string());
  NodeArena a = tree.arena();
  a.add_empty_pair(find_in(a, tree.root(), c.rmlab));
  return rebuild(a, tree.root(), "psi_cap");
}

IncBinTree psi_cap_inverse(const IncBinTree& image) {
  const TreeClass c = require_class(image, "psi_cap_inverse");
  if (c.starred || c.rmlab != image.size())
    throw DomainError("psi_cap_inverse expects a tree in T°_{n,n}, got " + image.to_string());
  NodeArena a = image.arena();
  a.clear_children(find_in(a, image.root(), c.rmlab));
  return rebuild(a, image.root(), "psi_cap_inverse");
}

SignedPermutation gamma(const IncBinTree& tree) {
  const int n = tree.size();
  if (n == 0) throw DomainError("gamma: the lone empty leaf has no image");
  const Word w = tree.inorder_word();
  Word out;
  out.reserve(static_cast<std::size_t>(n));
  int empties_after = 0;
  // Walk right to left so the empty-leaf count is available and the result
  // comes out already reversed.
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it == 0) {
      ++empties_after;
      continue;
    }
    const int value = n - *it + 1;
    out.push_back(empties_after % 2 == 1 ? value : -value);
  }
  return SignedPermutation(std::move(out));
}

IncBinTree gamma_inverse(const SignedPermutation& snake) {
  if (!is_beta_snake(snake))
    throw DomainError("gamma_inverse expects a beta-snake, got " + snake.to_string());
  const int n = static_cast<int>(snake.size());
  // Inorder word = z_0 L_1 z_1 ... L_n z_n with gaps z_m in {0,1}. Label L_m
  // comes from snake entry n-m+1, whose sign gives the parity of z_m + ... + z_n.
  std::vector<int> labels(static_cast<std::size_t>(n) + 1);
  std::vector<int> parity(static_cast<std::size_t>(n) + 2, 0);
  for (int m = 1; m <= n; ++m) {
    const int x = snake.at(n - m + 1);
    labels[static_cast<std::size_t>(m)] = n - std::abs(x) + 1;
    parity[static_cast<std::size_t>(m)] = x > 0 ? 1 : 0;
  }
  std::vector<int> gaps(static_cast<std::size_t>(n) + 1, 0);
  for (int m = 1; m <= n; ++m)
    gaps[static_cast<std::size_t>(m)] =
        (parity[static_cast<std::size_t>(m)] + parity[static_cast<std::size_t>(m) + 1]) % 2;
  // The leading gap is not constrained by any sign; try both and keep the
  // word that rebuilds into a tree with the right image.
  for (int lead = 0; lead <= 1; ++lead) {
    Word w;
    if (lead) w.push_back(0);
    for (int m = 1; m <= n; ++m) {
      w.push_back(labels[static_cast<std::size_t>(m)]);
      if (gaps[static_cast<std::size_t>(m)]) w.push_back(0);
    }
    try {
      IncBinTree t = IncBinTree::from_word(w);
      if (gamma(t) == snake) return t;
    } catch (const std::invalid_argument&) {
    }
  }
  throw DomainError("gamma_inverse: no tree maps to " + snake.to_string());
}

}  // namespace snake_atlas
