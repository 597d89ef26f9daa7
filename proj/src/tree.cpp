#include "snake_atlas/tree.hpp"

#include <algorithm>
#include <stdexcept>

#include "snake_atlas/families.hpp"

namespace snake_atlas {

namespace {

int build_from_word(std::span<const int> w, std::size_t lo, std::size_t hi, NodeArena& arena,
                    int parent) {
  std::size_t m = hi;
  for (std::size_t i = lo; i < hi; ++i)
    if (w[i] != 0 && (m == hi || w[i] < w[m])) m = i;
  if (m == hi) {
    if (hi - lo != 1) throw std::invalid_argument("adjacent empty leaves in an inorder word");
    return arena.add(0, parent);
  }
  const int id = arena.add(w[m], parent);
  const bool has_left = m > lo;
  const bool has_right = m + 1 < hi;
  if (has_left != has_right)
    throw std::invalid_argument("label " + std::to_string(w[m]) + " would have a single child");
  if (has_left) {
    const int l = build_from_word(w, lo, m, arena, id);
    const int r = build_from_word(w, m + 1, hi, arena, id);
    arena.at(id).left = l;
    arena.at(id).right = r;
  }
  return id;
}

void check_labels(const NodeArena& arena, int root, int& n_out) {
  std::vector<int> labels;
  arena.inorder(root, [&](int id) {
    const Node& v = arena.at(id);
    if (v.is_empty()) {
      if (v.has_children()) throw std::invalid_argument("empty leaf with children");
      return;
    }
    if ((v.left >= 0) != (v.right >= 0))
      throw std::invalid_argument("labelled node " + std::to_string(v.label) + " has one child");
    for (int c : {v.left, v.right}) {
      if (c >= 0 && !arena.at(c).is_empty() && arena.at(c).label <= v.label)
        throw std::invalid_argument("labels must increase from the root");
    }
    labels.push_back(v.label);
  });
  const int n = static_cast<int>(labels.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int x : labels) {
    if (x < 1 || x > n || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("tree labels must be exactly 1..n");
    seen[static_cast<std::size_t>(x)] = true;
  }
  n_out = n;
}

}  // namespace

namespace detail {
int build_subtree(std::span<const int> word, NodeArena& arena, int parent) {
  if (word.empty()) throw std::invalid_argument("empty subtree word");
  return build_from_word(word, 0, word.size(), arena, parent);
}
}  // namespace detail

IncBinTree::IncBinTree() { root_ = arena_.add(0); }

IncBinTree IncBinTree::from_word(std::span<const int> word) {
  if (word.empty()) throw std::invalid_argument("empty inorder word");
  IncBinTree t;
  t.arena_ = NodeArena{};
  t.root_ = build_from_word(word, 0, word.size(), t.arena_, -1);
  check_labels(t.arena_, t.root_, t.n_);
  return t;
}

IncBinTree IncBinTree::from_arena(const NodeArena& arena, int root) {
  IncBinTree t;
  t.arena_ = NodeArena{};
  t.root_ = arena.copy_subtree(root, t.arena_);
  check_labels(t.arena_, t.root_, t.n_);
  return t;
}

int IncBinTree::find(int label) const {
  for (int id = 0; id < arena_.node_count(); ++id)
    if (arena_.at(id).label == label) return id;
  return -1;
}

Word IncBinTree::inorder_word() const {
  Word w;
  arena_.inorder(root_, [&](int id) { w.push_back(arena_.at(id).label); });
  return w;
}

std::string IncBinTree::to_string() const {
  std::string s;
  for (int x : inorder_word()) {
    if (!s.empty()) s += ',';
    s += x == 0 ? "o" : std::to_string(x);
  }
  return s;
}

int stat_emp(const IncBinTree& tree) {
  int c = 0;
  for (int x : tree.inorder_word()) c += x == 0;
  return c;
}

int labelled_leaves(const IncBinTree& tree) {
  int c = 0;
  tree.arena().inorder(tree.root(), [&](int id) {
    const Node& v = tree.node(id);
    c += !v.is_empty() && !v.has_children();
  });
  return c;
}

TreeClass classify(const IncBinTree& tree) {
  if (tree.size() == 0) throw std::invalid_argument("the lone empty leaf has no class");
  int id = tree.root();
  int last_label = 0;
  while (true) {
    const Node& v = tree.node(id);
    if (v.is_empty()) return {false, last_label};
    last_label = v.label;
    if (v.right < 0) return {true, last_label};
    id = v.right;
  }
}

int stat_rmlab(const IncBinTree& tree) { return classify(tree).rmlab; }

bool in_TL(const IncBinTree& tree) {
  int id = tree.root();
  while (tree.node(id).left >= 0) id = tree.node(id).left;
  return tree.node(id).is_empty();
}

IncBinTree flip(const IncBinTree& tree) {
  Word w = tree.inorder_word();
  std::reverse(w.begin(), w.end());
  return IncBinTree::from_word(w);
}

std::vector<Word> enumerate_tree_words(int n) {
  require_within_ceiling(n, Ceiling::trees);
  std::vector<Word> current{Word{0}};
  for (int j = 1; j <= n; ++j) {
    std::vector<Word> next;
    next.reserve(current.size() * static_cast<std::size_t>(2 * j));
    for (const Word& w : current) {
      for (std::size_t p = 0; p < w.size(); ++p) {
        if (w[p] != 0) continue;
        Word leaf = w;
        leaf[p] = j;
        next.push_back(std::move(leaf));
        Word inner(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
        inner.insert(inner.end(), {0, j, 0});
        inner.insert(inner.end(), w.begin() + static_cast<std::ptrdiff_t>(p) + 1, w.end());
        next.push_back(std::move(inner));
      }
    }
    current = std::move(next);
  }
  return current;
}

std::vector<IncBinTree> enumerate_trees(int n, std::optional<TreeClass> filter) {
  std::vector<IncBinTree> out;
  for (const Word& w : enumerate_tree_words(n)) {
    IncBinTree t = IncBinTree::from_word(w);
    if (filter && classify(t) != *filter) continue;
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace snake_atlas
