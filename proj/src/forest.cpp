#include "snake_atlas/forest.hpp"

#include <algorithm>
#include <stdexcept>

#include "snake_atlas/errors.hpp"
#include "snake_atlas/families.hpp"

namespace snake_atlas {

namespace {

// Checks one component below `root` and collects its labels.
void check_component(const NodeArena& a, int root, std::vector<int>& labels) {
  const Node& r = a.at(root);
  if (r.is_empty()) throw std::invalid_argument("a forest root must be labelled");
  if (r.left >= 0 || r.right < 0) throw std::invalid_argument("a forest root must have exactly one child");
  labels.push_back(r.label);
  a.inorder(r.right, [&](int id) {
    const Node& v = a.at(id);
    if (v.is_empty()) {
      if (v.has_children()) throw std::invalid_argument("empty leaf with children");
      return;
    }
    if ((v.left >= 0) != (v.right >= 0))
      throw std::invalid_argument("labelled node " + std::to_string(v.label) + " has one child");
    labels.push_back(v.label);
  });
  // Increasing labels: every labelled node exceeds its labelled parent.
  a.inorder(root, [&](int id) {
    const Node& v = a.at(id);
    if (v.is_empty() || v.parent < 0) return;
    if (v.label <= a.at(v.parent).label) throw std::invalid_argument("labels must increase from each root");
  });
}

}  // namespace

IncForest IncForest::from_arena(const NodeArena& arena, std::vector<ForestComponent> components) {
  IncForest f;
  std::sort(components.begin(), components.end(), [&](const ForestComponent& x, const ForestComponent& y) {
    return arena.at(x.root).label < arena.at(y.root).label;
  });
  std::vector<int> labels;
  for (const ForestComponent& c : components) {
    const int root = arena.copy_subtree(c.root, f.arena_);
    check_component(f.arena_, root, labels);
    f.components_.push_back({c.color, root});
  }
  const int n = static_cast<int>(labels.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int x : labels) {
    if (x < 1 || x > n || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("forest labels must be exactly 1..n");
    seen[static_cast<std::size_t>(x)] = true;
  }
  f.n_ = n;
  return f;
}

IncForest IncForest::from_words(const std::vector<std::pair<RootColor, Word>>& components) {
  NodeArena a;
  std::vector<ForestComponent> comps;
  for (const auto& [color, word] : components) {
    if (word.size() < 2 || word.front() == 0)
      throw std::invalid_argument("a component word is a root label followed by its child's word");
    const int root = a.add(word.front());
    const int child = detail::build_subtree(std::span<const int>(word).subspan(1), a, root);
    a.attach_right(root, child);
    comps.push_back({color, root});
  }
  return from_arena(a, std::move(comps));
}

int IncForest::find(int label) const {
  for (const ForestComponent& c : components_) {
    int found = -1;
    arena_.inorder(c.root, [&](int id) {
      if (arena_.at(id).label == label) found = id;
    });
    if (found >= 0) return found;
  }
  return -1;
}

Word IncForest::component_word(std::size_t i) const {
  Word w;
  arena_.inorder(components_.at(i).root, [&](int id) { w.push_back(arena_.at(id).label); });
  return w;
}

std::string IncForest::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) s += ' ';
    s += components_[i].color == RootColor::white ? "W[" : "B[";
    bool first = true;
    for (int x : component_word(i)) {
      if (!first) s += ',';
      first = false;
      s += x == 0 ? "o" : std::to_string(x);
    }
    s += ']';
  }
  return s;
}

bool operator==(const IncForest& a, const IncForest& b) {
  if (a.components_.size() != b.components_.size()) return false;
  for (std::size_t i = 0; i < a.components_.size(); ++i) {
    if (a.components_[i].color != b.components_[i].color) return false;
    if (a.component_word(i) != b.component_word(i)) return false;
  }
  return true;
}

int stat_emp(const IncForest& forest) {
  int c = 0;
  for (std::size_t i = 0; i < forest.components().size(); ++i)
    for (int x : forest.component_word(i)) c += x == 0;
  return c;
}

int labelled_leaves(const IncForest& forest) {
  int c = 0;
  for (const ForestComponent& comp : forest.components())
    forest.arena().inorder(comp.root, [&](int id) {
      const Node& v = forest.node(id);
      c += !v.is_empty() && !v.has_children();
    });
  return c;
}

bool all_white(const IncForest& forest) {
  return std::all_of(forest.components().begin(), forest.components().end(),
                     [](const ForestComponent& c) { return c.color == RootColor::white; });
}

int last_root(const IncForest& forest) {
  if (forest.components().empty()) throw std::invalid_argument("the empty forest has no last root");
  return forest.node(forest.components().back().root).label;
}

std::vector<IncForest> enumerate_forests(int n, bool white_only, std::optional<int> last_root_label) {
  require_within_ceiling(n, Ceiling::forests);
  using Shape = std::vector<std::pair<RootColor, Word>>;
  std::vector<Shape> current{Shape{}};
  for (int j = 1; j <= n; ++j) {
    std::vector<Shape> next;
    for (const Shape& s : current) {
      for (std::size_t c = 0; c < s.size(); ++c) {
        const Word& w = s[c].second;
        for (std::size_t p = 1; p < w.size(); ++p) {
          if (w[p] != 0) continue;
          Shape leaf = s;
          leaf[c].second[p] = j;
          next.push_back(std::move(leaf));
          Shape inner = s;
          Word& iw = inner[c].second;
          iw.insert(iw.begin() + static_cast<std::ptrdiff_t>(p) + 1, {j, 0});
          next.push_back(std::move(inner));
        }
      }
      for (RootColor color : {RootColor::white, RootColor::black}) {
        if (white_only && color == RootColor::black) continue;
        Shape grown = s;
        grown.push_back({color, Word{j, 0}});
        next.push_back(std::move(grown));
      }
    }
    current = std::move(next);
  }
  std::vector<IncForest> out;
  out.reserve(current.size());
  for (const Shape& s : current) {
    IncForest f = IncForest::from_words(s);
    if (last_root_label && last_root(f) != *last_root_label) continue;
    out.push_back(std::move(f));
  }
  return out;
}

IncForest mu(const IncBinTree& tree) {
  if (tree.size() == 0 || classify(tree).starred)
    throw DomainError("mu expects a tree with an empty rightmost leaf, got " + tree.to_string());
  NodeArena a = tree.arena();
  std::vector<ForestComponent> comps;
  int id = tree.root();
  while (!a.at(id).is_empty()) {
    const int next = a.at(id).right;
    a.attach_right(id, a.at(id).left);
    a.at(id).left = -1;
    a.at(id).parent = -1;
    comps.push_back({RootColor::white, id});
    id = next;
  }
  return IncForest::from_arena(a, std::move(comps));
}

IncBinTree mu_inverse(const IncForest& forest) {
  if (forest.size() == 0) throw DomainError("mu_inverse: empty forest");
  if (!all_white(forest))
    throw DomainError("mu_inverse expects white roots only, got " + forest.to_string());
  NodeArena a = forest.arena();
  const auto& comps = forest.components();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const int u = comps[i].root;
    a.attach_left(u, a.at(u).right);
    const int next = i + 1 < comps.size() ? comps[i + 1].root : a.add(0);
    a.attach_right(u, next);
  }
  return IncBinTree::from_arena(a, comps.front().root);
}

}  // namespace snake_atlas
