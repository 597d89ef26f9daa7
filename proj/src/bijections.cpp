#include "snake_atlas/bijections.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "snake_atlas/errors.hpp"
#include "snake_atlas/families.hpp"

namespace snake_atlas {

namespace {

void log(Trace* trace, int j, const char* tag) {
  if (trace) trace->push_back("j=" + std::to_string(j) + ":" + tag);
}

std::size_t index_of(const Word& w, int value) {
  const auto it = std::find(w.begin(), w.end(), value);
  if (it == w.end()) throw std::logic_error("letter " + std::to_string(value) + " missing from subword");
  return static_cast<std::size_t>(it - w.begin());
}

std::size_t index_of_abs(const Word& w, int value) {
  const auto it = std::find_if(w.begin(), w.end(), [&](int x) { return std::abs(x) == value; });
  return static_cast<std::size_t>(it - w.begin());
}

// First k whose restriction has a double descent (on |.| for type I, signed for type II).
int first_bad_restriction(const SignedPermutation& s, bool absolute) {
  const Word w = absolute ? s.absolute() : s.window();
  for (int k = 1; k <= s.size(); ++k)
    if (has_double_descent(restrict_word(w, k))) return k;
  return 0;
}

void require_simsun(const SignedPermutation& s, FamilyId family, const char* name) {
  if (is_member(s, family)) return;
  const int k = first_bad_restriction(s, family == FamilyId::rsi);
  throw DomainError(std::string(name) + ": " + s.to_string() + " is not in " + std::string(family_name(family)) +
                        (k ? " (the restriction to " + std::to_string(k) + " has a double descent)" : ""),
                    k, "membership");
}

// ---------------------------------------------------------------------------
// Mutable forest used while growing or peeling.

struct WorkForest {
  NodeArena arena;
  std::vector<ForestComponent> comps;
  std::vector<int> node;  // label -> arena index

  explicit WorkForest(int n) : node(static_cast<std::size_t>(n) + 1, -1) {}

  WorkForest(const IncForest& f) : arena(f.arena()), comps(f.components()) {
    node.assign(static_cast<std::size_t>(f.size()) + 1, -1);
    for (const ForestComponent& c : comps)
      arena.inorder(c.root, [&](int id) {
        if (!arena.at(id).is_empty()) node[static_cast<std::size_t>(arena.at(id).label)] = id;
      });
  }

  int at(int label) const { return node.at(static_cast<std::size_t>(label)); }
  Node& operator[](int id) { return arena.at(id); }

  bool is_root(int id) const {
    return std::any_of(comps.begin(), comps.end(), [&](const ForestComponent& c) { return c.root == id; });
  }

  void new_root(int label, RootColor color) {
    const int r = arena.add(label);
    arena.attach_right(r, arena.add(0, r));
    comps.push_back({color, r});
    node[static_cast<std::size_t>(label)] = r;
  }

  void label_leaf(int leaf, int label) {
    arena.at(leaf).label = label;
    node[static_cast<std::size_t>(label)] = leaf;
  }

  bool is_empty_id(int id) const { return id >= 0 && arena.at(id).is_empty(); }

  // Intermediate: exactly one empty child (a root's only child counts).
  bool intermediate(int id) const {
    const Node& v = arena.at(id);
    if (is_root(id)) return is_empty_id(v.right);
    return v.has_children() && (is_empty_id(v.left) != is_empty_id(v.right));
  }
  bool two_empty(int id) const {
    const Node& v = arena.at(id);
    return v.has_children() && is_empty_id(v.left) && is_empty_id(v.right);
  }
  bool labelled_leaf(int id) const { return !arena.at(id).is_empty() && !arena.at(id).has_children(); }

  // Children (j, empty) below a labelled leaf v; returns the index of j.
  int sprout(int v, int label) {
    const int l = arena.add(label, v);
    arena.attach_left(v, l);
    arena.attach_right(v, arena.add(0, v));
    node[static_cast<std::size_t>(label)] = l;
    return l;
  }

  // Components in presentation order for type II: black roots by decreasing
  // label, then white roots by increasing label.
  std::vector<int> type_two_roots() const {
    std::vector<ForestComponent> black, white;
    for (const ForestComponent& c : comps) (c.color == RootColor::black ? black : white).push_back(c);
    auto label = [&](const ForestComponent& c) { return arena.at(c.root).label; };
    std::sort(black.begin(), black.end(), [&](auto& a, auto& b) { return label(a) > label(b); });
    std::sort(white.begin(), white.end(), [&](auto& a, auto& b) { return label(a) < label(b); });
    std::vector<int> roots;
    for (auto& c : black) roots.push_back(c.root);
    for (auto& c : white) roots.push_back(c.root);
    return roots;
  }

  bool singular(int leaf) const {
    const int p = arena.at(leaf).parent;
    if (is_root(p)) return true;
    const Node& pv = arena.at(p);
    const int sibling = pv.left == leaf ? pv.right : pv.left;
    return !arena.at(sibling).is_empty();
  }

  std::vector<int> singular_leaves() const {
    std::vector<int> out;
    for (int r : type_two_roots())
      arena.inorder(r, [&](int id) {
        if (arena.at(id).is_empty() && singular(id)) out.push_back(id);
      });
    return out;
  }

  IncForest finish() const { return IncForest::from_arena(arena, comps); }
};

RootColor color_of(int x) { return x > 0 ? RootColor::white : RootColor::black; }

// Rank (1-based) of position p among the type-II double ascents of w.
int double_ascent_rank(const Word& w, std::size_t p, int n) {
  int rank = 0;
  for (std::size_t i = 0; i <= p; ++i) rank += shape_type_two(w, i, n) == LetterShape::double_ascent;
  return rank;
}

int count_double_ascents(const Word& w, int n) {
  int c = 0;
  for (std::size_t i = 0; i < w.size(); ++i) c += shape_type_two(w, i, n) == LetterShape::double_ascent;
  return c;
}

// ---------------------------------------------------------------------------
// Peeling shared by both inverse algorithms.

struct PeelStep {
  enum class Kind { root, intermediate, terminal, singular } kind;
  int parent_label = 0;  // for intermediate / terminal
  int rank = 0;          // for singular
};

// steps[j] describes how label j was added (j = 2..n).
std::vector<PeelStep> peel(const IncForest& forest, const std::vector<int>& signs, bool type_two) {
  const int n = forest.size();
  WorkForest w(forest);
  std::vector<PeelStep> steps(static_cast<std::size_t>(n) + 1);
  for (int j = n; j >= 2; --j) {
    const int u = w.at(j);
    PeelStep& step = steps[static_cast<std::size_t>(j)];
    if (w.is_root(u)) {
      step.kind = PeelStep::Kind::root;
      w.comps.erase(std::find_if(w.comps.begin(), w.comps.end(),
                                 [&](const ForestComponent& c) { return c.root == u; }));
      continue;
    }
    const int v = w[u].parent;
    const int v_label = w[v].label;
    w[u].label = 0;
    w.arena.clear_children(u);
    bool removed = false;
    if (!w.is_root(v) && signs[static_cast<std::size_t>(v_label)] == -1 && w.two_empty(v)) {
      w.arena.clear_children(v);
      removed = true;
    }
    step.parent_label = v_label;
    if (type_two && !removed && w.singular(u)) {
      const std::vector<int> leaves = w.singular_leaves();
      step.kind = PeelStep::Kind::singular;
      step.rank = static_cast<int>(std::find(leaves.begin(), leaves.end(), u) - leaves.begin()) + 1;
    } else if (w.intermediate(v)) {
      step.kind = PeelStep::Kind::intermediate;
    } else {
      step.kind = PeelStep::Kind::terminal;
    }
  }
  if (w.comps.size() != 1 || w[w.comps.front().root].label != 1)
    throw std::logic_error("peeling did not end at a single root labelled 1");
  return steps;
}

void insert_at(Word& w, std::size_t pos, int value) { w.insert(w.begin() + static_cast<std::ptrdiff_t>(pos), value); }

// Position of the i-th type-II double ascent of w.
std::size_t nth_double_ascent(const Word& w, int i, int n) {
  int seen = 0;
  for (std::size_t p = 0; p < w.size(); ++p)
    if (shape_type_two(w, p, n) == LetterShape::double_ascent && ++seen == i) return p;
  throw std::logic_error("fewer double ascents than singular empty leaves");
}

// ---------------------------------------------------------------------------
// Type D relabelling.

int shrink(int x, int k) {
  if (std::abs(x) < k) return x;
  return x > 0 ? x - 1 : x + 1;
}
int grow(int x, int k) {
  if (std::abs(x) < k) return x;
  return x > 0 ? x + 1 : x - 1;
}

// Labels the rightmost leaf of a T° tree with k, after moving labels >= k up.
IncBinTree attach_rightmost(const IncBinTree& t, int k) {
  NodeArena a = t.arena();
  int id = t.root();
  while (a.at(id).right >= 0) id = a.at(id).right;
  for (int i = 0; i < a.node_count(); ++i)
    if (a.at(i).label >= k) a.at(i).label += 1;
  a.at(id).label = k;
  return IncBinTree::from_arena(a, t.root());
}

// Inverse of attach_rightmost on T*_{n,k}.
IncBinTree detach_rightmost(const IncBinTree& t, int k) {
  NodeArena a = t.arena();
  int id = t.root();
  while (a.at(id).right >= 0) id = a.at(id).right;
  a.at(id).label = 0;
  for (int i = 0; i < a.node_count(); ++i)
    if (a.at(i).label > k) a.at(i).label -= 1;
  return IncBinTree::from_arena(a, t.root());
}

int require_starred(const IncBinTree& tree, const char* name) {
  if (tree.size() == 0) throw DomainError(std::string(name) + ": empty tree");
  const TreeClass c = classify(tree);
  if (!c.starred || c.rmlab < 2)
    throw DomainError(std::string(name) + " expects a tree in T*_{n,k} with k >= 2, got " + tree.to_string());
  return c.rmlab;
}

void require_circ(const IncBinTree& tree, const char* name) {
  if (tree.size() == 0 || classify(tree).starred)
    throw DomainError(std::string(name) + " expects a tree in T°_{n,k}, got " + tree.to_string());
}

// Slides the letters at positions[1..] one slot to the left into
// positions[0..], drops the last position (which must be the final slot)
// and lowers every absolute value by one.
SignedPermutation slide_down(const SignedPermutation& s, const std::vector<std::size_t>& positions) {
  Word w = s.window();
  for (std::size_t c = 1; c < positions.size(); ++c) w[positions[c - 1]] = s.window()[positions[c]];
  w.pop_back();
  for (int& x : w) x = x > 0 ? x - 1 : x + 1;
  return SignedPermutation(std::move(w));
}

// Inverse of slide_down: each letter at positions[c] moves one slot to the
// right along the chain, the last one becoming a new final letter, and the
// freed first slot gets +1.
SignedPermutation slide_up(const SignedPermutation& w, const std::vector<std::size_t>& positions) {
  Word out = w.window();
  for (int& x : out) x = x > 0 ? x + 1 : x - 1;
  out.push_back(out[positions.back()]);
  for (std::size_t c = positions.size() - 1; c >= 1; --c) out[positions[c]] = out[positions[c - 1]];
  out[positions.front()] = 1;
  return SignedPermutation(std::move(out));
}

std::vector<std::size_t> right_to_left_minima(const SignedPermutation& s) {
  std::vector<std::size_t> pos;
  int best = s.size() + 1;
  for (int i = s.size(); i >= 1; --i)
    if (std::abs(s.at(i)) < best) {
      best = std::abs(s.at(i));
      pos.push_back(static_cast<std::size_t>(i - 1));
    }
  std::reverse(pos.begin(), pos.end());
  return pos;
}

std::vector<std::size_t> augmenting_positions(const SignedPermutation& s) {
  std::vector<std::size_t> pos;
  for (int k : augmenting_elements(s)) pos.push_back(index_of(s.window(), k));
  std::sort(pos.begin(), pos.end());
  return pos;
}

}  // namespace

std::vector<int> forest_signs(const IncForest& forest) {
  const int n = forest.size();
  std::vector<int> sign(static_cast<std::size_t>(n) + 1, 0);
  auto value = [&](int id) { return forest.node(id).is_empty() ? n + 1 : forest.node(id).label; };
  for (const ForestComponent& c : forest.components()) {
    sign[static_cast<std::size_t>(forest.node(c.root).label)] = c.color == RootColor::white ? 1 : -1;
    forest.arena().inorder(forest.node(c.root).right, [&](int id) {
      const Node& u = forest.node(id);
      if (u.is_empty()) return;
      int s;
      if (!u.has_children())
        s = -1;
      else if (forest.node(u.left).is_empty() && forest.node(u.right).is_empty())
        s = 1;
      else
        s = value(u.left) > value(u.right) ? 1 : -1;
      sign[static_cast<std::size_t>(u.label)] = s;
    });
  }
  return sign;
}

// ---------------------------------------------------------------------------
// Type I

IncForest phi1(const SignedPermutation& sigma, Trace* trace) {
  require_simsun(sigma, FamilyId::rsi, "phi1");
  const int n = sigma.size();
  WorkForest f(n);
  Word prev = restrict_word(sigma.letters(), 1);
  f.new_root(1, color_of(prev[0]));
  log(trace, 1, "root");
  for (int j = 2; j <= n; ++j) {
    const Word cur = restrict_word(sigma.letters(), j);
    const std::size_t p = index_of_abs(cur, j);
    const int x = cur[p];
    if (p + 1 == cur.size()) {
      f.new_root(j, color_of(x));
      log(trace, j, "i");
    } else if (shape_type_one(prev, p, j - 1) == LetterShape::double_ascent) {
      const int v = f.at(std::abs(prev[p]));
      if (!f.intermediate(v)) throw std::logic_error("phi1: double ascent without an intermediate node");
      const int leaf = f.is_empty_id(f[v].left) ? f[v].left : f[v].right;
      f.label_leaf(leaf, j);
      if (x > 0) f.arena.add_empty_pair(leaf);
      log(trace, j, "ii");
    } else if (p > 0 && shape_type_one(prev, p - 1, j - 1) == LetterShape::peak) {
      const int y = prev[p - 1];
      const int v = f.at(std::abs(y));
      int u;
      if (y > 0) {
        if (!f.two_empty(v)) throw std::logic_error("phi1: positive peak without two empty leaves");
        u = f[v].right;
        f.label_leaf(u, j);
      } else {
        if (!f.labelled_leaf(v)) throw std::logic_error("phi1: negative peak that is not a leaf");
        u = f.sprout(v, j);
      }
      if (x > 0) f.arena.add_empty_pair(u);
      log(trace, j, "iii");
    } else {
      throw DomainError("phi1: no insertion case applies at step " + std::to_string(j), j, "A");
    }
    prev = cur;
  }
  return f.finish();
}

SignedPermutation phi1_inverse(const IncForest& forest, Trace* trace) {
  const int n = forest.size();
  if (n == 0) throw DomainError("phi1_inverse: empty forest");
  const std::vector<int> sign = forest_signs(forest);
  const std::vector<PeelStep> steps = peel(forest, sign, false);
  auto sgn = [&](int label) { return sign[static_cast<std::size_t>(label)]; };
  Word w{sgn(1)};
  log(trace, 1, "root");
  for (int j = 2; j <= n; ++j) {
    const PeelStep& st = steps[static_cast<std::size_t>(j)];
    const int entry = sgn(j) * j;
    if (st.kind == PeelStep::Kind::root) {
      w.push_back(entry);
      log(trace, j, "i");
      continue;
    }
    const std::size_t at = index_of(w, sgn(st.parent_label) * st.parent_label);
    if (st.kind == PeelStep::Kind::intermediate) {
      insert_at(w, at, entry);
      log(trace, j, "ii");
    } else {
      insert_at(w, at + 1, entry);
      log(trace, j, "iii");
    }
  }
  return SignedPermutation(std::move(w));
}

IncBinTree phi1_B(const SignedPermutation& sigma, Trace* trace) {
  if (!is_member(sigma, FamilyId::rsi_b))
    throw DomainError("phi1_B: " + sigma.to_string() + " is not in rsi-b", 0, "membership");
  return mu_inverse(phi1(sigma, trace));
}

SignedPermutation phi1_B_inverse(const IncBinTree& tree, Trace* trace) {
  require_circ(tree, "phi1_B_inverse");
  return phi1_inverse(mu(tree), trace);
}

SignedPermutation phi1_D_reduce(const SignedPermutation& sigma) {
  if (!is_member(sigma, FamilyId::rsi_d) || sigma.back() > -2)
    throw DomainError("phi1_D: " + sigma.to_string() + " is not in rsi-d with last letter -k, k >= 2", 0,
                      "membership");
  const int k = -sigma.back();
  Word reduced;
  for (int i = 1; i < sigma.size(); ++i) reduced.push_back(shrink(sigma.at(i), k));
  return SignedPermutation(std::move(reduced));
}

IncBinTree phi1_D(const SignedPermutation& sigma, Trace* trace) {
  const SignedPermutation reduced = phi1_D_reduce(sigma);
  return attach_rightmost(phi1_B(reduced, trace), -sigma.back());
}

SignedPermutation phi1_D_inverse(const IncBinTree& tree, Trace* trace) {
  const int k = require_starred(tree, "phi1_D_inverse");
  const SignedPermutation reduced = phi1_B_inverse(detach_rightmost(tree, k), trace);
  Word w;
  for (int x : reduced.window()) w.push_back(grow(x, k));
  w.push_back(-k);
  return SignedPermutation(std::move(w));
}

// ---------------------------------------------------------------------------
// Type II

IncForest phi2(const SignedPermutation& sigma, Trace* trace) {
  require_simsun(sigma, FamilyId::rsii, "phi2");
  const int n = sigma.size();
  WorkForest f(n);
  Word prev = restrict_word(sigma.letters(), 1);
  f.new_root(1, color_of(prev[0]));
  log(trace, 1, "root");
  const int big = n + 1;
  for (int j = 2; j <= n; ++j) {
    const Word cur = restrict_word(sigma.letters(), j);
    const std::size_t p = index_of_abs(cur, j);
    const int x = cur[p];
    if ((x > 0 && p + 1 == cur.size()) || (x < 0 && p == 0)) {
      f.new_root(j, color_of(x));
      log(trace, j, "i");
      prev = cur;
      continue;
    }
    const int y = p > 0 ? cur[p - 1] : -big;
    const int z = p + 1 < cur.size() ? cur[p + 1] : big;
    if (y < z) {
      // The double ascent is y (x < 0) or z (x > 0); both sit in prev.
      const bool left = x < 0;
      if (left ? p == 0 : p + 1 == cur.size())
        throw DomainError("phi2: ascent insertion next to a sentinel at step " + std::to_string(j), j, "C-ii");
      const std::size_t q = left ? p - 1 : p;
      if (shape_type_two(prev, q, j - 1) != LetterShape::double_ascent)
        throw DomainError("phi2: neighbour is not a double ascent at step " + std::to_string(j), j, "C-ii");
      const std::vector<int> leaves = f.singular_leaves();
      if (static_cast<int>(leaves.size()) != count_double_ascents(prev, j - 1))
        throw std::logic_error("phi2: singular leaves and double ascents out of step");
      const int u = leaves[static_cast<std::size_t>(double_ascent_rank(prev, q, j - 1) - 1)];
      f.label_leaf(u, j);
      if (x > 0) f.arena.add_empty_pair(u);
      log(trace, j, "ii");
    } else {
      int u;
      if (std::abs(y) < std::abs(z)) {
        if (z > 0) throw DomainError("phi2: heavy bottom with positive bottom at step " + std::to_string(j), j, "C-iii");
        const int v = f.at(-z);
        if (!f.labelled_leaf(v)) throw std::logic_error("phi2: heavy bottom node is not a leaf");
        u = f.sprout(v, j);
        log(trace, j, "iii-bottom");
      } else {
        if (y < 0) throw DomainError("phi2: heavy top with negative top at step " + std::to_string(j), j, "C-iii");
        const int v = f.at(y);
        if (!f.two_empty(v)) throw std::logic_error("phi2: heavy top node lacks two empty leaves");
        u = f[v].right;
        f.label_leaf(u, j);
        log(trace, j, "iii-top");
      }
      if (x > 0) f.arena.add_empty_pair(u);
    }
    prev = cur;
  }
  return f.finish();
}

SignedPermutation phi2_inverse(const IncForest& forest, Trace* trace) {
  const int n = forest.size();
  if (n == 0) throw DomainError("phi2_inverse: empty forest");
  const std::vector<int> sign = forest_signs(forest);
  const std::vector<PeelStep> steps = peel(forest, sign, true);
  auto sgn = [&](int label) { return sign[static_cast<std::size_t>(label)]; };
  Word w{sgn(1)};
  log(trace, 1, "root");
  for (int j = 2; j <= n; ++j) {
    const PeelStep& st = steps[static_cast<std::size_t>(j)];
    switch (st.kind) {
      case PeelStep::Kind::root:
        if (sgn(j) > 0)
          w.push_back(j);
        else
          insert_at(w, 0, -j);
        log(trace, j, "i");
        break;
      case PeelStep::Kind::singular: {
        const std::size_t q = nth_double_ascent(w, st.rank, j - 1);
        if (sgn(j) > 0)
          insert_at(w, q, j);
        else
          insert_at(w, q + 1, -j);
        log(trace, j, "ii");
        break;
      }
      default: {
        const int y = st.parent_label;
        if (sgn(y) > 0)
          insert_at(w, index_of(w, y) + 1, sgn(j) * j);
        else
          insert_at(w, index_of(w, -y), sgn(j) * j);
        log(trace, j, sgn(y) > 0 ? "iii-top" : "iii-bottom");
      }
    }
  }
  return SignedPermutation(std::move(w));
}

IncBinTree phi2_B(const SignedPermutation& sigma, Trace* trace) {
  if (!is_member(sigma, FamilyId::rsii_b))
    throw DomainError("phi2_B: " + sigma.to_string() + " is not in rsii-b", 0, "membership");
  return mu_inverse(phi2(sigma, trace));
}

SignedPermutation phi2_B_inverse(const IncBinTree& tree, Trace* trace) {
  require_circ(tree, "phi2_B_inverse");
  return phi2_inverse(mu(tree), trace);
}

SignedPermutation phi2_D_reduce(const SignedPermutation& sigma) {
  if (!is_member(sigma, FamilyId::rsii_d) || sigma.front() > -2)
    throw DomainError("phi2_D: " + sigma.to_string() + " is not in rsii-d with first letter -k, k >= 2", 0,
                      "membership");
  const int k = -sigma.front();
  Word reduced;
  for (int i = 2; i <= sigma.size(); ++i) reduced.push_back(shrink(sigma.at(i), k));
  SignedPermutation s(std::move(reduced));
  const auto j = find_gae(s);
  if (!j || *j >= k) throw std::logic_error("phi2_D: reduced word has gae outside 1..k-1");
  return s;
}

IncBinTree phi2_D(const SignedPermutation& sigma, Trace* trace) {
  const SignedPermutation reduced = phi2_D_reduce(sigma);
  return attach_rightmost(phi2_B(reduced, trace), -sigma.front());
}

SignedPermutation phi2_D_inverse(const IncBinTree& tree, Trace* trace) {
  const int k = require_starred(tree, "phi2_D_inverse");
  const SignedPermutation reduced = phi2_B_inverse(detach_rightmost(tree, k), trace);
  Word w{-k};
  for (int x : reduced.window()) w.push_back(grow(x, k));
  return SignedPermutation(std::move(w));
}

// ---------------------------------------------------------------------------
// zeta maps

SignedPermutation zeta1(const SignedPermutation& sigma) {
  if (sigma.size() < 2 || !is_member(sigma, FamilyId::adi))
    throw DomainError("zeta1: " + sigma.to_string() + " is not in adi with n >= 2", 0, "membership");
  return slide_down(sigma, right_to_left_minima(sigma));
}

SignedPermutation zeta1_inverse(const SignedPermutation& omega) {
  if (!is_member(omega, FamilyId::rsi))
    throw DomainError("zeta1_inverse: " + omega.to_string() + " is not in rsi", 0, "membership");
  return slide_up(omega, right_to_left_minima(omega));
}

// Only the shape the slide needs is checked: +1 present and a positive last
// letter, so the augmenting chain starts at 1 and ends in the final slot.
// Strict ADII membership is too narrow for some words the slide handles
// correctly, e.g. (4,-2,1,3,8,5,9,-7,6).
SignedPermutation zeta2(const SignedPermutation& sigma) {
  if (sigma.size() < 2 || std::find(sigma.window().begin(), sigma.window().end(), 1) == sigma.window().end() || sigma.back() < 0)
    throw DomainError("zeta2: " + sigma.to_string() + " needs n >= 2, the letter +1 and a positive last letter", 0,
                      "shape");
  return slide_down(sigma, augmenting_positions(sigma));
}

SignedPermutation zeta2_inverse(const SignedPermutation& omega) {
  const std::vector<std::size_t> pos = augmenting_positions(omega);
  SignedPermutation sigma = [&] {
    if (!pos.empty()) return slide_up(omega, pos);
    Word w = omega.window();
    for (int& x : w) x = x > 0 ? x + 1 : x - 1;
    w.push_back(1);
    return SignedPermutation(std::move(w));
  }();
  // The chain of sigma can be longer than the one read off omega; reject
  // words that do not come back.
  if (sigma.back() < 0 || zeta2(sigma) != omega)
    throw DomainError("zeta2_inverse: " + omega.to_string() + " is not an image of zeta2", 0, "shape");
  return sigma;
}

}  // namespace snake_atlas
