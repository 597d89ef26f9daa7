#include "snake_atlas/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "snake_atlas/bijections.hpp"
#include "snake_atlas/errors.hpp"
#include "snake_atlas/families.hpp"
#include "snake_atlas/fixtures.hpp"
#include "snake_atlas/forest.hpp"
#include "snake_atlas/qcalc.hpp"
#include "snake_atlas/tree.hpp"
#include "snake_atlas/tree_maps.hpp"
#include "snake_atlas/triangles.hpp"

namespace snake_atlas {

namespace {

struct CheckFailed {
  Counterexample cx;
};

std::string describe(std::int64_t x) { return std::to_string(x); }
std::string describe(int x) { return std::to_string(x); }
std::string describe(bool x) { return x ? "true" : "false"; }
std::string describe(const LaurentPoly& p) { return p.to_string(); }
std::string describe(const BiPoly& p) { return p.to_string(); }
std::string describe(const SignedPermutation& s) { return s.to_string(); }
std::string describe(const IncBinTree& t) { return t.to_string(); }
std::string describe(const IncForest& f) { return f.to_string(); }
std::string describe(const TreeClass& c) {
  return std::string(c.starred ? "T*" : "T°") + "(rmlab=" + std::to_string(c.rmlab) + ")";
}
std::string describe(const Word& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}
template <class T>
std::string describe(const std::vector<T>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + describe(v[i]);
  return s + "]";
}
template <class V>
std::string describe(const DoubleTriangle<V>& tri) {
  std::string s;
  for (int r = 1; r <= tri.size(); ++r) s += (r > 1 ? " / " : "") + describe(tri.row(r));
  return s;
}

template <class A, class B>
void expect_equal(const std::string& inputs, const A& expected, const B& actual) {
  if (!(expected == actual)) throw CheckFailed{{inputs, describe(expected), describe(actual)}};
}

void expect(bool ok, const std::string& inputs, const std::string& expected, const std::string& actual) {
  if (!ok) throw CheckFailed{{inputs, expected, actual}};
}

std::string at_n(int n) { return "n=" + std::to_string(n); }
std::string at_nk(int n, int k) { return "n=" + std::to_string(n) + ", k=" + std::to_string(k); }

LaurentPoly t_pow(int e) { return LaurentPoly::monomial(1, e); }

// Reference value for n, when the list reaches that far.
std::optional<std::int64_t> table_value(const std::vector<std::int64_t>& row, int n) {
  if (n < 1 || n > static_cast<int>(row.size())) return std::nullopt;
  return row[static_cast<std::size_t>(n - 1)];
}

std::int64_t pow2(int n) { return std::int64_t{1} << n; }

// Sum of t^emp over the trees satisfying `keep`.
LaurentPoly tree_poly(const std::vector<IncBinTree>& trees, const std::function<bool(const IncBinTree&)>& keep) {
  LaurentPoly p;
  for (const auto& t : trees)
    if (keep(t)) p += t_pow(stat_emp(t));
  return p;
}

LaurentPoly class_poly(const std::vector<IncBinTree>& trees, bool starred, int k) {
  return tree_poly(trees, [&](const IncBinTree& t) { return classify(t) == TreeClass{starred, k}; });
}

template <class Stat>
LaurentPoly perm_poly(FamilyId f, int n, std::optional<Anchor> anchor, Stat exponent) {
  LaurentPoly p;
  for (const auto& s : enumerate_family(f, n, anchor)) p += t_pow(exponent(s));
  return p;
}

// ---------------------------------------------------------------------------
// Recurrences

void check_eq1(int n) {
  const auto e = entringer(n);
  expect_equal(at_n(n) + " E_{1,1}", std::int64_t{1}, e.at(1, 1));
  for (int r = 2; r <= n; ++r) {
    expect_equal(at_nk(r, 1) + " E_{r,1}", std::int64_t{0}, e.at(r, 1));
    for (int k = 2; k <= r; ++k)
      expect_equal(at_nk(r, k) + " recurrence", e.at(r, k - 1) + e.at(r - 1, r - k + 1), e.at(r, k));
  }
  if (auto v = table_value(fixtures::euler_numbers(), n)) expect_equal(at_n(n) + " row sum", *v, e.row_sum(n));
  // The brute-force comparison is limited to n <= 7 to keep the check fast.
  if (n <= 7)
    for (int k = 1; k <= n; ++k) {
      const auto count = static_cast<std::int64_t>(
          enumerate_family(FamilyId::alternating_unsigned, n, Anchor{Anchor::Kind::first, k}).size());
      expect_equal(at_nk(n, k) + " alternating permutations starting with k", e.at(n, k), count);
    }
}

void check_eq2(int n) {
  const auto v = arnold(n);
  expect_equal(at_n(n) + " v_{1,1}", std::int64_t{1}, v.at(1, 1));
  expect_equal(at_n(n) + " v_{1,-1}", std::int64_t{1}, v.at(1, -1));
  for (int r = 2; r <= n; ++r) {
    expect_equal(at_nk(r, -r), std::int64_t{0}, v.at(r, -r));
    for (int k = 1; k < r; ++k) expect_equal(at_nk(r, -k), v.at(r, -k - 1) + v.at(r - 1, k), v.at(r, -k));
    expect_equal(at_nk(r, 1), v.at(r, -1), v.at(r, 1));
    for (int k = 2; k <= r; ++k) expect_equal(at_nk(r, k), v.at(r, k - 1) + v.at(r - 1, -k + 1), v.at(r, k));
    std::int64_t tele = 0;
    for (int j = 2; j <= r; ++j) tele += v.at(r - 1, -j + 1);
    expect_equal(at_n(r) + " telescoping", tele, v.at(r, r) - v.at(r, 1));
  }
  if (auto b = table_value(fixtures::springer_b(), n)) expect_equal(at_n(n) + " K(B_n)", *b, half_row_sum(v, n, 1));
  if (auto d = table_value(fixtures::springer_d(), n)) expect_equal(at_n(n) + " K(D_n)", *d, half_row_sum(v, n, -1));
}

void check_eq5(int n) {
  const auto tri = arnold_poly(n);
  expect_equal(at_n(n) + " V at t=1", arnold(n), at_one(tri));
  for (int k = -n; k <= n; ++k) {
    if (k == 0) continue;
    const auto& p = tri.at(n, k);
    expect(p.is_zero() || p.min_exp() >= 0, at_nk(n, k), "no negative exponent", p.to_string());
    for (auto c : p.coeffs()) expect(c >= 0, at_nk(n, k), "nonnegative coefficients", p.to_string());
    expect(p.has_parity(n % 2 == 1 ? 0 : 1), at_nk(n, k), "single parity", p.to_string());
  }
}

void check_thm_1_1(int n) {
  std::map<int, std::int64_t> by_first;
  for_each_signed_permutation(n, [&](const SignedPermutation& s) {
    if (is_beta_snake(s)) ++by_first[s.front()];
  });
  const auto v = arnold(n);
  for (int k = -n; k <= n; ++k)
    if (k != 0) expect_equal(at_nk(n, k) + " snakes starting with k", v.at(n, k), by_first[k]);
}

void check_thm_1_2(int n) {
  expect(arnold_hoffman_identity_holds(n), at_n(n), "Q_n and P_n - tQ_n match the half-row sums", "mismatch");
  expect_equal(at_n(n) + " P_{n+1} = (1+t^2) R_n", hoffman_P(n + 1), LaurentPoly(0, {1, 0, 1}) * hoffman_R(n));
  if (auto e = table_value(fixtures::euler_numbers(), n))
    expect_equal(at_n(n) + " P_n(1)", pow2(n) * *e, hoffman_P(n).evaluate(1));
  if (auto b = table_value(fixtures::springer_b(), n)) expect_equal(at_n(n) + " Q_n(1)", *b, hoffman_Q(n).evaluate(1));
  if (auto d = table_value(fixtures::springer_d(), n))
    expect_equal(at_n(n) + " P_n(1)-Q_n(1)", *d, hoffman_P(n).evaluate(1) - hoffman_Q(n).evaluate(1));
}

// ---------------------------------------------------------------------------
// Trees

void check_thm_2_2(int n) {
  const auto trees = enumerate_trees(n);
  expect_equal(at_n(n) + " sum over T_n", hoffman_P(n), tree_poly(trees, [](const IncBinTree&) { return true; }));
  expect_equal(at_n(n) + " sum over T°_n", hoffman_Q(n),
               tree_poly(trees, [](const IncBinTree& t) { return !classify(t).starred; }).shifted(-1));
}

void check_thm_2_3(int n) {
  const auto trees = enumerate_trees(n);
  const auto v = arnold_poly(n);
  for (int k = 1; k <= n; ++k) {
    expect_equal(at_nk(n, k) + " T°", v.at(n, k), class_poly(trees, false, n - k + 1));
    expect_equal(at_nk(n, -k) + " T*", v.at(n, -k), class_poly(trees, true, n - k + 1));
  }
}

void check_prop_3_1(int n) {
  const auto trees = enumerate_trees(n);
  const auto smaller = n > 1 ? enumerate_trees(n - 1) : std::vector<IncBinTree>{};
  auto star = [&](int k) { return class_poly(trees, true, k); };
  auto circ = [&](int k) { return class_poly(trees, false, k); };
  auto star_prev = [&](int k) { return class_poly(smaller, true, k); };
  auto circ_prev = [&](int k) { return class_poly(smaller, false, k); };
  for (int k = 2; k <= n; ++k)
    expect_equal(at_nk(n, k) + " (i)", star(k - 1) + circ_prev(k - 1).shifted(-1), star(k));
  expect_equal(at_n(n) + " (ii)", star(n).shifted(2), circ(n));
  for (int k = 1; k < n; ++k) expect_equal(at_nk(n, k) + " (iii)", circ(k + 1) + star_prev(k).shifted(1), circ(k));

  // The maps behind the identities: injective, onto the stated union, with
  // the emp change fixed by the target class.
  auto keys = [](const std::vector<IncBinTree>& ts, auto pred) {
    std::set<std::string> s;
    for (const auto& t : ts)
      if (pred(t)) s.insert(t.to_string());
    return s;
  };
  for (int k = 1; k <= n; ++k) {
    if (k >= 2) {
      std::set<std::string> image;
      for (const auto& t : trees) {
        if (classify(t) != TreeClass{true, k}) continue;
        const PsiResult r = psi_star(t);
        const bool same_size = r.tree.size() == n;
        expect_equal(describe(t) + " psi_star emp change", stat_emp(t) + (same_size ? 0 : 1), stat_emp(r.tree));
        expect_equal(describe(t) + " psi_star inverse", t, psi_star_inverse(r.tree));
        image.insert(r.tree.to_string());
      }
      auto target = keys(trees, [&](const IncBinTree& t) { return classify(t) == TreeClass{true, k - 1}; });
      const auto lower = keys(smaller, [&](const IncBinTree& t) { return classify(t) == TreeClass{false, k - 1}; });
      target.insert(lower.begin(), lower.end());
      expect(image == target, at_nk(n, k), "psi_star onto T*_{n,k-1} u T°_{n-1,k-1}", "different image");
    }
    if (k < n) {
      std::set<std::string> image;
      for (const auto& t : trees) {
        if (classify(t) != TreeClass{false, k}) continue;
        const PsiResult r = psi_circ(t);
        const bool same_size = r.tree.size() == n;
        expect_equal(describe(t) + " psi_circ emp change", stat_emp(t) - (same_size ? 0 : 1), stat_emp(r.tree));
        expect_equal(describe(t) + " psi_circ inverse", t, psi_circ_inverse(r.tree));
        image.insert(r.tree.to_string());
      }
      auto target = keys(trees, [&](const IncBinTree& t) { return classify(t) == TreeClass{false, k + 1}; });
      const auto lower = keys(smaller, [&](const IncBinTree& t) { return classify(t) == TreeClass{true, k}; });
      target.insert(lower.begin(), lower.end());
      expect(image == target, at_nk(n, k), "psi_circ onto T°_{n,k+1} u T*_{n-1,k}", "different image");
    }
  }
  std::set<std::string> capped;
  for (const auto& t : trees) {
    if (classify(t) != TreeClass{true, n}) continue;
    const IncBinTree c = psi_cap(t);
    expect_equal(describe(t) + " psi_cap emp change", stat_emp(t) + 2, stat_emp(c));
    expect_equal(describe(t) + " psi_cap inverse", t, psi_cap_inverse(c));
    capped.insert(c.to_string());
  }
  expect(capped == keys(trees, [&](const IncBinTree& t) { return classify(t) == TreeClass{false, n}; }), at_n(n),
         "psi_cap onto T°_{n,n}", "different image");
}

void check_cor_3_2(int n) {
  if (n < 2) return;
  const auto trees = enumerate_trees(n);
  const auto smaller = enumerate_trees(n - 1);
  for (int k = 2; k <= n; ++k) {
    LaurentPoly sum;
    for (int j = 1; j < k; ++j) sum += class_poly(smaller, false, j);
    expect_equal(at_nk(n, k), sum.shifted(-1), class_poly(trees, true, k));
  }
}

void check_cor_3_3(int n) {
  const auto trees = enumerate_trees(n);
  const auto g = gamma_arrays(n);
  LaurentPoly total;
  for (int k = 1; k <= n; ++k) {
    const int label = n - k + 1;
    auto left_class = [&](bool starred) {
      return tree_poly(trees, [&](const IncBinTree& t) { return in_TL(t) && classify(t) == TreeClass{starred, label}; });
    };
    expect_equal(at_nk(n, k) + " T(L)°", left_class(false), g.at(n, k));
    expect_equal(at_nk(n, -k) + " T(L)*", left_class(true), g.at(n, -k));
    total += g.at(n, k) + g.at(n, -k);
  }
  expect_equal(at_n(n) + " Q_n", hoffman_Q(n), total.shifted(-1));
  expect_equal(at_n(n) + " flip", tree_poly(trees, [](const IncBinTree& t) { return in_TL(t); }),
               tree_poly(trees, [](const IncBinTree& t) { return !classify(t).starred; }));
}

void check_cor_3_4(int n) {
  const auto trees = enumerate_trees(n);
  std::set<SignedPermutation> image;
  std::map<int, std::int64_t> gamma_counts;
  for (const auto& t : trees) {
    const SignedPermutation s = gamma(t);
    expect(is_beta_snake(s), describe(t), "a beta-snake", describe(s));
    expect_equal(describe(t) + " gamma inverse", t, gamma_inverse(s));
    const TreeClass c = classify(t);
    expect_equal(describe(t) + " first letter", (c.starred ? -1 : 1) * (n - c.rmlab + 1), s.front());
    expect_equal(describe(t) + " leftmost leaf vs gamma-snake", in_TL(t), is_gamma_snake(s));
    if (is_gamma_snake(s)) ++gamma_counts[s.front()];
    image.insert(s);
  }
  expect_equal(at_n(n) + " injective", static_cast<std::int64_t>(trees.size()), static_cast<std::int64_t>(image.size()));
  if (auto e = table_value(fixtures::euler_numbers(), n))
    expect_equal(at_n(n) + " #S_n", pow2(n) * *e, static_cast<std::int64_t>(image.size()));
  const auto g = at_one(gamma_arrays(n));
  for (int k = -n; k <= n; ++k)
    if (k != 0) expect_equal(at_nk(n, k) + " gamma-snakes", g.at(n, k), gamma_counts[k]);
}

// ---------------------------------------------------------------------------
// Permutation families

void check_thm_2_7(int n) {
  expect_equal(at_n(n) + " RSI", hoffman_R(n),
               perm_poly(FamilyId::rsi, n, std::nullopt, [&](const auto& s) { return n - 2 * stat_npk(s); }));
}

void check_thm_2_10(int n) {
  const auto v = arnold_poly(n);
  for (int k = 1; k <= n; ++k) {
    const int j = n - k + 1;
    expect_equal(at_nk(n, k) + " RSI-B", v.at(n, k),
                 perm_poly(FamilyId::rsi_b, n, Anchor{Anchor::Kind::last, j},
                           [&](const auto& s) { return n + 1 - 2 * stat_npk(s); }));
    expect_equal(at_nk(n, -k) + " RSI-D", v.at(n, -k),
                 perm_poly(FamilyId::rsi_d, n, Anchor{Anchor::Kind::last, -j},
                           [&](const auto& s) { return n - 1 - 2 * stat_npk(s); }));
  }
}

void check_thm_2_13(int n) {
  expect_equal(at_n(n) + " RSII", hoffman_R(n),
               perm_poly(FamilyId::rsii, n, std::nullopt, [&](const auto& s) { return n - 2 * stat_nva(s); }));
  const auto v = arnold_poly(n);
  for (int k = 1; k <= n; ++k) {
    const int j = n - k + 1;
    expect_equal(at_nk(n, k) + " RSII-B", v.at(n, k),
                 perm_poly(FamilyId::rsii_b, n, Anchor{Anchor::Kind::gae, j},
                           [&](const auto& s) { return n + 1 - 2 * stat_nva(s); }));
    expect_equal(at_nk(n, -k) + " RSII-D", v.at(n, -k),
                 perm_poly(FamilyId::rsii_d, n, Anchor{Anchor::Kind::first, -j},
                           [&](const auto& s) { return n - 1 - 2 * stat_nva(s); }));
  }
}

void check_conj_2_9(int n) {
  const auto v = arnold(n);
  for (int k = 1; k <= n; ++k)
    expect_equal(at_nk(n, k), v.at(n, k),
                 static_cast<std::int64_t>(
                     enumerate_family(FamilyId::rsi_b, n, Anchor{Anchor::Kind::last, n - k + 1}).size()));
}

// ---------------------------------------------------------------------------
// Forests and bijections

void check_eq_13(int n) {
  const auto all = enumerate_forests(n);
  LaurentPoly sum, white;
  for (const auto& f : all) {
    expect_equal(describe(f) + " emp", n - 2 * labelled_leaves(f), stat_emp(f));
    sum += t_pow(stat_emp(f));
    if (all_white(f)) white += t_pow(stat_emp(f));
  }
  expect_equal(at_n(n) + " F_n", hoffman_R(n), sum);
  expect_equal(at_n(n) + " white forests", hoffman_Q(n), white);
}

// Shared body of the two forest bijections.
void check_forest_bijection(int n, bool two) {
  const auto family = two ? FamilyId::rsii : FamilyId::rsi;
  const auto forests = enumerate_forests(n);
  std::set<std::string> image;
  for (const auto& s : enumerate_family(family, n)) {
    const IncForest f = two ? phi2(s) : phi1(s);
    const int stat = two ? stat_nva(s) : stat_npk(s);
    expect_equal(describe(s) + " emp", n - 2 * stat, stat_emp(f));
    expect_equal(describe(s) + " inverse", s, two ? phi2_inverse(f) : phi1_inverse(f));
    const bool b = is_member(s, two ? FamilyId::rsii_b : FamilyId::rsi_b);
    expect_equal(describe(s) + " type B iff all roots white", b, all_white(f));
    if (b) {
      const int k = two ? stat_gae(s) : s.back();
      expect_equal(describe(s) + " last root", k, last_root(f));
      const IncBinTree t = two ? phi2_B(s) : phi1_B(s);
      expect_equal(describe(s) + " B class", TreeClass{false, k}, classify(t));
      expect_equal(describe(s) + " B emp", n + 1 - 2 * stat, stat_emp(t));
      expect_equal(describe(s) + " B inverse", s, two ? phi2_B_inverse(t) : phi1_B_inverse(t));
      expect_equal(describe(t) + " mu", f, mu(t));
      expect_equal(describe(t) + " mu emp", stat_emp(t) - 1, stat_emp(mu(t)));
      expect_equal(describe(f) + " mu inverse", t, mu_inverse(f));
    }
    image.insert(f.to_string());
  }
  std::set<std::string> all;
  for (const auto& f : forests) all.insert(f.to_string());
  expect(image == all, at_n(n), "image equals F_n (" + std::to_string(all.size()) + " forests)",
         std::to_string(image.size()) + " distinct images");
}

void check_type_d_bijection(int n, bool two) {
  std::set<std::string> image;
  for (const auto& s : enumerate_family(two ? FamilyId::rsii_d : FamilyId::rsi_d, n)) {
    const int k = two ? -s.front() : -s.back();
    if (k < 2) continue;
    const IncBinTree t = two ? phi2_D(s) : phi1_D(s);
    const int stat = two ? stat_nva(s) : stat_npk(s);
    expect_equal(describe(s) + " class", TreeClass{true, k}, classify(t));
    expect_equal(describe(s) + " emp", n - 1 - 2 * stat, stat_emp(t));
    expect_equal(describe(s) + " inverse", s, two ? phi2_D_inverse(t) : phi1_D_inverse(t));
    image.insert(t.to_string());
  }
  std::set<std::string> target;
  for (const auto& t : enumerate_trees(n)) {
    const TreeClass c = classify(t);
    if (c.starred && c.rmlab >= 2) target.insert(t.to_string());
  }
  expect(image == target, at_n(n), "image equals T*_{n,k}, k >= 2", "different image");
}

void check_zeta(int n, bool two) {
  const auto source = enumerate_family(two ? FamilyId::adii : FamilyId::adi, n + 1);
  const auto target_family = two ? FamilyId::rsii : FamilyId::rsi;
  const auto target_size = enumerate_family(target_family, n).size();
  std::set<SignedPermutation> image;
  for (const auto& s : source) {
    const SignedPermutation w = two ? zeta2(s) : zeta1(s);
    expect(is_member(w, target_family), describe(s), "image in the Simsun family", describe(w));
    expect_equal(describe(s) + " inverse", s, two ? zeta2_inverse(w) : zeta1_inverse(w));
    if (is_member(s, two ? FamilyId::adii_b : FamilyId::adi_b)) {
      expect(is_member(w, two ? FamilyId::rsii_b : FamilyId::rsi_b), describe(s), "type B image", describe(w));
      expect_equal(describe(s) + " B index", s.back() - 1, two ? stat_gae(w) : w.back());
    }
    if (is_member(s, two ? FamilyId::adii_d : FamilyId::adi_d)) {
      expect(is_member(w, two ? FamilyId::rsii_d : FamilyId::rsi_d), describe(s), "type D image", describe(w));
      if (two)
        expect_equal(describe(s) + " D index", s.front() + 1, w.front());
      else
        expect_equal(describe(s) + " D index", s.back() + 1, w.back());
    }
    image.insert(w);
  }
  expect_equal(at_n(n) + " bijective", static_cast<std::int64_t>(target_size), static_cast<std::int64_t>(image.size()));
  expect_equal(at_n(n) + " domain size", static_cast<std::int64_t>(target_size),
               static_cast<std::int64_t>(source.size()));
  // Both type refinements must be hit exactly.
  for (auto [from, to] : {std::pair{two ? FamilyId::adii_b : FamilyId::adi_b, two ? FamilyId::rsii_b : FamilyId::rsi_b},
                          std::pair{two ? FamilyId::adii_d : FamilyId::adi_d, two ? FamilyId::rsii_d : FamilyId::rsi_d}})
    expect_equal(at_n(n) + " #" + std::string(family_name(from)),
                 static_cast<std::int64_t>(enumerate_family(to, n).size()),
                 static_cast<std::int64_t>(enumerate_family(from, n + 1).size()));
}

// ---------------------------------------------------------------------------
// q-calculus and fixtures

void check_thm_6_1(int n) { expect_equal(at_n(n), qpoly_P(n), weighted_sum_trees(n)); }

void check_thm_6_2(int n) {
  expect_equal(at_n(n) + " F_n", qpoly_R(n), weighted_sum_forests(n, false));
  expect_equal(at_n(n) + " white forests", qpoly_Q(n), weighted_sum_forests(n, true));
}

template <class V>
std::vector<V> row_of(const DoubleTriangle<V>& tri, int r) {
  return tri.row(r);
}

void check_tables(int n) {
  auto rows = [](const auto& table) { return static_cast<int>(table.size()); };
  if (n <= rows(fixtures::euler_numbers())) {
    expect_equal(at_n(n) + " Euler number", fixtures::euler_numbers()[n - 1], entringer(n).row_sum(n));
    expect_equal(at_n(n) + " Springer number K(B_n)", fixtures::springer_b()[n - 1], half_row_sum(arnold(n), n, 1));
    expect_equal(at_n(n) + " Springer number K(D_n)", fixtures::springer_d()[n - 1], half_row_sum(arnold(n), n, -1));
  }
  if (n <= rows(fixtures::arnold_rows()))
    expect_equal(at_n(n) + " Arnold row", fixtures::arnold_rows()[n - 1], row_of(arnold(n), n));
  if (n <= rows(fixtures::arnold_poly_rows()))
    expect_equal(at_n(n) + " polynomial Arnold row", fixtures::arnold_poly_rows()[n - 1], row_of(arnold_poly(n), n));
  if (n <= rows(fixtures::gamma_poly_rows()))
    expect_equal(at_n(n) + " leftmost-empty arrays row", fixtures::gamma_poly_rows()[n - 1], row_of(gamma_arrays(n), n));
  if (n <= rows(fixtures::gamma_rows()))
    expect_equal(at_n(n) + " gamma-snake row", fixtures::gamma_rows()[n - 1], row_of(at_one(gamma_arrays(n)), n));
  if (n <= rows(fixtures::hoffman_P_list())) {
    expect_equal(at_n(n) + " P list", fixtures::hoffman_P_list()[n - 1], hoffman_P(n));
    expect_equal(at_n(n) + " Q list", fixtures::hoffman_Q_list()[n - 1], hoffman_Q(n));
    expect_equal(at_n(n) + " R list", fixtures::hoffman_R_list()[n - 1], hoffman_R(n));
  }
  if (n <= rows(fixtures::q_P_list())) {
    expect_equal(at_n(n) + " P(q,t) list", fixtures::q_P_list()[n - 1], qpoly_P(n));
    expect_equal(at_n(n) + " Q(q,t) list", fixtures::q_Q_list()[n - 1], qpoly_Q(n));
    expect_equal(at_n(n) + " R(q,t) list", fixtures::q_R_list()[n - 1], qpoly_R(n));
  }
  if (n == 1) {
    for (const auto* table : {&fixtures::type_one_subwords(), &fixtures::type_two_subwords()})
      for (int k = 1; k <= static_cast<int>(table->sigma.window().size()); ++k)
        expect_equal(describe(table->sigma) + " subword " + std::to_string(k),
                     table->subwords[static_cast<std::size_t>(k - 1)], subword(table->sigma, k).entries);
  }
}

struct CheckDef {
  std::string id;
  int depth;
  std::function<void(int)> body;
};

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs{
      {"eq-1", 12, check_eq1},
      {"eq-2", 12, check_eq2},
      {"eq-5", 12, check_eq5},
      {"thm-1-1", 6, check_thm_1_1},
      {"thm-1-2", 12, check_thm_1_2},
      {"thm-2-2", 7, check_thm_2_2},
      {"thm-2-3", 7, check_thm_2_3},
      {"thm-2-7", 6, check_thm_2_7},
      {"thm-2-10", 6, check_thm_2_10},
      {"thm-2-13", 6, check_thm_2_13},
      {"conj-2-9", 6, check_conj_2_9},
      {"prop-3-1", 7, check_prop_3_1},
      {"cor-3-2", 7, check_cor_3_2},
      {"cor-3-3", 7, check_cor_3_3},
      {"cor-3-4", 7, check_cor_3_4},
      {"eq-13", 7, check_eq_13},
      {"prop-4-2", 6, [](int n) { check_forest_bijection(n, false); }},
      {"prop-4-5", 6, [](int n) { check_type_d_bijection(n, false); }},
      {"thm-4-5", 6, [](int n) { check_zeta(n, false); }},
      {"prop-5-1", 6, [](int n) { check_forest_bijection(n, true); }},
      {"prop-5-3", 6, [](int n) { check_type_d_bijection(n, true); }},
      {"thm-5-4", 6, [](int n) { check_zeta(n, true); }},
      {"thm-6-1", 7, check_thm_6_1},
      {"thm-6-2", 7, check_thm_6_2},
      {"tables-fixtures", 8, check_tables},
  };
  return defs;
}

const CheckDef& lookup(const std::string& id) {
  for (const auto& d : registry())
    if (d.id == id) return d;
  throw UnknownName("unknown check '" + id + "'");
}

}  // namespace

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& d : registry()) v.push_back(d.id);
    return v;
  }();
  return ids;
}

int default_depth(const std::string& check_id) { return lookup(check_id).depth; }

CheckReport run_check(const std::string& check_id, int n_max) {
  const CheckDef& def = lookup(check_id);
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  CheckReport report;
  report.check_id = def.id;
  const auto start = std::chrono::steady_clock::now();
  try {
    for (int n = 1; n <= n_max; ++n) {
      report.n_range.push_back(n);
      def.body(n);
    }
    report.passed = true;
  } catch (const CheckFailed& f) {
    report.counterexample = f.cx;
  } catch (const DomainError& e) {
    // A map rejecting an input it should accept is a failure, not a crash.
    report.counterexample = Counterexample{"n=" + std::to_string(report.n_range.back()), "no domain error", e.what()};
  }
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<CheckReport> run_all(std::optional<int> n_max) {
  std::vector<CheckReport> out;
  for (const auto& d : registry()) out.push_back(run_check(d.id, n_max.value_or(d.depth)));
  return out;
}

}  // namespace snake_atlas
