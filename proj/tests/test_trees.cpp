#include <set>

#include "doctest.h"
#include "snake_atlas/errors.hpp"
#include "snake_atlas/tree.hpp"
#include "snake_atlas/tree_maps.hpp"
#include "snake_atlas/triangles.hpp"

using namespace snake_atlas;

namespace {

IncBinTree T(Word w) { return IncBinTree::from_word(w); }

std::size_t count(int n, bool starred, int k) { return enumerate_trees(n, TreeClass{starred, k}).size(); }

LaurentPoly emp_sum(const std::vector<IncBinTree>& trees) {
  LaurentPoly p;
  for (const auto& t : trees) p += LaurentPoly::monomial(1, stat_emp(t));
  return p;
}

}  // namespace

TEST_CASE("words round-trip and invalid words are rejected") {
  const IncBinTree t = T({0, 1, 0, 3, 5, 2, 4});
  CHECK(t.size() == 5);
  CHECK(t.inorder_word() == Word{0, 1, 0, 3, 5, 2, 4});
  CHECK(t.to_string() == "o,1,o,3,5,2,4");
  CHECK(IncBinTree().size() == 0);
  CHECK_THROWS_AS(T({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(T({0, 2, 0}), std::invalid_argument);   // labels must be 1..n
  CHECK_THROWS_AS(T({0, 1}), std::invalid_argument);      // node with one child
  CHECK_THROWS_AS(T({0, 0, 1}), std::invalid_argument);
}

TEST_CASE("small sizes") {
  const auto one = enumerate_trees(1);
  REQUIRE(one.size() == 2);
  std::set<std::string> shapes;
  for (const auto& t : one) shapes.insert(t.to_string());
  CHECK(shapes == std::set<std::string>{"1", "o,1,o"});
  CHECK(classify(T({1})) == TreeClass{true, 1});
  CHECK(classify(T({0, 1, 0})) == TreeClass{false, 1});
  CHECK(enumerate_trees(3).size() == 16);
  CHECK(count(3, false, 1) == 4);
  CHECK(count(3, false, 2) == 4);
  CHECK(count(3, false, 3) == 3);
  CHECK(count(3, true, 3) == 3);
  CHECK(count(3, true, 2) == 2);
  CHECK(count(3, true, 1) == 0);
  CHECK_THROWS_AS(enumerate_trees(10), CeilingExceeded);
}

TEST_CASE("statistics") {
  const IncBinTree leaf = T({1});
  CHECK(stat_emp(leaf) == 0);
  CHECK(stat_rmlab(leaf) == 1);
  CHECK_FALSE(in_TL(leaf));
  const IncBinTree t = T({0, 1, 0, 3, 5, 2, 4});
  CHECK(stat_emp(t) == 2);
  CHECK(labelled_leaves(t) == 2);
  CHECK(classify(t) == TreeClass{true, 4});
  CHECK(in_TL(t));
  CHECK(emp_sum(enumerate_trees(3)) == hoffman_P(3));
  for (int n = 1; n <= 8; ++n)
    for (const Word& w : enumerate_tree_words(n)) {
      const IncBinTree tree = T(w);
      REQUIRE(stat_emp(tree) == n + 1 - 2 * labelled_leaves(tree));
    }
}

TEST_CASE("enumeration order is stable") {
  const auto a = enumerate_tree_words(5);
  const auto b = enumerate_tree_words(5);
  CHECK(a == b);
  CHECK(std::set<Word>(a.begin(), a.end()).size() == a.size());
}

TEST_CASE("flip is an involution and swaps the two leftmost/rightmost conditions") {
  for (const auto& t : enumerate_trees(6)) {
    REQUIRE(flip(flip(t)) == t);
    REQUIRE(in_TL(t) == !classify(flip(t)).starred);
    REQUIRE(stat_emp(flip(t)) == stat_emp(t));
  }
}

TEST_CASE("psi_star") {
  const PsiResult r = psi_star(T({0, 1, 2}));
  CHECK(r.tree == T({0, 1, 0}));
  CHECK(r.case_tag == "b");
  CHECK(stat_emp(r.tree) == 2);
  CHECK_THROWS_AS(psi_star(T({1})), DomainError);
  CHECK(count(4, true, 3) == count(4, true, 2) + count(3, false, 2));
}

TEST_CASE("psi_circ on size two") {
  std::set<std::string> image;
  for (const auto& t : enumerate_trees(2, TreeClass{false, 1})) {
    const PsiResult r = psi_circ(t);
    CHECK(psi_circ_inverse(r.tree) == t);
    image.insert(r.tree.to_string());
  }
  std::set<std::string> expected;
  for (const auto& t : enumerate_trees(2, TreeClass{false, 2})) expected.insert(t.to_string());
  expected.insert(T({1}).to_string());
  CHECK(image == expected);
  CHECK_THROWS_AS(psi_circ(T({0, 1, 0})), DomainError);  // k = n
}

TEST_CASE("psi case tags carry the emp change") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& t : enumerate_trees(n)) {
      const TreeClass c = classify(t);
      if (c.starred && c.rmlab >= 2) {
        const PsiResult r = psi_star(t);
        REQUIRE(stat_emp(r.tree) - stat_emp(t) == (r.case_tag == "b" ? 1 : 0));
        REQUIRE(classify(r.tree) == (r.case_tag == "b" ? TreeClass{false, c.rmlab - 1}
                                                        : TreeClass{true, c.rmlab - 1}));
      }
      if (!c.starred && c.rmlab < n) {
        const PsiResult r = psi_circ(t);
        REQUIRE(stat_emp(r.tree) - stat_emp(t) == (r.case_tag == "b-leaf" ? -1 : 0));
        REQUIRE(classify(r.tree) == (r.case_tag == "b-leaf" ? TreeClass{true, c.rmlab}
                                                             : TreeClass{false, c.rmlab + 1}));
      }
    }
}

TEST_CASE("psi_cap") {
  CHECK(psi_cap(T({1})) == T({0, 1, 0}));
  CHECK(psi_cap_inverse(T({0, 1, 0})) == T({1}));
  CHECK_THROWS_AS(psi_cap(T({0, 1, 0})), DomainError);
  for (int n = 1; n <= 8; ++n) {
    LaurentPoly capped;
    for (const auto& t : enumerate_trees(n, TreeClass{true, n})) {
      const IncBinTree c = psi_cap(t);
      REQUIRE(classify(c) == TreeClass{false, n});
      capped += LaurentPoly::monomial(1, stat_emp(c));
    }
    CHECK(capped == emp_sum(enumerate_trees(n, TreeClass{false, n})));
  }
}

TEST_CASE("gamma on the worked examples") {
  CHECK(gamma(T({5, 3, 0, 1, 0, 4, 0, 2, 0})) == SignedPermutation({4, -2, 5, -3, -1}));
  CHECK(gamma(T({0, 1, 5, 4, 0, 2, 3})) == SignedPermutation({-3, -4, 2, 1, 5}));
  CHECK(gamma(T({1})) == SignedPermutation({-1}));
  CHECK(gamma(T({0, 1, 0})) == SignedPermutation({1}));
  CHECK(gamma_inverse(SignedPermutation({4, -2, 5, -3, -1})) == T({5, 3, 0, 1, 0, 4, 0, 2, 0}));
  CHECK_THROWS_AS(gamma_inverse(SignedPermutation({1, 2})), DomainError);
}

TEST_CASE("gamma is a bijection onto the snakes") {
  const std::int64_t euler[] = {1, 1, 1, 2, 5, 16, 61, 272};
  for (int n = 1; n <= 7; ++n) {
    std::set<SignedPermutation> image;
    for (const auto& t : enumerate_trees(n)) {
      const SignedPermutation s = gamma(t);
      REQUIRE(is_beta_snake(s));
      REQUIRE(gamma_inverse(s) == t);
      image.insert(s);
    }
    CHECK(static_cast<std::int64_t>(image.size()) == (std::int64_t{1} << n) * euler[n]);
  }
}
