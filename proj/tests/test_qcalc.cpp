#include "doctest.h"
#include "snake_atlas/qcalc.hpp"
#include "snake_atlas/triangles.hpp"

using namespace snake_atlas;

namespace {

QPoly q(std::vector<std::int64_t> c) { return QPoly(0, std::move(c)); }
BiPoly bi(std::vector<QPoly> t) { return BiPoly(std::move(t)); }

}  // namespace

TEST_CASE("q-integers and the primitive operators") {
  CHECK(q_integer(0).is_zero());
  CHECK(q_integer(3) == q({1, 1, 1}));
  const BiPoly t2 = BiPoly::monomial(q({1}), 2);
  CHECK(op_D(t2) == BiPoly::monomial(q({1, 1}), 1));
  CHECK(op_D(BiPoly::monomial(q({1}), 0)).is_zero());
  CHECK(op_U(t2) == BiPoly::monomial(q({1}), 3));
}

TEST_CASE("DU - qUD is the identity") {
  const BiPoly qmono = BiPoly::monomial(q({0, 1}), 0);
  auto commutator = [&](const BiPoly& f) {
    const BiPoly ud = op_U(op_D(f));
    BiPoly q_ud;
    for (std::size_t e = 0; e < ud.t_coeffs().size(); ++e)
      q_ud += BiPoly::monomial(q({0, 1}) * ud.t_coeffs()[e], static_cast<int>(e));
    return op_D(op_U(f)) - q_ud;
  };
  for (const BiPoly& f : {BiPoly::monomial(q({1}), 0), BiPoly::monomial(q({1}), 1), BiPoly::monomial(q({1}), 2),
                          BiPoly::monomial(q({1, 1}), 3), qmono})
    CHECK(commutator(f) == f);
  // Every monomial q^a t^b up to degree 10 in both variables.
  for (int a = 0; a <= 10; ++a)
    for (int b = 0; b <= 10; ++b) {
      const BiPoly f = BiPoly::monomial(QPoly::monomial(1, a), b);
      CHECK(commutator(f) == f);
    }
}

TEST_CASE("q-analogues match the listed polynomials") {
  CHECK(qpoly_P(0) == BiPoly::monomial(q({1}), 1));
  CHECK(qpoly_Q(0) == BiPoly::monomial(q({1}), 0));
  CHECK(qpoly_R(0) == BiPoly::monomial(q({1}), 0));

  CHECK(qpoly_P(1) == bi({q({1}), {}, q({1})}));
  CHECK(qpoly_P(2) == bi({{}, q({1, 1}), {}, q({1, 1})}));
  CHECK(qpoly_P(3) == bi({q({1, 1}), {}, q({2, 3, 2, 1}), {}, q({1, 2, 2, 1})}));

  CHECK(qpoly_Q(1) == bi({{}, q({1})}));
  CHECK(qpoly_Q(2) == bi({q({1}), {}, q({1, 1})}));
  CHECK(qpoly_Q(3) == bi({{}, q({2, 2, 1}), {}, q({1, 2, 2, 1})}));

  CHECK(qpoly_R(1) == bi({{}, q({1, 1})}));
  CHECK(qpoly_R(2) == bi({q({1, 1}), {}, q({1, 2, 2, 1})}));
  CHECK(qpoly_R(3) == bi({{}, q({2, 5, 5, 3, 1}), {}, q({1, 3, 5, 6, 5, 3, 1})}));
}

TEST_CASE("q = 1 recovers the derivative polynomials") {
  for (int n = 0; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(qpoly_P(n).at_q_one() == hoffman_P(n));
    CHECK(qpoly_Q(n).at_q_one() == hoffman_Q(n));
    CHECK(qpoly_R(n).at_q_one() == hoffman_R(n));
  }
}

TEST_CASE("printing") {
  CHECK(qpoly_R(2).to_string() == "1+q+(1+2q+2q^2+q^3)t^2");
  CHECK(qpoly_Q(1).to_string() == "t");
  CHECK(BiPoly().to_string() == "0");
}

TEST_CASE("weight of the five-node example tree") {
  // Grown as: 1 internal, 2 internal on the second empty leaf, 3 internal on
  // the second, 4 a leaf on the fourth, 5 a leaf on the third.
  const auto tau = IncBinTree::from_word(Word{0, 1, 0, 3, 5, 2, 4});
  const WeightedTree w = weight_tree(tau);
  CHECK(w.steps == std::vector<int>{0, 1, 1, 3, 2});
  CHECK(w.weight == 7);
}

TEST_CASE("weight of the six-node example forest") {
  const auto pi = IncForest::from_words(
      {{RootColor::black, {1, 0, 4, 0, 3, 0, 5, 0}}, {RootColor::white, {2, 6}}});
  const WeightedForest w = weight_forest(pi);
  CHECK(w.steps == std::vector<int>{1, 1, 0, 0, 2, 4});
  CHECK(w.weight == 8);
}

TEST_CASE("small weights") {
  const WeightedTree leaf = weight_tree(IncBinTree::from_word(Word{1}));
  CHECK(leaf.weight == 0);
  CHECK(weight_forest(IncForest::from_words({{RootColor::black, {1, 0}}})).weight == 1);
  CHECK(weight_forest(IncForest::from_words({{RootColor::white, {1, 0}}})).weight == 0);
}

TEST_CASE("weighted sums equal the operator polynomials") {
  CHECK(weighted_sum_trees(0) == qpoly_P(0));
  CHECK(weighted_sum_forests(1, false) == bi({{}, q({1, 1})}));
  CHECK(weighted_sum_forests(2, true) == bi({q({1}), {}, q({1, 1})}));
  for (int n = 1; n <= 7; ++n) {
    CAPTURE(n);
    CHECK(weighted_sum_trees(n) == qpoly_P(n));
    CHECK(weighted_sum_forests(n, false) == qpoly_R(n));
    CHECK(weighted_sum_forests(n, true) == qpoly_Q(n));
  }
}

TEST_CASE("operator words are validated") {
  CHECK_THROWS_AS(QOperator({"DX"}), std::invalid_argument);
  CHECK(QOperator({"D", "UDU"}).apply(BiPoly::monomial(q({1}), 0)) == qpoly_Q(1));
}
