#pragma once

#include <string>
#include <vector>

#include "snake_atlas/forest.hpp"
#include "snake_atlas/laurent_poly.hpp"
#include "snake_atlas/tree.hpp"

namespace snake_atlas {

/// Integer polynomial in q. Shares the Laurent representation; every value
/// built by this module has min_exp >= 0.
using QPoly = LaurentPoly;

/// [k]_q = 1 + q + ... + q^(k-1); [0]_q = 0.
QPoly q_integer(int k);

/// Polynomial in t whose coefficients are polynomials in q, with
/// nonnegative t-exponents. Canonical: no trailing zero coefficients.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<QPoly> t_coeffs);

  /// c * t^exp
  static BiPoly monomial(QPoly c, int exp);

  const std::vector<QPoly>& t_coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Coefficient of t^exp (zero outside the stored range).
  QPoly coeff(int exp) const;

  BiPoly& operator+=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  /// Substitutes q = 1.
  LaurentPoly at_q_one() const;

  /// E.g. "1+q+(1+2q+2q^2+q^3)t^2".
  std::string to_string() const;

 private:
  void normalize();
  std::vector<QPoly> coeffs_;
};

/// q-derivative: t^n -> [n]_q t^(n-1).
BiPoly op_D(const BiPoly& f);
/// Multiplication by t.
BiPoly op_U(const BiPoly& f);

/// A sum of words in D and U, applied right to left: "UUD" means U(U(D f)).
class QOperator {
 public:
  explicit QOperator(std::vector<std::string> words);

  BiPoly apply(const BiPoly& f) const;
  /// n-fold application.
  BiPoly power(int n, BiPoly f) const;
  const std::vector<std::string>& words() const noexcept { return words_; }

 private:
  std::vector<std::string> words_;
};

/// D + UUD, D + UDU and D + DUU.
const QOperator& p_operator();
const QOperator& q_operator();
const QOperator& r_operator();

/// (D+UUD)^n t, (D+UDU)^n 1, (D+DUU)^n 1.
BiPoly qpoly_P(int n);
BiPoly qpoly_Q(int n);
BiPoly qpoly_R(int n);

struct WeightedTree {
  IncBinTree tree;
  std::vector<int> steps;  // c_1..c_n
  int weight = 0;
};

struct WeightedForest {
  IncForest forest;
  std::vector<int> steps;  // d_1..d_n
  int weight = 0;
};

/// Peels labels n..1. c_j counts the empty leaves before j in the inorder
/// word of the tree in which j is the largest label.
WeightedTree weight_tree(const IncBinTree& tree);

/// As for trees, reading components in root order; a black root adds one.
WeightedForest weight_forest(const IncForest& forest);

/// Sum of q^w t^emp over T_n (n = 0 gives t, the lone empty leaf).
BiPoly weighted_sum_trees(int n);

/// Sum of q^w t^emp over F_n, or over the all-white forests.
BiPoly weighted_sum_forests(int n, bool white_only);

}  // namespace snake_atlas
