#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "snake_atlas/checked.hpp"
#include "snake_atlas/laurent_poly.hpp"

namespace snake_atlas {

/// Values indexed by (row r, signed column k) with 1 <= |k| <= r <= n.
template <class V>
class DoubleTriangle {
 public:
  explicit DoubleTriangle(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("triangle size must be at least 1");
    rows_.reserve(static_cast<std::size_t>(n));
    for (int r = 1; r <= n; ++r) rows_.emplace_back(static_cast<std::size_t>(2 * r));
  }

  int size() const noexcept { return n_; }

  V& at(int r, int k) { return rows_[row_index(r)][column_index(r, k)]; }
  const V& at(int r, int k) const { return rows_[row_index(r)][column_index(r, k)]; }

  /// Row r in column order k = -r, ..., -1, 1, ..., r.
  const std::vector<V>& row(int r) const { return rows_[row_index(r)]; }

  friend bool operator==(const DoubleTriangle&, const DoubleTriangle&) = default;

 private:
  std::size_t row_index(int r) const {
    if (r < 1 || r > n_) throw std::out_of_range("row " + std::to_string(r) + " outside triangle");
    return static_cast<std::size_t>(r - 1);
  }
  static std::size_t column_index(int r, int k) {
    if (k == 0 || k < -r || k > r)
      throw std::out_of_range("column " + std::to_string(k) + " outside row " + std::to_string(r));
    return static_cast<std::size_t>(k < 0 ? k + r : k + r - 1);
  }

  int n_;
  std::vector<std::vector<V>> rows_;
};

/// Seidel-Entringer triangle E_{r,k}, 1 <= k <= r <= n.
template <class Int = std::int64_t>
class EntringerTriangle {
 public:
  explicit EntringerTriangle(int n) : n_(n) {
    for (int r = 1; r <= n; ++r) rows_.emplace_back(static_cast<std::size_t>(r), Int(0));
  }

  int size() const noexcept { return n_; }
  Int& at(int r, int k) { return rows_.at(static_cast<std::size_t>(r - 1)).at(static_cast<std::size_t>(k - 1)); }
  const Int& at(int r, int k) const {
    return rows_.at(static_cast<std::size_t>(r - 1)).at(static_cast<std::size_t>(k - 1));
  }
  const std::vector<Int>& row(int r) const { return rows_.at(static_cast<std::size_t>(r - 1)); }

  Int row_sum(int r) const {
    Int s(0);
    for (const auto& x : row(r)) s = checked_add(s, x);
    return s;
  }

 private:
  int n_;
  std::vector<std::vector<Int>> rows_;
};

/// E_{1,1} = 1, E_{r,1} = 0 (r >= 2), E_{r,k} = E_{r,k-1} + E_{r-1,r-k+1}.
template <class Int = std::int64_t>
EntringerTriangle<Int> entringer(int n) {
  if (n < 1) throw std::invalid_argument("entringer: n must be at least 1");
  EntringerTriangle<Int> e(n);
  e.at(1, 1) = Int(1);
  for (int r = 2; r <= n; ++r) {
    e.at(r, 1) = Int(0);
    for (int k = 2; k <= r; ++k) e.at(r, k) = checked_add(e.at(r, k - 1), e.at(r - 1, r - k + 1));
  }
  return e;
}

namespace detail {

// Overflow-checked for built-in integers; polynomials check internally.
template <class V>
V add(const V& a, const V& b) {
  if constexpr (std::is_arithmetic_v<V>)
    return checked_add(a, b);
  else
    return a + b;
}

}  // namespace detail

/// Generic boustrophedon fill shared by the integer and polynomial arrays:
///
///   x_{r,-r} = 0                                   (r >= 2)
///   x_{r,-k} = x_{r,-k-1} + down(x_{r-1,k})        (r > k >= 1)
///   x_{r,1}  = bridge(x_{r,-1})                    (r >= 2)
///   x_{r,k}  = x_{r,k-1} + up(x_{r-1,-k+1})        (r >= k > 1)
template <class V, class Down, class Bridge, class Up>
DoubleTriangle<V> boustrophedon(int n, V top_positive, V top_negative, Down down, Bridge bridge,
                                Up up) {
  if (n < 1) throw std::invalid_argument("boustrophedon: n must be at least 1");
  DoubleTriangle<V> x(n);
  x.at(1, 1) = std::move(top_positive);
  x.at(1, -1) = std::move(top_negative);
  for (int r = 2; r <= n; ++r) {
    x.at(r, -r) = V{};
    for (int k = r - 1; k >= 1; --k) x.at(r, -k) = detail::add(x.at(r, -k - 1), down(x.at(r - 1, k)));
    x.at(r, 1) = bridge(x.at(r, -1));
    for (int k = 2; k <= r; ++k) x.at(r, k) = detail::add(x.at(r, k - 1), up(x.at(r - 1, -k + 1)));
  }
  return x;
}

namespace detail {

template <class Int>
struct Identity {
  Int operator()(const Int& v) const { return v; }
};

template <class Int>
struct ShiftBy {
  int m;
  BasicLaurentPoly<Int> operator()(const BasicLaurentPoly<Int>& p) const { return p.shifted(m); }
};

template <class Int>
void require_nonnegative_exponents(const DoubleTriangle<BasicLaurentPoly<Int>>& tri) {
  for (int r = 1; r <= tri.size(); ++r)
    for (const auto& p : tri.row(r))
      if (!p.is_zero() && p.min_exp() < 0)
        throw std::logic_error("polynomial triangle entry with a negative exponent");
}

}  // namespace detail

/// Arnold's integer double triangle v_{n,k}.
template <class Int = std::int64_t>
DoubleTriangle<Int> arnold(int n) {
  detail::Identity<Int> id;
  return boustrophedon<Int>(n, Int(1), Int(1), id, id, id);
}

/// Polynomial refinement V_{n,k}(t): V_{1,1} = t^2, V_{1,-1} = 1, with the
/// descent step weighted by t^-1, the bridge by t^2 and the ascent step by t.
template <class Int = std::int64_t>
DoubleTriangle<BasicLaurentPoly<Int>> arnold_poly(int n) {
  using P = BasicLaurentPoly<Int>;
  auto tri = boustrophedon<P>(n, P::monomial(Int(1), 2), P::constant(Int(1)), detail::ShiftBy<Int>{-1},
                              detail::ShiftBy<Int>{2}, detail::ShiftBy<Int>{1});
  detail::require_nonnegative_exponents(tri);
  return tri;
}

/// Arrays of the trees whose leftmost leaf is empty: the positive column k
/// holds the generating polynomial of such trees with empty rightmost leaf and
/// rmlab n-k+1, the negative column -k those with labelled rightmost leaf.
/// Same recurrence as arnold_poly, seeded with t^2 and 0.
template <class Int = std::int64_t>
DoubleTriangle<BasicLaurentPoly<Int>> gamma_arrays(int n) {
  using P = BasicLaurentPoly<Int>;
  auto tri = boustrophedon<P>(n, P::monomial(Int(1), 2), P{}, detail::ShiftBy<Int>{-1},
                              detail::ShiftBy<Int>{2}, detail::ShiftBy<Int>{1});
  detail::require_nonnegative_exponents(tri);
  return tri;
}

/// Evaluates every entry of a polynomial triangle at t = 1.
template <class Int>
DoubleTriangle<Int> at_one(const DoubleTriangle<BasicLaurentPoly<Int>>& tri) {
  DoubleTriangle<Int> out(tri.size());
  for (int r = 1; r <= tri.size(); ++r)
    for (int k = -r; k <= r; ++k)
      if (k != 0) out.at(r, k) = tri.at(r, k).evaluate(Int(1));
  return out;
}

/// Sum of the positive (sign = +1) or negative (sign = -1) half of row r.
template <class V>
V half_row_sum(const DoubleTriangle<V>& tri, int r, int sign) {
  V s{};
  for (int k = 1; k <= r; ++k) s = detail::add(s, tri.at(r, sign * k));
  return s;
}

// ---------------------------------------------------------------------------
// Derivative polynomials of tan and sec.

namespace detail {

// f_{m+1} = (1 + t^2) f_m' + a t f_m, iterated n times from f_0.
template <class Int>
BasicLaurentPoly<Int> derivative_sequence(int n, BasicLaurentPoly<Int> f, int a) {
  if (n < 0) throw std::invalid_argument("derivative polynomials need n >= 0");
  using P = BasicLaurentPoly<Int>;
  const P one_plus_t2 = P(0, {Int(1), Int(0), Int(1)});
  const P at = P::monomial(Int(a), 1);
  for (int m = 0; m < n; ++m) f = one_plus_t2 * f.derivative() + at * f;
  return f;
}

}  // namespace detail

/// d^n/dx^n tan x = P_n(tan x).
template <class Int = std::int64_t>
BasicLaurentPoly<Int> hoffman_P(int n) {
  return detail::derivative_sequence<Int>(n, BasicLaurentPoly<Int>::monomial(Int(1), 1), 0);
}

/// d^n/dx^n sec x = Q_n(tan x) sec x.
template <class Int = std::int64_t>
BasicLaurentPoly<Int> hoffman_Q(int n) {
  return detail::derivative_sequence<Int>(n, BasicLaurentPoly<Int>::constant(Int(1)), 1);
}

/// d^n/dx^n sec^2 x = R_n(tan x) sec^2 x.
template <class Int = std::int64_t>
BasicLaurentPoly<Int> hoffman_R(int n) {
  return detail::derivative_sequence<Int>(n, BasicLaurentPoly<Int>::constant(Int(1)), 2);
}

/// Q_n = t^-1 (V_{n,1} + ... + V_{n,n}) and P_n - t Q_n = V_{n,-1} + ... + V_{n,-n}.
template <class Int = std::int64_t>
bool arnold_hoffman_identity_holds(int n) {
  const auto tri = arnold_poly<Int>(n);
  const auto q = hoffman_Q<Int>(n);
  const auto p = hoffman_P<Int>(n);
  const bool q_side = half_row_sum(tri, n, +1).shifted(-1) == q;
  const bool p_side = p - q.shifted(1) == half_row_sum(tri, n, -1);
  return q_side && p_side;
}

}  // namespace snake_atlas
