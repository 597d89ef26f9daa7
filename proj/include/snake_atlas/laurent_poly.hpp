#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "snake_atlas/checked.hpp"

namespace snake_atlas {

/// Exact polynomial in t with integer coefficients and possibly negative
/// exponents: sum_i coeffs[i] * t^(min_exp + i).
///
/// Canonical form: the zero polynomial has no coefficients and min_exp 0;
/// otherwise the first and last coefficients are nonzero.
template <class Int>
class BasicLaurentPoly {
 public:
  using scalar_type = Int;

  BasicLaurentPoly() = default;

  BasicLaurentPoly(int min_exp, std::vector<Int> coeffs)
      : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
    normalize();
  }

  /// c * t^exp
  static BasicLaurentPoly monomial(Int c, int exp) { return BasicLaurentPoly(exp, {std::move(c)}); }
  static BasicLaurentPoly constant(Int c) { return monomial(std::move(c), 0); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int min_exp() const noexcept { return min_exp_; }
  int max_exp() const noexcept { return min_exp_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Int>& coeffs() const noexcept { return coeffs_; }

  Int coeff(int exp) const {
    if (is_zero() || exp < min_exp_ || exp > max_exp()) return Int(0);
    return coeffs_[static_cast<std::size_t>(exp - min_exp_)];
  }

  BasicLaurentPoly& operator+=(const BasicLaurentPoly& o) { return *this = *this + o; }
  BasicLaurentPoly& operator-=(const BasicLaurentPoly& o) { return *this = *this - o; }
  BasicLaurentPoly& operator*=(const BasicLaurentPoly& o) { return *this = *this * o; }

  friend BasicLaurentPoly operator+(const BasicLaurentPoly& a, const BasicLaurentPoly& b) {
    return combine(a, b, [](const Int& x, const Int& y) { return checked_add(x, y); });
  }

  friend BasicLaurentPoly operator-(const BasicLaurentPoly& a, const BasicLaurentPoly& b) {
    return combine(a, b, [](const Int& x, const Int& y) { return checked_sub(x, y); });
  }

  friend BasicLaurentPoly operator-(const BasicLaurentPoly& a) { return BasicLaurentPoly() - a; }

  friend BasicLaurentPoly operator*(const BasicLaurentPoly& a, const BasicLaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> out(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] = checked_add(out[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    return BasicLaurentPoly(a.min_exp_ + b.min_exp_, std::move(out));
  }

  friend BasicLaurentPoly operator*(const Int& c, const BasicLaurentPoly& p) {
    std::vector<Int> out(p.coeffs_);
    for (auto& x : out) x = checked_mul(c, x);
    return BasicLaurentPoly(p.min_exp_, std::move(out));
  }

  /// Multiplication by t^m.
  BasicLaurentPoly shifted(int m) const {
    BasicLaurentPoly r = *this;
    if (!r.is_zero()) r.min_exp_ += m;
    return r;
  }

  /// Formal derivative d/dt.
  BasicLaurentPoly derivative() const {
    if (is_zero()) return {};
    std::vector<Int> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      out[i] = checked_mul(Int(min_exp_ + static_cast<int>(i)), coeffs_[i]);
    return BasicLaurentPoly(min_exp_ - 1, std::move(out));
  }

  /// Value at an integer point. Negative exponents are only allowed at t = +-1.
  Int evaluate(const Int& t) const {
    if (is_zero()) return Int(0);
    if (min_exp_ < 0 && t != Int(1) && t != Int(-1))
      throw std::domain_error("Laurent polynomial with negative exponents evaluated off t = +-1");
    // t^{-m} = t^m when t = +-1.
    Int acc(0);
    for (auto i = coeffs_.size(); i-- > 0;) acc = checked_add(checked_mul(acc, t), coeffs_[i]);
    const int shift = min_exp_ < 0 ? -min_exp_ : min_exp_;
    for (int i = 0; i < shift; ++i) acc = checked_mul(acc, t);
    return acc;
  }

  /// True when every nonzero term has an even (parity 0) or odd (parity 1) exponent.
  bool has_parity(int parity) const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const int e = min_exp_ + static_cast<int>(i);
      if (coeffs_[i] != Int(0) && ((e % 2) + 2) % 2 != parity) return false;
    }
    return true;
  }

  friend bool operator==(const BasicLaurentPoly&, const BasicLaurentPoly&) = default;

  /// Human-readable form such as "t+7t^3+6t^5".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const Int& c = coeffs_[i];
      if (c == Int(0)) continue;
      const int e = min_exp_ + static_cast<int>(i);
      const bool negative = c < Int(0);
      const Int mag = negative ? Int(-c) : c;
      if (negative) os << '-';
      else if (!first) os << '+';
      if (e == 0 || mag != Int(1)) os << mag;
      if (e != 0) os << 't';
      if (e != 0 && e != 1) os << '^' << e;
      first = false;
    }
    return os.str();
  }

 private:
  template <class Op>
  static BasicLaurentPoly combine(const BasicLaurentPoly& a, const BasicLaurentPoly& b, Op op) {
    if (a.is_zero() && b.is_zero()) return {};
    const int lo = a.is_zero() ? b.min_exp_ : b.is_zero() ? a.min_exp_ : std::min(a.min_exp_, b.min_exp_);
    const int hi = a.is_zero() ? b.max_exp() : b.is_zero() ? a.max_exp() : std::max(a.max_exp(), b.max_exp());
    std::vector<Int> out(static_cast<std::size_t>(hi - lo + 1), Int(0));
    for (int e = lo; e <= hi; ++e) out[static_cast<std::size_t>(e - lo)] = op(a.coeff(e), b.coeff(e));
    return BasicLaurentPoly(lo, std::move(out));
  }

  void normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == Int(0)) ++lead;
    if (lead == coeffs_.size()) {
      coeffs_.clear();
      min_exp_ = 0;
      return;
    }
    std::size_t end = coeffs_.size();
    while (coeffs_[end - 1] == Int(0)) --end;
    coeffs_ = std::vector<Int>(coeffs_.begin() + static_cast<std::ptrdiff_t>(lead),
                               coeffs_.begin() + static_cast<std::ptrdiff_t>(end));
    min_exp_ += static_cast<int>(lead);
  }

  int min_exp_ = 0;
  std::vector<Int> coeffs_;
};

using LaurentPoly = BasicLaurentPoly<std::int64_t>;

/// Builds sum c_i t^(exps_i) from {exp, coeff} pairs; convenient for fixtures.
template <class Int = std::int64_t>
BasicLaurentPoly<Int> poly_from_terms(std::initializer_list<std::pair<int, Int>> terms) {
  BasicLaurentPoly<Int> p;
  for (const auto& [e, c] : terms) p += BasicLaurentPoly<Int>::monomial(c, e);
  return p;
}

}  // namespace snake_atlas
