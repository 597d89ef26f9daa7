#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace snake_atlas {

/// A word of signed letters, e.g. the window of a signed permutation.
using Word = std::vector<int>;

/// Element of the hyperoctahedral group B_n, stored as its window
/// (sigma_1, ..., sigma_n). The absolute values form a permutation of [n].
class SignedPermutation {
 public:
  /// Throws std::invalid_argument unless |w_1|, ..., |w_n| is a permutation
  /// of {1..n} with n >= 1.
  explicit SignedPermutation(Word window);

  int size() const noexcept { return static_cast<int>(window_.size()); }

  /// 1-based access, matching sigma_i.
  int at(int i) const { return window_.at(static_cast<std::size_t>(i - 1)); }
  int front() const { return window_.front(); }
  int back() const { return window_.back(); }

  const Word& window() const noexcept { return window_; }
  std::span<const int> letters() const noexcept { return window_; }

  /// |sigma| as an ordinary permutation.
  Word absolute() const;

  std::string to_string() const;

  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  Word window_;
};

/// sigma_[k]: the letters of absolute value at most k, in their original order.
struct SubWord {
  Word entries;
  int parent_n = 0;

  friend bool operator==(const SubWord&, const SubWord&) = default;
};

/// Throws std::out_of_range unless 1 <= k <= n.
SubWord subword(const SignedPermutation& sigma, int k);

/// Restriction of an arbitrary word to letters of absolute value <= k.
Word restrict_word(std::span<const int> word, int k);

// ---------------------------------------------------------------------------
// Local shape of a letter inside a word.
//
// Type-I shapes compare absolute values with sentinels 0 and n+1; type-II
// shapes compare signed values with sentinels -(n+1) and n+1. They are kept
// as separate functions so the two conventions never mix.

enum class LetterShape { peak, valley, double_ascent, double_descent };

LetterShape shape_type_one(std::span<const int> word, std::size_t i, int n);
LetterShape shape_type_two(std::span<const int> word, std::size_t i, int n);

/// True when some three consecutive letters strictly decrease.
bool has_double_descent(std::span<const int> word);

// ---------------------------------------------------------------------------
// Snakes and statistics

/// sigma_1 > sigma_2 < sigma_3 > ... on signed values.
bool is_beta_snake(const SignedPermutation& sigma);

/// Beta-snake with (-1)^n sigma_n < 0.
bool is_gamma_snake(const SignedPermutation& sigma);

/// Number of i <= n-1 with sigma_i < 0 and |sigma_i| > |sigma_{i+1}|.
int stat_npk(const SignedPermutation& sigma);

/// Number of i >= 2 with sigma_i < 0, sigma_{i-1} > sigma_i and |sigma_{i-1}| < |sigma_i|.
int stat_nva(const SignedPermutation& sigma);

/// Letters k such that +k is the last entry of sigma_[k], in increasing order.
std::vector<int> augmenting_elements(const SignedPermutation& sigma);

/// Greatest augmenting element; throws DomainError if there is none.
int stat_gae(const SignedPermutation& sigma);

/// Greatest augmenting element, or nullopt.
std::optional<int> find_gae(const SignedPermutation& sigma);

}  // namespace snake_atlas
