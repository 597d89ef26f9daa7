#include "snake_atlas/signed_permutation.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "snake_atlas/errors.hpp"

namespace snake_atlas {

SignedPermutation::SignedPermutation(Word window) : window_(std::move(window)) {
  const int n = size();
  if (n < 1) throw std::invalid_argument("a signed permutation needs at least one letter");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int x : window_) {
    const int a = std::abs(x);
    if (x == 0 || a > n) {
      throw std::invalid_argument("letter " + std::to_string(x) + " is outside [-" +
                                  std::to_string(n) + ", " + std::to_string(n) + "] \\ {0}");
    }
    if (seen[static_cast<std::size_t>(a)]) {
      throw std::invalid_argument("absolute value " + std::to_string(a) + " occurs twice");
    }
    seen[static_cast<std::size_t>(a)] = true;
  }
}

Word SignedPermutation::absolute() const {
  Word out(window_.size());
  for (std::size_t i = 0; i < window_.size(); ++i) out[i] = std::abs(window_[i]);
  return out;
}

std::string SignedPermutation::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < window_.size(); ++i) os << (i ? "," : "") << window_[i];
  os << ')';
  return os.str();
}

Word restrict_word(std::span<const int> word, int k) {
  Word out;
  out.reserve(word.size());
  for (int x : word)
    if (std::abs(x) <= k) out.push_back(x);
  return out;
}

SubWord subword(const SignedPermutation& sigma, int k) {
  if (k < 1 || k > sigma.size()) {
    throw std::out_of_range("subword index " + std::to_string(k) + " outside [1, " +
                            std::to_string(sigma.size()) + "]");
  }
  return {restrict_word(sigma.letters(), k), sigma.size()};
}

namespace {

LetterShape classify(long left, long mid, long right) {
  if (left < mid) return mid > right ? LetterShape::peak : LetterShape::double_ascent;
  return mid < right ? LetterShape::valley : LetterShape::double_descent;
}

}  // namespace

LetterShape shape_type_one(std::span<const int> word, std::size_t i, int n) {
  const long left = i == 0 ? 0 : std::abs(word[i - 1]);
  const long right = i + 1 == word.size() ? n + 1 : std::abs(word[i + 1]);
  return classify(left, std::abs(word[i]), right);
}

LetterShape shape_type_two(std::span<const int> word, std::size_t i, int n) {
  const long left = i == 0 ? -(n + 1) : word[i - 1];
  const long right = i + 1 == word.size() ? n + 1 : word[i + 1];
  return classify(left, word[i], right);
}

bool has_double_descent(std::span<const int> word) {
  for (std::size_t i = 0; i + 2 < word.size(); ++i)
    if (word[i] > word[i + 1] && word[i + 1] > word[i + 2]) return true;
  return false;
}

bool is_beta_snake(const SignedPermutation& sigma) {
  const auto& w = sigma.window();
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const bool want_descent = i % 2 == 0;
    if (want_descent ? !(w[i] > w[i + 1]) : !(w[i] < w[i + 1])) return false;
  }
  return true;
}

bool is_gamma_snake(const SignedPermutation& sigma) {
  const int sign = sigma.size() % 2 == 0 ? 1 : -1;
  return is_beta_snake(sigma) && sign * sigma.back() < 0;
}

int stat_npk(const SignedPermutation& sigma) {
  const auto& w = sigma.window();
  int count = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] < 0 && std::abs(w[i]) > std::abs(w[i + 1])) ++count;
  return count;
}

int stat_nva(const SignedPermutation& sigma) {
  const auto& w = sigma.window();
  int count = 0;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] < 0 && w[i - 1] > w[i] && std::abs(w[i - 1]) < std::abs(w[i])) ++count;
  return count;
}

std::vector<int> augmenting_elements(const SignedPermutation& sigma) {
  // +k ends sigma_[k] iff every letter after +k has absolute value > k.
  const auto& w = sigma.window();
  std::vector<int> out;
  int suffix_min = sigma.size() + 1;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it > 0 && *it < suffix_min) out.push_back(*it);
    suffix_min = std::min(suffix_min, std::abs(*it));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> find_gae(const SignedPermutation& sigma) {
  auto aug = augmenting_elements(sigma);
  if (aug.empty()) return std::nullopt;
  return aug.back();
}

int stat_gae(const SignedPermutation& sigma) {
  if (auto g = find_gae(sigma)) return *g;
  throw DomainError(sigma.to_string() + " has no augmenting element");
}

}  // namespace snake_atlas
