#include "snake_atlas/families.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <string>

#include "snake_atlas/errors.hpp"

namespace snake_atlas {

namespace {

constexpr std::array kFamilies = {
    FamilyId::snakes,  FamilyId::gamma_snakes, FamilyId::rsi,    FamilyId::rsi_b,
    FamilyId::rsi_d,   FamilyId::rsii,         FamilyId::rsii_b, FamilyId::rsii_d,
    FamilyId::adi,     FamilyId::adi_b,        FamilyId::adi_d,  FamilyId::adii,
    FamilyId::adii_b,  FamilyId::adii_d,       FamilyId::alternating_unsigned,
    FamilyId::simsun_unsigned, FamilyId::andre_unsigned,
};

constexpr std::array<std::string_view, kFamilies.size()> kNames = {
    "snakes", "gamma-snakes", "rsi",    "rsi-b",  "rsi-d",  "rsii",   "rsii-b",
    "rsii-d", "adi",          "adi-b",  "adi-d",  "adii",   "adii-b", "adii-d",
    "alternating-unsigned",   "simsun-unsigned",  "andre-unsigned",
};

int max_abs(std::span<const int> word) {
  int m = 0;
  for (int x : word) m = std::max(m, std::abs(x));
  return m;
}

bool contains(std::span<const int> word, int letter) {
  return std::find(word.begin(), word.end(), letter) != word.end();
}

bool all_positive(std::span<const int> word) {
  return std::all_of(word.begin(), word.end(), [](int x) { return x > 0; });
}

bool is_alternating(std::span<const int> w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (i % 2 == 0 ? !(w[i] > w[i + 1]) : !(w[i] < w[i + 1])) return false;
  }
  return true;
}

// sigma_n < 0, |sigma_n| > sigma_{n-1}, positive right-to-left minima before sigma_n.
bool type_one_d_condition(std::span<const int> w) {
  const std::size_t n = w.size();
  if (w[n - 1] >= 0) return false;
  if (n >= 2 && !(std::abs(w[n - 1]) > w[n - 2])) return false;
  return right_minima_positive(w.first(n - 1));
}

// The type I condition must also survive deleting sigma_{n-1}; without this
// extra clause the family is too large for the slide onto RSI-D.
bool adi_d_condition(std::span<const int> w) {
  if (!type_one_d_condition(w)) return false;
  if (w.size() < 3) return true;
  Word shorter(w.begin(), w.end());
  shorter.erase(shorter.end() - 2);
  return type_one_d_condition(shorter);
}

bool rsii_d_condition(const SignedPermutation& sigma) {
  const auto w = sigma.letters();
  if (w[0] >= 0) return false;
  const int gae = find_gae(sigma).value_or(0);
  if (!(std::abs(w[0]) > gae)) return false;
  return left_minima_positive(w.subspan(1));
}

bool adii_d_condition(std::span<const int> w) {
  if (w[0] >= 0) return false;
  if (!(std::abs(w[0]) > w.back())) return false;
  return left_minima_positive(w.subspan(1));
}

}  // namespace

std::span<const FamilyId> all_families() { return kFamilies; }

std::string_view family_name(FamilyId f) { return kNames[static_cast<std::size_t>(f)]; }

FamilyId parse_family(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return kFamilies[i];
  throw UnknownName("unknown family '" + std::string(name) + "'");
}

bool is_simsun(std::span<const int> word) {
  const int m = max_abs(word);
  for (int k = 1; k <= m; ++k)
    if (has_double_descent(restrict_word(word, k))) return false;
  return true;
}

bool is_andre(std::span<const int> word) {
  const int m = max_abs(word);
  for (int k = 1; k <= m; ++k) {
    const Word r = restrict_word(word, k);
    if (has_double_descent(r)) return false;
    if (r.size() >= 2 && !(r[r.size() - 2] < r.back())) return false;
  }
  return true;
}

bool right_minima_positive(std::span<const int> word) {
  int suffix_min = 0;
  for (auto i = word.size(); i-- > 0;) {
    const int a = std::abs(word[i]);
    if (i + 1 == word.size() || a < suffix_min) {
      if (word[i] < 0) return false;
      suffix_min = a;
    }
  }
  return true;
}

bool left_minima_positive(std::span<const int> word) {
  int prefix_min = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const int a = std::abs(word[i]);
    if (i == 0 || a < prefix_min) {
      if (word[i] < 0) return false;
      prefix_min = a;
    }
  }
  return true;
}

bool is_member(const SignedPermutation& sigma, FamilyId f) {
  const auto w = sigma.letters();
  switch (f) {
    case FamilyId::snakes:
      return is_beta_snake(sigma);
    case FamilyId::gamma_snakes:
      return is_gamma_snake(sigma);
    case FamilyId::rsi:
      return is_simsun(sigma.absolute());
    case FamilyId::rsi_b:
      return is_simsun(sigma.absolute()) && right_minima_positive(w);
    case FamilyId::rsi_d:
      return is_simsun(sigma.absolute()) && type_one_d_condition(w);
    case FamilyId::rsii:
      return is_simsun(w);
    case FamilyId::rsii_b:
      return is_simsun(w) && left_minima_positive(w);
    case FamilyId::rsii_d:
      return is_simsun(w) && rsii_d_condition(sigma);
    case FamilyId::adi:
      return contains(w, 1) && is_andre(sigma.absolute());
    case FamilyId::adi_b:
      return contains(w, 1) && is_andre(sigma.absolute()) && right_minima_positive(w);
    case FamilyId::adi_d:
      return contains(w, 1) && is_andre(sigma.absolute()) && adi_d_condition(w);
    case FamilyId::adii:
      return contains(w, 1) && is_andre(w);
    case FamilyId::adii_b:
      return contains(w, 1) && is_andre(w) && left_minima_positive(w);
    case FamilyId::adii_d:
      return contains(w, 1) && is_andre(w) && adii_d_condition(w);
    case FamilyId::alternating_unsigned:
      return all_positive(w) && is_alternating(w);
    case FamilyId::simsun_unsigned:
      return all_positive(w) && is_simsun(w);
    case FamilyId::andre_unsigned:
      return all_positive(w) && is_andre(w);
  }
  return false;
}

bool Anchor::matches(const SignedPermutation& sigma) const {
  switch (kind) {
    case Kind::first:
      return sigma.front() == value;
    case Kind::last:
      return sigma.back() == value;
    case Kind::gae: {
      const auto g = find_gae(sigma);
      return g && *g == value;
    }
  }
  return false;
}

int enumeration_ceiling(Ceiling kind) {
  if (const char* env = std::getenv("SNAKE_ATLAS_MAX_N")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
      // fall through to the defaults
    }
  }
  return kind == Ceiling::trees ? 9 : 8;
}

void require_within_ceiling(int n, Ceiling kind) {
  if (n < 1) throw std::invalid_argument("n must be at least 1, got " + std::to_string(n));
  const int c = enumeration_ceiling(kind);
  if (n > c) throw CeilingExceeded(n, c);
}

void for_each_signed_permutation(int n,
                                 const std::function<void(const SignedPermutation&)>& visit) {
  require_within_ceiling(n, Ceiling::permutations);
  Word window(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  // Candidate letters in the order -n, ..., -1, 1, ..., n.
  Word order;
  for (int v = -n; v <= n; ++v)
    if (v != 0) order.push_back(v);

  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == window.size()) {
      visit(SignedPermutation(window));
      return;
    }
    for (int v : order) {
      const auto a = static_cast<std::size_t>(std::abs(v));
      if (used[a]) continue;
      used[a] = true;
      window[pos] = v;
      self(self, pos + 1);
      used[a] = false;
    }
  };
  rec(rec, 0);
}

std::vector<SignedPermutation> enumerate_family(FamilyId f, int n, std::optional<Anchor> anchor) {
  std::vector<SignedPermutation> out;
  for_each_signed_permutation(n, [&](const SignedPermutation& s) {
    if (anchor && !anchor->matches(s)) return;
    if (is_member(s, f)) out.push_back(s);
  });
  return out;
}

}  // namespace snake_atlas
