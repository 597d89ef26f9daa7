#include <algorithm>
#include <cstdlib>

#include "doctest.h"
#include "snake_atlas/errors.hpp"
#include "snake_atlas/families.hpp"
#include "snake_atlas/signed_permutation.hpp"

using namespace snake_atlas;

namespace {

using Windows = std::vector<Word>;

Windows windows(FamilyId f, int n, std::optional<Anchor> a = std::nullopt) {
  Windows out;
  for (const auto& s : enumerate_family(f, n, a)) out.push_back(s.window());
  return out;
}

// Lists from the literature, put into the enumeration order.
Windows sorted(Windows w) {
  std::sort(w.begin(), w.end());
  return w;
}

std::size_t count(FamilyId f, int n) { return enumerate_family(f, n).size(); }

const std::int64_t kEuler[] = {1, 1, 1, 2, 5, 16, 61, 272, 1385};  // E_0..E_8
const std::int64_t kSpringerB[] = {0, 1, 3, 11, 57, 361, 2763, 24611};
const std::int64_t kSpringerD[] = {0, 1, 1, 5, 23, 151, 1141, 10205};

struct ScopedEnv {
  explicit ScopedEnv(const char* value) { setenv("SNAKE_ATLAS_MAX_N", value, 1); }
  ~ScopedEnv() { unsetenv("SNAKE_ATLAS_MAX_N"); }
};

}  // namespace

TEST_CASE("signed permutation construction and access") {
  const SignedPermutation s({3, -1, 2});
  CHECK(s.size() == 3);
  CHECK(s.at(2) == -1);
  CHECK(s.front() == 3);
  CHECK(s.back() == 2);
  CHECK(s.absolute() == Word{3, 1, 2});
  CHECK(s.to_string() == "(3,-1,2)");
  CHECK_THROWS_AS(SignedPermutation({}), std::invalid_argument);
  CHECK_THROWS_AS(SignedPermutation({1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(SignedPermutation({1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(SignedPermutation({1, 3}), std::invalid_argument);
}

TEST_CASE("subwords of the construction examples") {
  const SignedPermutation a({2, 8, -3, 4, -7, 1, -6, -5});
  CHECK(subword(a, 1).entries == Word{1});
  CHECK(subword(a, 3).entries == Word{2, -3, 1});
  CHECK(subword(a, 6).entries == Word{2, -3, 4, 1, -6, -5});
  CHECK(subword(a, 8).entries == a.window());
  const SignedPermutation b({-7, 8, 3, 5, -4, -1, 2, -6});
  CHECK(subword(b, 2).entries == Word{-1, 2});
  CHECK(subword(b, 5).entries == Word{3, 5, -4, -1, 2});
  CHECK_THROWS_AS(subword(a, 0), std::out_of_range);
  CHECK_THROWS_AS(subword(a, 9), std::out_of_range);
}

TEST_CASE("restriction is compositional") {
  for_each_signed_permutation(5, [](const SignedPermutation& s) {
    for (int k = 1; k <= 5; ++k)
      for (int j = 1; j < k; ++j) REQUIRE(restrict_word(subword(s, k).entries, j) == subword(s, j).entries);
  });
}

TEST_CASE("letter shapes under the two boundary conventions") {
  const Word w{2, -3, 1};
  CHECK(shape_type_one(w, 0, 3) == LetterShape::double_ascent);
  CHECK(shape_type_one(w, 1, 3) == LetterShape::peak);
  CHECK(shape_type_one(w, 2, 3) == LetterShape::valley);
  CHECK(shape_type_two(w, 0, 3) == LetterShape::peak);
  CHECK(shape_type_two(w, 1, 3) == LetterShape::valley);
  CHECK(shape_type_two(w, 2, 3) == LetterShape::double_ascent);
  CHECK(has_double_descent(Word{3, 2, 1}));
  CHECK_FALSE(has_double_descent(Word{3, 1, 2}));
}

TEST_CASE("statistics") {
  const SignedPermutation s({-3, 1, -2});
  CHECK(stat_npk(s) == 1);
  CHECK(stat_nva(s) == 1);
  CHECK(stat_npk(SignedPermutation({1, 2, 3})) == 0);
  CHECK(augmenting_elements(SignedPermutation({1, 2, 3})) == std::vector<int>{1, 2, 3});
  CHECK(stat_gae(SignedPermutation({2, 8, -3, 4, -7, 1, -6, -5})) == 1);
  CHECK(stat_gae(SignedPermutation({-7, 8, 3, 5, -4, -1, 2, -6})) == 2);
  CHECK_FALSE(find_gae(SignedPermutation({-1})).has_value());
  CHECK_THROWS_AS(stat_gae(SignedPermutation({-1})), DomainError);
}

TEST_CASE("snakes") {
  CHECK(windows(FamilyId::snakes, 1) == Windows{{-1}, {1}});
  CHECK(windows(FamilyId::snakes, 3, Anchor{Anchor::Kind::first, 2}).size() == 4);
  CHECK(is_beta_snake(SignedPermutation({2, -3, 1})));
  CHECK_FALSE(is_beta_snake(SignedPermutation({1, 2})));
  for (int n = 1; n <= 7; ++n) {
    CAPTURE(n);
    CHECK(count(FamilyId::snakes, n) == (std::size_t{1} << n) * static_cast<std::size_t>(kEuler[n]));
  }
}

TEST_CASE("type I families against the published lists") {
  CHECK(windows(FamilyId::rsi_d, 3) == sorted({{1, 2, -3}, {2, 1, -3}, {-2, 1, -3}, {3, 1, -2}, {-3, 1, -2}}));
  CHECK(windows(FamilyId::rsi_b, 2) == sorted({{1, 2}, {2, 1}, {-2, 1}}));
  CHECK(windows(FamilyId::rsi_d, 1) == Windows{{-1}});
  CHECK(windows(FamilyId::rsi_b, 1) == Windows{{1}});
  CHECK(windows(FamilyId::adi_b, 3) == sorted({{1, 2, 3}, {3, 1, 2}, {-3, 1, 2}}));
  CHECK(windows(FamilyId::adi_b, 4) == sorted({{1, 2, 3, 4},
                                                {1, 4, 2, 3},
                                                {1, -4, 2, 3},
                                                {3, 1, 2, 4},
                                                {-3, 1, 2, 4},
                                                {3, 4, 1, 2},
                                                {-3, 4, 1, 2},
                                                {3, -4, 1, 2},
                                                {-3, -4, 1, 2},
                                                {4, 1, 2, 3},
                                                {-4, 1, 2, 3}}));
  CHECK(windows(FamilyId::adi_d, 2) == Windows{{1, -2}});
  CHECK(windows(FamilyId::adi_d, 3) == Windows{{1, 2, -3}});
  CHECK(windows(FamilyId::adi_d, 4) ==
        sorted({{1, 2, 3, -4}, {3, 1, 2, -4}, {-3, 1, 2, -4}, {4, 1, 2, -3}, {-4, 1, 2, -3}}));
}

TEST_CASE("type II families against the published lists") {
  CHECK(windows(FamilyId::rsii_b, 2) == sorted({{1, 2}, {1, -2}, {2, 1}}));
  CHECK(windows(FamilyId::rsii_b, 3) == sorted({{1, 2, 3},
                                                 {1, -2, 3},
                                                 {1, 2, -3},
                                                 {1, 3, 2},
                                                 {1, -3, 2},
                                                 {1, 3, -2},
                                                 {1, -3, -2},
                                                 {2, 1, 3},
                                                 {2, 3, 1},
                                                 {2, -3, 1},
                                                 {3, 1, 2}}));
  CHECK(windows(FamilyId::rsii_d, 1) == Windows{{-1}});
  CHECK(windows(FamilyId::rsii_d, 2) == Windows{{-2, 1}});
  CHECK(windows(FamilyId::rsii_d, 3) ==
        sorted({{-2, 1, -3}, {-2, 3, 1}, {-3, 1, 2}, {-3, 1, -2}, {-3, 2, 1}}));
  CHECK(windows(FamilyId::adii_b, 3) == sorted({{1, 2, 3}, {1, -3, 2}, {3, 1, 2}}));
  CHECK(windows(FamilyId::adii_d, 3) == Windows{{-3, 1, 2}});
}

TEST_CASE("family sizes follow the Euler and Springer numbers") {
  for (int n = 1; n <= 7; ++n) {
    CAPTURE(n);
    const auto euler_next = static_cast<std::size_t>(kEuler[n + 1]);
    CHECK(count(FamilyId::rsi, n) == (std::size_t{1} << n) * euler_next);
    CHECK(count(FamilyId::rsii, n) == (std::size_t{1} << n) * euler_next);
    CHECK(count(FamilyId::rsi_b, n) == static_cast<std::size_t>(kSpringerB[n]));
    CHECK(count(FamilyId::rsi_d, n) == static_cast<std::size_t>(kSpringerD[n]));
    CHECK(count(FamilyId::rsii_b, n) == static_cast<std::size_t>(kSpringerB[n]));
    CHECK(count(FamilyId::rsii_d, n) == static_cast<std::size_t>(kSpringerD[n]));
    CHECK(count(FamilyId::simsun_unsigned, n) == euler_next);
    CHECK(count(FamilyId::andre_unsigned, n) == static_cast<std::size_t>(kEuler[n]));
    if (n >= 2) {
      CHECK(count(FamilyId::adi, n) == count(FamilyId::rsi, n - 1));
      CHECK(count(FamilyId::adii, n) == count(FamilyId::rsii, n - 1));
      CHECK(count(FamilyId::adi_d, n) == static_cast<std::size_t>(kSpringerD[n - 1]));
      CHECK(count(FamilyId::adii_d, n) == static_cast<std::size_t>(kSpringerD[n - 1]));
    }
  }
}

TEST_CASE("type B and type D refinements are disjoint parts of the whole family") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& s : enumerate_family(FamilyId::rsi, n)) {
      const bool b = is_member(s, FamilyId::rsi_b);
      const bool d = is_member(s, FamilyId::rsi_d);
      REQUIRE_FALSE((b && d));
      if (b) REQUIRE(s.back() > 0);
      if (d) REQUIRE(s.back() < 0);
    }
  CHECK(is_member(SignedPermutation({-2, 1}), FamilyId::rsii_d));
  CHECK(is_member(SignedPermutation({1, 2, 3, 4}), FamilyId::rsi_b));
  CHECK(is_member(SignedPermutation({1, 2, 3, 4}), FamilyId::rsii_b));
}

TEST_CASE("enumeration order is lexicographic with negatives first") {
  const Windows w = windows(FamilyId::snakes, 4);
  CHECK(std::is_sorted(w.begin(), w.end()));
  // v_{4,-4} = 0, so the smallest first letter is -3.
  CHECK(w.front() == Word{-3, -4, -1, -2});
}

TEST_CASE("anchors") {
  for (const auto& s : enumerate_family(FamilyId::rsii_b, 5, Anchor{Anchor::Kind::gae, 3})) CHECK(stat_gae(s) == 3);
  for (const auto& s : enumerate_family(FamilyId::rsi_b, 5, Anchor{Anchor::Kind::last, 2})) CHECK(s.back() == 2);
  CHECK(enumerate_family(FamilyId::rsii_d, 3, Anchor{Anchor::Kind::first, -3}).size() == 3);
}

TEST_CASE("family names round-trip") {
  for (FamilyId f : all_families()) CHECK(parse_family(family_name(f)) == f);
  CHECK(family_name(FamilyId::rsi_d) == "rsi-d");
  CHECK_THROWS_AS(parse_family("rsi_d"), UnknownName);
}

TEST_CASE("ceilings") {
  CHECK(enumeration_ceiling(Ceiling::permutations) == 8);
  CHECK(enumeration_ceiling(Ceiling::trees) == 9);
  CHECK_THROWS_AS(enumerate_family(FamilyId::snakes, 9), CeilingExceeded);
  CHECK_THROWS_AS(enumerate_family(FamilyId::snakes, 0), std::invalid_argument);
  {
    ScopedEnv env("3");
    CHECK(enumeration_ceiling(Ceiling::permutations) == 3);
    try {
      enumerate_family(FamilyId::rsi, 4);
      FAIL("expected a refusal");
    } catch (const CeilingExceeded& e) {
      CHECK(e.ceiling() == 3);
      CHECK(std::string(e.what()).find("ceiling 3") != std::string::npos);
    }
  }
  CHECK(enumeration_ceiling(Ceiling::permutations) == 8);
}
