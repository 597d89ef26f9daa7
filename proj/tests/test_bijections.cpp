#include <map>
#include <set>

#include "doctest.h"
#include "snake_atlas/bijections.hpp"
#include "snake_atlas/errors.hpp"
#include "snake_atlas/families.hpp"
#include "snake_atlas/tree_maps.hpp"

using namespace snake_atlas;

namespace {

SignedPermutation sp(std::initializer_list<int> w) { return SignedPermutation(Word(w)); }

std::set<std::string> forest_keys(const std::vector<IncForest>& fs) {
  std::set<std::string> out;
  for (const auto& f : fs) out.insert(f.to_string());
  return out;
}

Trace expected_trace(std::initializer_list<const char*> tags) {
  Trace t;
  int j = 1;
  for (const char* tag : tags) t.push_back("j=" + std::to_string(j++) + ":" + tag);
  return t;
}

}  // namespace

TEST_CASE("zeta1 reproduces the worked example") {
  CHECK(zeta1(sp({3, 6, 1, 2, 9, -4, -8, 5, -7})) == sp({2, 5, 1, -3, 8, 4, -7, -6}));
  CHECK(zeta1_inverse(sp({2, 5, 1, -3, 8, 4, -7, -6})) == sp({3, 6, 1, 2, 9, -4, -8, 5, -7}));
  CHECK(zeta1(sp({1, 2})) == sp({1}));
}

TEST_CASE("zeta2 reproduces the worked example and the single-augmenting case") {
  CHECK(zeta2(sp({4, -2, 1, 3, 8, 5, 9, -7, 6})) == sp({3, -1, 2, 4, 7, 5, 8, -6}));
  CHECK(zeta2_inverse(sp({3, -1, 2, 4, 7, 5, 8, -6})) == sp({4, -2, 1, 3, 8, 5, 9, -7, 6}));
  // ADII_2 = {(1,2), (-2,1)}; the second has 1 as its only augmenting element.
  CHECK(zeta2(sp({-2, 1})) == sp({-1}));
  CHECK(zeta2(sp({1, 2})) == sp({1}));
  CHECK(zeta2_inverse(sp({-1})) == sp({-2, 1}));
}

TEST_CASE("phi1 follows the insertion cases of the eight-letter example") {
  const auto sigma = sp({2, 8, -3, 4, -7, 1, -6, -5});
  CHECK(subword(sigma, 6).entries == Word{2, -3, 4, 1, -6, -5});
  CHECK(subword(sigma, 4).entries == Word{2, -3, 4, 1});
  Trace trace;
  const IncForest f = phi1(sigma, &trace);
  CHECK(trace == expected_trace({"root", "ii", "iii", "iii", "i", "ii", "iii", "ii"}));
  CHECK(stat_emp(f) == 8 - 2 * stat_npk(sigma));
  CHECK(phi1_inverse(f) == sigma);
}

TEST_CASE("phi2 follows the insertion cases of the eight-letter example") {
  const auto sigma = sp({-7, 8, 3, 5, -4, -1, 2, -6});
  CHECK(subword(sigma, 6).entries == Word{3, 5, -4, -1, 2, -6});
  CHECK(subword(sigma, 5).entries == Word{3, 5, -4, -1, 2});
  Trace trace;
  const IncForest f = phi2(sigma, &trace);
  CHECK(trace == expected_trace({"root", "i", "ii", "iii-top", "iii-bottom", "ii", "i", "ii"}));
  CHECK(stat_emp(f) == 8 - 2 * stat_nva(sigma));
  CHECK(phi2_inverse(f) == sigma);
}

TEST_CASE("single-letter bases") {
  CHECK(phi1(sp({1})) == IncForest::from_words({{RootColor::white, {1, 0}}}));
  CHECK(phi2(sp({-1})) == IncForest::from_words({{RootColor::black, {1, 0}}}));
}

TEST_CASE("type D reduction of the six-letter example") {
  const auto sigma = sp({-4, 1, 5, -6, 2, -3});
  REQUIRE(is_member(sigma, FamilyId::rsi_d));
  const auto reduced = phi1_D_reduce(sigma);
  CHECK(reduced == sp({-3, 1, 4, -5, 2}));
  CHECK(is_member(reduced, FamilyId::rsi_b));
  CHECK(classify(phi1_B(reduced)) == TreeClass{false, 2});
  const IncBinTree t = phi1_D(sigma);
  CHECK(classify(t) == TreeClass{true, 3});
  CHECK(stat_emp(t) == 6 - 1 - 2 * stat_npk(sigma));
  CHECK(phi1_D_inverse(t) == sigma);
}

TEST_CASE("signs of a forest") {
  // W1 -> 2 with children (o, 3); 3 is a labelled leaf.
  const auto f = IncForest::from_words({{RootColor::white, {1, 0, 2, 3}}, {RootColor::black, {4, 0}}});
  const auto s = forest_signs(f);
  CHECK(s[1] == 1);
  CHECK(s[2] == 1);   // empty left child beats the labelled right child
  CHECK(s[3] == -1);  // labelled leaf
  CHECK(s[4] == -1);  // black root
}

TEST_CASE("non-members are rejected with the failing step") {
  // |sigma| = (3,2,1) has a double descent in its full restriction.
  try {
    phi1(sp({3, 2, 1}));
    FAIL("expected a domain error");
  } catch (const DomainError& e) {
    CHECK(e.step() == 3);
  }
  CHECK_THROWS_AS(phi2(sp({3, 2, 1})), DomainError);
  CHECK_THROWS_AS(zeta1(sp({2, 1})), DomainError);
  CHECK_THROWS_AS(phi1_D(sp({-1})), DomainError);
  CHECK_THROWS_AS(phi1_B(sp({-1})), DomainError);
}

TEST_CASE("phi1 and phi2 are bijections onto F_n with the statistic contracts") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    const auto forests = enumerate_forests(n);
    const auto all_keys = forest_keys(forests);
    for (auto [family, use_nva] : {std::pair{FamilyId::rsi, false}, std::pair{FamilyId::rsii, true}}) {
      const auto members = enumerate_family(family, n);
      CHECK(members.size() == forests.size());
      std::set<std::string> images;
      for (const auto& sigma : members) {
        const IncForest f = use_nva ? phi2(sigma) : phi1(sigma);
        images.insert(f.to_string());
        const int stat = use_nva ? stat_nva(sigma) : stat_npk(sigma);
        CHECK(stat_emp(f) == n - 2 * stat);
        CHECK((use_nva ? phi2_inverse(f) : phi1_inverse(f)) == sigma);
        const bool b_member = is_member(sigma, use_nva ? FamilyId::rsii_b : FamilyId::rsi_b);
        CHECK(all_white(f) == b_member);
        if (b_member) CHECK(last_root(f) == (use_nva ? stat_gae(sigma) : sigma.back()));
      }
      CHECK(images == all_keys);
      for (const auto& f : forests) CHECK((use_nva ? phi2(phi2_inverse(f)) : phi1(phi1_inverse(f))) == f);
    }
  }
}

TEST_CASE("type B and D compositions land in the right tree classes") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    for (bool two : {false, true}) {
      std::map<std::pair<bool, int>, int> hits;
      std::set<std::string> seen;
      for (const auto& sigma : enumerate_family(two ? FamilyId::rsii_b : FamilyId::rsi_b, n)) {
        const IncBinTree t = two ? phi2_B(sigma) : phi1_B(sigma);
        const int k = two ? stat_gae(sigma) : sigma.back();
        CHECK(classify(t) == TreeClass{false, k});
        CHECK(stat_emp(t) == n + 1 - 2 * (two ? stat_nva(sigma) : stat_npk(sigma)));
        CHECK((two ? phi2_B_inverse(t) : phi1_B_inverse(t)) == sigma);
        seen.insert(t.to_string());
      }
      for (const auto& sigma : enumerate_family(two ? FamilyId::rsii_d : FamilyId::rsi_d, n)) {
        const int k = two ? -sigma.front() : -sigma.back();
        if (k < 2) continue;
        const IncBinTree t = two ? phi2_D(sigma) : phi1_D(sigma);
        CHECK(classify(t) == TreeClass{true, k});
        CHECK(stat_emp(t) == n - 1 - 2 * (two ? stat_nva(sigma) : stat_npk(sigma)));
        CHECK((two ? phi2_D_inverse(t) : phi1_D_inverse(t)) == sigma);
        seen.insert(t.to_string());
      }
      // Together the images cover T°_n and T*_{n,k} for k >= 2 exactly once.
      std::size_t expected = 0;
      for (const auto& t : enumerate_trees(n)) {
        const TreeClass c = classify(t);
        if (!c.starred || c.rmlab >= 2) ++expected;
      }
      CHECK(seen.size() == expected);
    }
  }
}

TEST_CASE("zeta maps are bijections with the index contracts") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    for (bool two : {false, true}) {
      const auto source = enumerate_family(two ? FamilyId::adii : FamilyId::adi, n + 1);
      const auto target = enumerate_family(two ? FamilyId::rsii : FamilyId::rsi, n);
      CHECK(source.size() == target.size());
      std::set<SignedPermutation> images;
      for (const auto& sigma : source) {
        const auto omega = two ? zeta2(sigma) : zeta1(sigma);
        CHECK(is_member(omega, two ? FamilyId::rsii : FamilyId::rsi));
        CHECK((two ? zeta2_inverse(omega) : zeta1_inverse(omega)) == sigma);
        images.insert(omega);
        const int last = sigma.back();
        if (is_member(sigma, two ? FamilyId::adii_b : FamilyId::adi_b)) {
          CHECK(is_member(omega, two ? FamilyId::rsii_b : FamilyId::rsi_b));
          if (two)
            CHECK(stat_gae(omega) == last - 1);
          else
            CHECK(omega.back() == last - 1);
        }
        if (is_member(sigma, two ? FamilyId::adii_d : FamilyId::adi_d)) {
          CHECK(is_member(omega, two ? FamilyId::rsii_d : FamilyId::rsi_d));
          if (two)
            CHECK(omega.front() == sigma.front() + 1);
          else
            CHECK(omega.back() == last + 1);
        }
      }
      CHECK(images.size() == target.size());
    }
  }
}

TEST_CASE("traces have one tag per step") {
  Trace t;
  phi2_D(sp({-2, 1}), &t);
  CHECK(t == expected_trace({"root"}));
}
