#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "snake_atlas/signed_permutation.hpp"

namespace snake_atlas {

/// The permutation families that can be tested and enumerated.
enum class FamilyId {
  snakes,            // beta-snakes S_n
  gamma_snakes,      // gamma-snakes S°_n
  rsi,               // signed Simsun, type I
  rsi_b,
  rsi_d,
  rsii,              // signed Simsun, type II
  rsii_b,
  rsii_d,
  adi,               // signed André, type I
  adi_b,
  adi_d,
  adii,              // signed André, type II
  adii_b,
  adii_d,
  alternating_unsigned,
  simsun_unsigned,
  andre_unsigned,
};

/// Every family, in declaration order.
std::span<const FamilyId> all_families();

/// Kebab-case tag, e.g. "rsi-b".
std::string_view family_name(FamilyId f);

/// Inverse of family_name; throws UnknownName.
FamilyId parse_family(std::string_view name);

bool is_member(const SignedPermutation& sigma, FamilyId f);

// Word-level predicates shared by the membership tests.
bool is_simsun(std::span<const int> word);   // no restriction has a double descent
bool is_andre(std::span<const int> word);    // ... and each restriction ends with an ascent
bool right_minima_positive(std::span<const int> word);  // condition on |.|-right-to-left minima
bool left_minima_positive(std::span<const int> word);   // condition on |.|-left-to-right minima

/// Which letter a family refinement pins down.
struct Anchor {
  enum class Kind { first, last, gae };
  Kind kind = Kind::first;
  int value = 0;

  bool matches(const SignedPermutation& sigma) const;
};

enum class Ceiling { permutations, trees, forests };

/// Enumeration ceiling for the given kind of object: the SNAKE_ATLAS_MAX_N
/// environment variable if set, else 8 for permutations and forests, 9 for trees.
int enumeration_ceiling(Ceiling kind);

/// Throws CeilingExceeded when n > ceiling and std::invalid_argument when n < 1.
void require_within_ceiling(int n, Ceiling kind);

/// Visits all of B_n in lexicographic order of windows, with letters ordered
/// -n < ... < -1 < 1 < ... < n.
void for_each_signed_permutation(int n, const std::function<void(const SignedPermutation&)>& visit);

/// Brute-force enumeration of a family over B_n, in the order above.
std::vector<SignedPermutation> enumerate_family(FamilyId f, int n,
                                                std::optional<Anchor> anchor = std::nullopt);

}  // namespace snake_atlas
