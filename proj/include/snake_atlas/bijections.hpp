#pragma once

#include <string>
#include <vector>

#include "snake_atlas/forest.hpp"
#include "snake_atlas/signed_permutation.hpp"
#include "snake_atlas/tree.hpp"

namespace snake_atlas {

/// Case tags recorded step by step, e.g. "j=3:iii".
using Trace = std::vector<std::string>;

/// Signs of the labelled nodes of a forest (index = label, entry 0 unused):
/// white roots and nodes whose left child beats the right child are +1,
/// black roots, labelled leaves and the reverse comparison are -1. Empty
/// leaves count as n+1, so a node with two empty leaves is +1.
std::vector<int> forest_signs(const IncForest& forest);

// Type I: RSI_n <-> F_n, with emp = n - 2 npk. Domain errors carry the
// failing step in DomainError::step().
IncForest phi1(const SignedPermutation& sigma, Trace* trace = nullptr);
SignedPermutation phi1_inverse(const IncForest& forest, Trace* trace = nullptr);

/// RSI-B_{n,k} -> T°_{n,k}, the composite of phi1 with the inverse of mu.
IncBinTree phi1_B(const SignedPermutation& sigma, Trace* trace = nullptr);
SignedPermutation phi1_B_inverse(const IncBinTree& tree, Trace* trace = nullptr);

/// RSI-D_{n,-k} -> T*_{n,k} for 2 <= k <= n. The last letter -k is dropped,
/// letters beyond k move one step toward zero (phi1_D_reduce), phi1_B runs on
/// the result and the rightmost leaf then takes label k.
SignedPermutation phi1_D_reduce(const SignedPermutation& sigma);
IncBinTree phi1_D(const SignedPermutation& sigma, Trace* trace = nullptr);
SignedPermutation phi1_D_inverse(const IncBinTree& tree, Trace* trace = nullptr);

// Type II: RSII_n <-> F_n, with emp = n - 2 nva.
IncForest phi2(const SignedPermutation& sigma, Trace* trace = nullptr);
SignedPermutation phi2_inverse(const IncForest& forest, Trace* trace = nullptr);

/// RSII-B_{n,k} (gae = k) -> T°_{n,k}.
IncBinTree phi2_B(const SignedPermutation& sigma, Trace* trace = nullptr);
SignedPermutation phi2_B_inverse(const IncBinTree& tree, Trace* trace = nullptr);

/// RSII-D_{n,-k} (sigma_1 = -k) -> T*_{n,k} for 2 <= k <= n, as for type I
/// but stripping the first letter.
SignedPermutation phi2_D_reduce(const SignedPermutation& sigma);
IncBinTree phi2_D(const SignedPermutation& sigma, Trace* trace = nullptr);
SignedPermutation phi2_D_inverse(const IncBinTree& tree, Trace* trace = nullptr);

/// ADI_{n+1} -> RSI_n: the right-to-left minima of |sigma| slide one slot to
/// the left, the last letter drops out and every absolute value goes down by one.
SignedPermutation zeta1(const SignedPermutation& sigma);
SignedPermutation zeta1_inverse(const SignedPermutation& omega);

/// ADII_{n+1} -> RSII_n: the same slide along the augmenting positions.
SignedPermutation zeta2(const SignedPermutation& sigma);
SignedPermutation zeta2_inverse(const SignedPermutation& omega);

}  // namespace snake_atlas
