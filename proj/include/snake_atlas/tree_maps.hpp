#pragma once

#include <string>

#include "snake_atlas/signed_permutation.hpp"
#include "snake_atlas/tree.hpp"

namespace snake_atlas {

/// Image of a recurrence bijection together with the case that produced it:
/// "a" (label swap), "b" (removal of a leaf), "b-leaf" / "b-internal"
/// (the two sub-cases of the T° map) or "cap".
struct PsiResult {
  IncBinTree tree;
  std::string case_tag;
};

/// T*_{n,k} -> T*_{n,k-1} u T°_{n-1,k-1} for k >= 2. Case "a" swaps labels
/// k-1 and k (emp kept); case "b" turns the rightmost leaf into an empty leaf
/// and closes the label gap (emp + 1). Throws DomainError otherwise.
PsiResult psi_star(const IncBinTree& tree);
IncBinTree psi_star_inverse(const IncBinTree& image);

/// T°_{n,k} -> T°_{n,k+1} u T*_{n-1,k} for k < n; emp is kept in cases "a"
/// and "b-internal" and drops by one in case "b-leaf".
PsiResult psi_circ(const IncBinTree& tree);
IncBinTree psi_circ_inverse(const IncBinTree& image);

/// T*_{n,n} -> T°_{n,n}: two empty leaves hung below the rightmost leaf.
IncBinTree psi_cap(const IncBinTree& tree);
IncBinTree psi_cap_inverse(const IncBinTree& image);

/// Tree-to-snake map: read the inorder word, send label i to n-i+1 with sign
/// (-1)^(j+1) where j counts the empty leaves after it, and reverse.
SignedPermutation gamma(const IncBinTree& tree);

/// Inverse of gamma on beta-snakes; throws DomainError on any other input.
IncBinTree gamma_inverse(const SignedPermutation& snake);

}  // namespace snake_atlas
