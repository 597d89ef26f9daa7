#pragma once

#include <cstdint>
#include <vector>

#include "snake_atlas/laurent_poly.hpp"
#include "snake_atlas/qcalc.hpp"
#include "snake_atlas/signed_permutation.hpp"

// Published reference values, typed in by hand. Double-triangle rows list
// columns k = -r..-1 then 1..r; other lists start at n = 1.
namespace snake_atlas::fixtures {

const std::vector<std::int64_t>& euler_numbers();   // n = 1..8
const std::vector<std::int64_t>& springer_b();      // K(B_n), n = 1..8
const std::vector<std::int64_t>& springer_d();      // K(D_n), n = 1..8

const std::vector<std::vector<std::int64_t>>& arnold_rows();        // n = 1..6
const std::vector<std::vector<LaurentPoly>>& arnold_poly_rows();    // n = 1..5
const std::vector<std::vector<LaurentPoly>>& gamma_poly_rows();     // n = 1..5
const std::vector<std::vector<std::int64_t>>& gamma_rows();         // n = 1..6

const std::vector<LaurentPoly>& hoffman_P_list();  // n = 1..5
const std::vector<LaurentPoly>& hoffman_Q_list();
const std::vector<LaurentPoly>& hoffman_R_list();

const std::vector<BiPoly>& q_P_list();  // n = 1..3
const std::vector<BiPoly>& q_Q_list();
const std::vector<BiPoly>& q_R_list();

/// sigma_[1], ..., sigma_[n] for the two eight-letter construction examples.
struct SubwordTable {
  SignedPermutation sigma;
  std::vector<Word> subwords;
};
const SubwordTable& type_one_subwords();
const SubwordTable& type_two_subwords();

}  // namespace snake_atlas::fixtures
