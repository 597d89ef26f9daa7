#include "snake_atlas/fixtures.hpp"

namespace snake_atlas::fixtures {

namespace {

LaurentPoly P(std::initializer_list<std::pair<int, std::int64_t>> terms) { return poly_from_terms(terms); }
QPoly q(std::vector<std::int64_t> c) { return QPoly(0, std::move(c)); }

}  // namespace

const std::vector<std::int64_t>& euler_numbers() {
  static const std::vector<std::int64_t> v{1, 1, 2, 5, 16, 61, 272, 1385};
  return v;
}

const std::vector<std::int64_t>& springer_b() {
  static const std::vector<std::int64_t> v{1, 3, 11, 57, 361, 2763, 24611, 250737};
  return v;
}

const std::vector<std::int64_t>& springer_d() {
  static const std::vector<std::int64_t> v{1, 1, 5, 23, 151, 1141, 10205, 103823};
  return v;
}

const std::vector<std::vector<std::int64_t>>& arnold_rows() {
  static const std::vector<std::vector<std::int64_t>> v{
      {1, 1},
      {0, 1, 1, 2},
      {0, 2, 3, 3, 4, 4},
      {0, 4, 8, 11, 11, 14, 16, 16},
      {0, 16, 32, 46, 57, 57, 68, 76, 80, 80},
      {0, 80, 160, 236, 304, 361, 361, 418, 464, 496, 512, 512},
  };
  return v;
}

const std::vector<std::vector<LaurentPoly>>& arnold_poly_rows() {
  static const std::vector<std::vector<LaurentPoly>> v{
      {P({{0, 1}}), P({{2, 1}})},
      {{}, P({{1, 1}}), P({{3, 1}}), P({{1, 1}, {3, 1}})},
      {{}, P({{0, 1}, {2, 1}}), P({{0, 1}, {2, 2}}),
       P({{2, 1}, {4, 2}}), P({{2, 2}, {4, 2}}), P({{2, 2}, {4, 2}})},
      {{}, P({{1, 2}, {3, 2}}), P({{1, 4}, {3, 4}}), P({{1, 5}, {3, 6}}),
       P({{3, 5}, {5, 6}}), P({{1, 1}, {3, 7}, {5, 6}}), P({{1, 2}, {3, 8}, {5, 6}}), P({{1, 2}, {3, 8}, {5, 6}})},
      {{}, P({{0, 2}, {2, 8}, {4, 6}}), P({{0, 4}, {2, 16}, {4, 12}}), P({{0, 5}, {2, 23}, {4, 18}}),
       P({{0, 5}, {2, 28}, {4, 24}}),
       P({{2, 5}, {4, 28}, {6, 24}}), P({{2, 10}, {4, 34}, {6, 24}}), P({{2, 14}, {4, 38}, {6, 24}}),
       P({{2, 16}, {4, 40}, {6, 24}}), P({{2, 16}, {4, 40}, {6, 24}})},
  };
  return v;
}

const std::vector<std::vector<LaurentPoly>>& gamma_poly_rows() {
  static const std::vector<std::vector<LaurentPoly>> v{
      {{}, P({{2, 1}})},
      {{}, P({{1, 1}}), P({{3, 1}}), P({{3, 1}})},
      {{}, P({{2, 1}}), P({{2, 2}}), P({{4, 2}}), P({{2, 1}, {4, 2}}), P({{2, 1}, {4, 2}})},
      {{}, P({{1, 1}, {3, 2}}), P({{1, 2}, {3, 4}}), P({{1, 2}, {3, 6}}),
       P({{3, 2}, {5, 6}}), P({{3, 4}, {5, 6}}), P({{3, 5}, {5, 6}}), P({{3, 5}, {5, 6}})},
      {{}, P({{2, 5}, {4, 6}}), P({{2, 10}, {4, 12}}), P({{2, 14}, {4, 18}}), P({{2, 16}, {4, 24}}),
       P({{4, 16}, {6, 24}}), P({{2, 2}, {4, 22}, {6, 24}}), P({{2, 4}, {4, 26}, {6, 24}}),
       P({{2, 5}, {4, 28}, {6, 24}}), P({{2, 5}, {4, 28}, {6, 24}})},
  };
  return v;
}

const std::vector<std::vector<std::int64_t>>& gamma_rows() {
  static const std::vector<std::vector<std::int64_t>> v{
      {0, 1},
      {0, 1, 1, 1},
      {0, 1, 2, 2, 3, 3},
      {0, 3, 6, 8, 8, 10, 11, 11},
      {0, 11, 22, 32, 40, 40, 48, 54, 57, 57},
      {0, 57, 114, 168, 216, 256, 256, 296, 328, 350, 361, 361},
  };
  return v;
}

const std::vector<LaurentPoly>& hoffman_P_list() {
  static const std::vector<LaurentPoly> v{
      P({{0, 1}, {2, 1}}),
      P({{1, 2}, {3, 2}}),
      P({{0, 2}, {2, 8}, {4, 6}}),
      P({{1, 16}, {3, 40}, {5, 24}}),
      P({{0, 16}, {2, 136}, {4, 240}, {6, 120}}),
  };
  return v;
}

const std::vector<LaurentPoly>& hoffman_Q_list() {
  static const std::vector<LaurentPoly> v{
      P({{1, 1}}),
      P({{0, 1}, {2, 2}}),
      P({{1, 5}, {3, 6}}),
      P({{0, 5}, {2, 28}, {4, 24}}),
      P({{1, 61}, {3, 180}, {5, 120}}),
  };
  return v;
}

const std::vector<LaurentPoly>& hoffman_R_list() {
  static const std::vector<LaurentPoly> v{
      P({{1, 2}}),
      P({{0, 2}, {2, 6}}),
      P({{1, 16}, {3, 24}}),
      P({{0, 16}, {2, 120}, {4, 120}}),
      P({{1, 272}, {3, 960}, {5, 720}}),
  };
  return v;
}

const std::vector<BiPoly>& q_P_list() {
  static const std::vector<BiPoly> v{
      BiPoly({q({1}), {}, q({1})}),
      BiPoly({{}, q({1, 1}), {}, q({1, 1})}),
      BiPoly({q({1, 1}), {}, q({2, 3, 2, 1}), {}, q({1, 2, 2, 1})}),
  };
  return v;
}

const std::vector<BiPoly>& q_Q_list() {
  static const std::vector<BiPoly> v{
      BiPoly({{}, q({1})}),
      BiPoly({q({1}), {}, q({1, 1})}),
      BiPoly({{}, q({2, 2, 1}), {}, q({1, 2, 2, 1})}),
  };
  return v;
}

const std::vector<BiPoly>& q_R_list() {
  static const std::vector<BiPoly> v{
      BiPoly({{}, q({1, 1})}),
      BiPoly({q({1, 1}), {}, q({1, 2, 2, 1})}),
      BiPoly({{}, q({2, 5, 5, 3, 1}), {}, q({1, 3, 5, 6, 5, 3, 1})}),
  };
  return v;
}

const SubwordTable& type_one_subwords() {
  static const SubwordTable t{SignedPermutation({2, 8, -3, 4, -7, 1, -6, -5}),
                              {{1},
                               {2, 1},
                               {2, -3, 1},
                               {2, -3, 4, 1},
                               {2, -3, 4, 1, -5},
                               {2, -3, 4, 1, -6, -5},
                               {2, -3, 4, -7, 1, -6, -5},
                               {2, 8, -3, 4, -7, 1, -6, -5}}};
  return t;
}

const SubwordTable& type_two_subwords() {
  static const SubwordTable t{SignedPermutation({-7, 8, 3, 5, -4, -1, 2, -6}),
                              {{-1},
                               {-1, 2},
                               {3, -1, 2},
                               {3, -4, -1, 2},
                               {3, 5, -4, -1, 2},
                               {3, 5, -4, -1, 2, -6},
                               {-7, 3, 5, -4, -1, 2, -6},
                               {-7, 8, 3, 5, -4, -1, 2, -6}}};
  return t;
}

}  // namespace snake_atlas::fixtures
