#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "snake_atlas/forest.hpp"
#include "snake_atlas/laurent_poly.hpp"
#include "snake_atlas/qcalc.hpp"
#include "snake_atlas/signed_permutation.hpp"
#include "snake_atlas/tree.hpp"
#include "snake_atlas/triangles.hpp"
#include "snake_atlas/verify.hpp"

// JSON encodings. Every reader throws ParseError on malformed input.
namespace snake_atlas::json_io {

using nlohmann::json;

/// Parses text, turning syntax errors into ParseError.
json parse(const std::string& text);

/// [3,-1,2]
json to_json(const SignedPermutation& sigma);
SignedPermutation permutation_from_json(const json& j);

/// Word form: inorder labels with "e" for empty leaves, e.g. ["e",1,"e"].
json to_json(const IncBinTree& tree);
/// {"label":1,"left":"empty","right":{"leaf":2}}
json to_nested_json(const IncBinTree& tree);
/// Accepts either form.
IncBinTree tree_from_json(const json& j);

/// {"components":[{"color":"white","tree":{"label":1,"child":"empty"}}]}.
/// A root node carries its single subtree under "child"; the subtree uses the
/// nested tree form. On input a component tree may also be a word array
/// [root, ...inorder of the child].
json to_json(const IncForest& forest);
IncForest forest_from_json(const json& j);

/// {"min_exp":m,"coeffs":[...]}
json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const json& j);

/// {"t":[[q-coefficients of t^0], [... of t^1], ...]}
json to_json(const BiPoly& p);

json to_json_value(std::int64_t v);
json to_json_value(const LaurentPoly& p);

/// {"n":n,"rows":[{"r":r,"k":k,"value":v}, ...]} in row order, each row by
/// increasing k.
template <class V>
json to_json(const DoubleTriangle<V>& tri) {
  json rows = json::array();
  for (int r = 1; r <= tri.size(); ++r)
    for (int k = -r; k <= r; ++k)
      if (k != 0) rows.push_back({{"r", r}, {"k", k}, {"value", to_json_value(tri.at(r, k))}});
  return {{"n", tri.size()}, {"rows", rows}};
}

json to_json(const EntringerTriangle<>& tri);

/// elapsed_seconds is written only when `with_timing` is set, so that the
/// default output is identical from run to run.
json to_json(const CheckReport& report, bool with_timing);

}  // namespace snake_atlas::json_io
