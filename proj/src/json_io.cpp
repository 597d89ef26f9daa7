#include "snake_atlas/json_io.hpp"

#include "snake_atlas/errors.hpp"

namespace snake_atlas::json_io {

namespace {

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer, got " + j.dump());
  return j.get<int>();
}

// Inorder word of a nested node, 0 for empty leaves.
void nested_word(const json& j, Word& out) {
  if (j.is_string()) {
    if (j.get<std::string>() != "empty") throw ParseError("expected \"empty\", got " + j.dump());
    out.push_back(0);
    return;
  }
  if (!j.is_object()) throw ParseError("tree node must be an object or \"empty\", got " + j.dump());
  if (j.contains("leaf")) {
    if (j.size() != 1) throw ParseError("a leaf node has only the key \"leaf\": " + j.dump());
    out.push_back(as_int(j["leaf"], "leaf"));
    return;
  }
  if (!j.contains("label") || !j.contains("left") || !j.contains("right") || j.size() != 3)
    throw ParseError("internal node needs exactly label, left and right: " + j.dump());
  nested_word(j["left"], out);
  out.push_back(as_int(j["label"], "label"));
  nested_word(j["right"], out);
}

Word word_from_array(const json& j) {
  Word w;
  for (const auto& x : j) {
    if (x.is_string() && x.get<std::string>() == "e")
      w.push_back(0);
    else
      w.push_back(as_int(x, "word letter"));
  }
  return w;
}

json nested(const NodeArena& arena, int id) {
  const Node& v = arena.at(id);
  if (v.is_empty()) return "empty";
  if (!v.has_children()) return {{"leaf", v.label}};
  return {{"label", v.label}, {"left", nested(arena, v.left)}, {"right", nested(arena, v.right)}};
}

}  // namespace

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

json to_json(const SignedPermutation& sigma) { return sigma.window(); }

SignedPermutation permutation_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("a signed permutation is a JSON array, got " + j.dump());
  Word w;
  for (const auto& x : j) w.push_back(as_int(x, "permutation letter"));
  try {
    return SignedPermutation(std::move(w));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("not a signed permutation: ") + e.what());
  }
}

json to_json(const IncBinTree& tree) {
  json out = json::array();
  for (int x : tree.inorder_word()) {
    if (x == 0)
      out.push_back("e");
    else
      out.push_back(x);
  }
  return out;
}

json to_nested_json(const IncBinTree& tree) { return nested(tree.arena(), tree.root()); }

IncBinTree tree_from_json(const json& j) {
  Word w;
  if (j.is_array())
    w = word_from_array(j);
  else
    nested_word(j, w);
  try {
    return IncBinTree::from_word(w);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("not an increasing binary tree: ") + e.what());
  }
}

json to_json(const IncForest& forest) {
  json comps = json::array();
  for (const ForestComponent& c : forest.components()) {
    const Node& root = forest.node(c.root);
    comps.push_back({{"color", c.color == RootColor::white ? "white" : "black"},
                     {"tree", {{"label", root.label}, {"child", nested(forest.arena(), root.right)}}}});
  }
  return {{"components", comps}};
}

IncForest forest_from_json(const json& j) {
  if (!j.is_object() || !j.contains("components") || !j["components"].is_array())
    throw ParseError("a forest is {\"components\": [...]}, got " + j.dump());
  std::vector<std::pair<RootColor, Word>> parts;
  for (const auto& c : j["components"]) {
    if (!c.is_object() || !c.contains("color") || !c.contains("tree"))
      throw ParseError("a component needs color and tree: " + c.dump());
    const json& color = c["color"];
    if (color != "white" && color != "black") throw ParseError("color must be white or black, got " + color.dump());
    const json& t = c["tree"];
    Word w;
    if (t.is_array()) {
      w = word_from_array(t);
    } else {
      if (!t.is_object() || !t.contains("label") || !t.contains("child") || t.size() != 2)
        throw ParseError("a component root needs exactly label and child: " + t.dump());
      w.push_back(as_int(t["label"], "root label"));
      nested_word(t["child"], w);
    }
    parts.emplace_back(color == "white" ? RootColor::white : RootColor::black, std::move(w));
  }
  try {
    return IncForest::from_words(parts);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("not an increasing forest: ") + e.what());
  }
}

json to_json(const LaurentPoly& p) { return {{"min_exp", p.min_exp()}, {"coeffs", p.coeffs()}}; }

LaurentPoly poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("min_exp") || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw ParseError("a polynomial is {\"min_exp\": m, \"coeffs\": [...]}, got " + j.dump());
  std::vector<std::int64_t> c;
  for (const auto& x : j["coeffs"]) {
    if (!x.is_number_integer()) throw ParseError("coefficients must be integers, got " + x.dump());
    c.push_back(x.get<std::int64_t>());
  }
  return LaurentPoly(as_int(j["min_exp"], "min_exp"), std::move(c));
}

json to_json(const BiPoly& p) {
  json t = json::array();
  for (const QPoly& c : p.t_coeffs()) {
    std::vector<std::int64_t> dense;
    if (!c.is_zero())
      for (int e = 0; e <= c.max_exp(); ++e) dense.push_back(c.coeff(e));
    t.push_back(dense);
  }
  return {{"t", t}};
}

json to_json(const EntringerTriangle<>& tri) {
  json rows = json::array();
  for (int r = 1; r <= tri.size(); ++r)
    for (int k = 1; k <= r; ++k) rows.push_back({{"r", r}, {"k", k}, {"value", tri.at(r, k)}});
  return {{"n", tri.size()}, {"rows", rows}};
}

json to_json_value(std::int64_t v) { return v; }
json to_json_value(const LaurentPoly& p) { return to_json(p); }

json to_json(const CheckReport& report, bool with_timing) {
  json out{{"check_id", report.check_id},
           {"n_range", report.n_range},
           {"status", report.passed ? "pass" : "fail"},
           {"counterexample", nullptr}};
  if (report.counterexample)
    out["counterexample"] = {{"inputs", report.counterexample->inputs},
                             {"expected", report.counterexample->expected},
                             {"actual", report.counterexample->actual}};
  if (with_timing) out["elapsed_seconds"] = report.elapsed_seconds;
  return out;
}

}  // namespace snake_atlas::json_io
