// Command-line front end: triangles, families, polynomials, bijections and
// the verification harness. JSON goes to stdout, diagnostics to stderr.

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "snake_atlas/bijections.hpp"
#include "snake_atlas/errors.hpp"
#include "snake_atlas/families.hpp"
#include "snake_atlas/json_io.hpp"
#include "snake_atlas/qcalc.hpp"
#include "snake_atlas/tree_maps.hpp"
#include "snake_atlas/triangles.hpp"
#include "snake_atlas/verify.hpp"

using namespace snake_atlas;
using json_io::json;
using BigInt = boost::multiprecision::cpp_int;

namespace {

enum ExitCode {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kUnknownName = 3,
  kCeiling = 4,
  kMalformedInput = 5,
  kNotInDomain = 6,
  kInternal = 7,
};

// ---------------------------------------------------------------------------
// Value formatting shared by JSON and CSV output. Arbitrary-precision values
// are written as decimal strings, since JSON numbers cannot hold them.

json value_json(std::int64_t v) { return v; }
json value_json(const BigInt& v) { return v.str(); }
template <class Int>
json value_json(const BasicLaurentPoly<Int>& p) {
  json c = json::array();
  for (const auto& x : p.coeffs()) c.push_back(value_json(x));
  return {{"min_exp", p.min_exp()}, {"coeffs", c}};
}

std::string value_csv(std::int64_t v) { return std::to_string(v); }
std::string value_csv(const BigInt& v) { return v.str(); }
template <class Int>
std::string value_csv(const BasicLaurentPoly<Int>& p) {
  return "\"" + p.to_string() + "\"";
}

template <class V>
void print_triangle(const DoubleTriangle<V>& tri, bool csv) {
  if (csv) {
    // One line per row: r, then k = -r..-1, 1..r.
    for (int r = 1; r <= tri.size(); ++r) {
      std::cout << r;
      for (const V& v : tri.row(r)) std::cout << ',' << value_csv(v);
      std::cout << '\n';
    }
    return;
  }
  json rows = json::array();
  for (int r = 1; r <= tri.size(); ++r)
    for (int k = -r; k <= r; ++k)
      if (k != 0) rows.push_back({{"r", r}, {"k", k}, {"value", value_json(tri.at(r, k))}});
  std::cout << json{{"n", tri.size()}, {"rows", rows}}.dump() << '\n';
}

template <class Int>
void print_entringer(const EntringerTriangle<Int>& tri, bool csv) {
  json rows = json::array();
  for (int r = 1; r <= tri.size(); ++r) {
    if (csv) std::cout << r;
    for (int k = 1; k <= r; ++k) {
      if (csv)
        std::cout << ',' << value_csv(tri.at(r, k));
      else
        rows.push_back({{"r", r}, {"k", k}, {"value", value_json(tri.at(r, k))}});
    }
    if (csv) std::cout << '\n';
  }
  if (!csv) std::cout << json{{"n", tri.size()}, {"rows", rows}}.dump() << '\n';
}

template <class Int>
void emit_triangle(const std::string& kind, int n, bool csv) {
  if (kind == "entringer")
    print_entringer(entringer<Int>(n), csv);
  else if (kind == "arnold")
    print_triangle(arnold<Int>(n), csv);
  else if (kind == "arnold-poly")
    print_triangle(arnold_poly<Int>(n), csv);
  else if (kind == "gamma")
    print_triangle(at_one(gamma_arrays<Int>(n)), csv);
  else if (kind == "gamma-poly")
    print_triangle(gamma_arrays<Int>(n), csv);
  else
    throw UnknownName("unknown triangle kind '" + kind +
                      "' (expected entringer, arnold, arnold-poly, gamma or gamma-poly)");
}

// Runs `fast` and, if 64-bit arithmetic overflows, `exact` instead. Output is
// buffered so that a partial fast result never reaches stdout.
void with_fallback(const std::function<void()>& fast, const std::function<void()>& exact) {
  std::ostringstream buffer;
  auto* old = std::cout.rdbuf(buffer.rdbuf());
  try {
    fast();
  } catch (const std::overflow_error&) {
    buffer.str("");
    exact();
  } catch (...) {
    std::cout.rdbuf(old);
    throw;
  }
  std::cout.rdbuf(old);
  std::cout << buffer.str();
}

// ---------------------------------------------------------------------------
// Bijections

json encode(const SignedPermutation& s) { return json_io::to_json(s); }
json encode(const IncBinTree& t) { return json_io::to_json(t); }
json encode(const IncForest& f) { return json_io::to_json(f); }

struct MapEntry {
  std::function<json(const json&, Trace*)> forward;
  std::function<json(const json&, Trace*)> inverse;
};

SignedPermutation perm_in(const json& j) { return json_io::permutation_from_json(j); }
IncBinTree tree_in(const json& j) { return json_io::tree_from_json(j); }
IncForest forest_in(const json& j) { return json_io::forest_from_json(j); }

json psi_out(const PsiResult& r, Trace* trace) {
  if (trace) trace->push_back(r.case_tag);
  return encode(r.tree);
}

const std::map<std::string, MapEntry>& bijection_table() {
  static const std::map<std::string, MapEntry> table{
      {"phi1",
       {[](const json& j, Trace* t) { return encode(phi1(perm_in(j), t)); },
        [](const json& j, Trace* t) { return encode(phi1_inverse(forest_in(j), t)); }}},
      {"phi1-b",
       {[](const json& j, Trace* t) { return encode(phi1_B(perm_in(j), t)); },
        [](const json& j, Trace* t) { return encode(phi1_B_inverse(tree_in(j), t)); }}},
      {"phi1-d",
       {[](const json& j, Trace* t) { return encode(phi1_D(perm_in(j), t)); },
        [](const json& j, Trace* t) { return encode(phi1_D_inverse(tree_in(j), t)); }}},
      {"phi2",
       {[](const json& j, Trace* t) { return encode(phi2(perm_in(j), t)); },
        [](const json& j, Trace* t) { return encode(phi2_inverse(forest_in(j), t)); }}},
      {"phi2-b",
       {[](const json& j, Trace* t) { return encode(phi2_B(perm_in(j), t)); },
        [](const json& j, Trace* t) { return encode(phi2_B_inverse(tree_in(j), t)); }}},
      {"phi2-d",
       {[](const json& j, Trace* t) { return encode(phi2_D(perm_in(j), t)); },
        [](const json& j, Trace* t) { return encode(phi2_D_inverse(tree_in(j), t)); }}},
      {"zeta1",
       {[](const json& j, Trace*) { return encode(zeta1(perm_in(j))); },
        [](const json& j, Trace*) { return encode(zeta1_inverse(perm_in(j))); }}},
      {"zeta2",
       {[](const json& j, Trace*) { return encode(zeta2(perm_in(j))); },
        [](const json& j, Trace*) { return encode(zeta2_inverse(perm_in(j))); }}},
      {"mu",
       {[](const json& j, Trace*) { return encode(mu(tree_in(j))); },
        [](const json& j, Trace*) { return encode(mu_inverse(forest_in(j))); }}},
      {"gamma",
       {[](const json& j, Trace*) { return encode(gamma(tree_in(j))); },
        [](const json& j, Trace*) { return encode(gamma_inverse(perm_in(j))); }}},
      {"psi-star",
       {[](const json& j, Trace* t) { return psi_out(psi_star(tree_in(j)), t); },
        [](const json& j, Trace*) { return encode(psi_star_inverse(tree_in(j))); }}},
      {"psi-circ",
       {[](const json& j, Trace* t) { return psi_out(psi_circ(tree_in(j)), t); },
        [](const json& j, Trace*) { return encode(psi_circ_inverse(tree_in(j))); }}},
      {"psi-cap",
       {[](const json& j, Trace*) { return encode(psi_cap(tree_in(j))); },
        [](const json& j, Trace*) { return encode(psi_cap_inverse(tree_in(j))); }}},
  };
  return table;
}

std::string known_bijections() {
  std::string s;
  for (const auto& [name, entry] : bijection_table()) s += (s.empty() ? "" : ", ") + name;
  return s;
}

// ---------------------------------------------------------------------------
// Subcommand options

struct TriangleArgs {
  std::string kind;
  int n = 0;
  std::string format = "json";
};

struct FamilyArgs {
  std::string name;
  int n = 0;
  std::optional<int> first, last, gae;
  bool count = false;
};

struct PolyArgs {
  std::string which;
  int n = 0;
  bool q = false;
};

struct BijectionArgs {
  std::string name;
  std::string direction = "forward";
  std::string input;
  bool trace = false;
};

struct VerifyArgs {
  std::string target;
  std::optional<int> n_max;
  bool timings = false;
};

int run_triangle(const TriangleArgs& a) {
  const bool csv = a.format == "csv";
  with_fallback([&] { emit_triangle<std::int64_t>(a.kind, a.n, csv); },
                [&] { emit_triangle<BigInt>(a.kind, a.n, csv); });
  return kOk;
}

int run_family(const FamilyArgs& a) {
  const FamilyId f = parse_family(a.name);
  std::optional<Anchor> anchor;
  if (a.first) anchor = Anchor{Anchor::Kind::first, *a.first};
  if (a.last) anchor = Anchor{Anchor::Kind::last, *a.last};
  if (a.gae) anchor = Anchor{Anchor::Kind::gae, *a.gae};
  const auto members = enumerate_family(f, a.n, anchor);
  if (a.count) {
    std::cout << members.size() << '\n';
    return kOk;
  }
  json out = json::array();
  for (const auto& s : members) out.push_back(json_io::to_json(s));
  std::cout << out.dump() << '\n';
  return kOk;
}

template <class Int>
BasicLaurentPoly<Int> classical(const std::string& which, int n) {
  if (which == "P") return hoffman_P<Int>(n);
  if (which == "Q") return hoffman_Q<Int>(n);
  return hoffman_R<Int>(n);
}

int run_poly(const PolyArgs& a) {
  if (a.which != "P" && a.which != "Q" && a.which != "R")
    throw UnknownName("unknown polynomial '" + a.which + "' (expected P, Q or R)");
  if (a.n < 0) throw std::invalid_argument("n must be nonnegative");
  if (a.q) {
    const BiPoly p = a.which == "P" ? qpoly_P(a.n) : a.which == "Q" ? qpoly_Q(a.n) : qpoly_R(a.n);
    std::cout << json_io::to_json(p).dump() << '\n';
    return kOk;
  }
  with_fallback([&] { std::cout << value_json(classical<std::int64_t>(a.which, a.n)).dump() << '\n'; },
                [&] { std::cout << value_json(classical<BigInt>(a.which, a.n)).dump() << '\n'; });
  return kOk;
}

int run_bijection(const BijectionArgs& a) {
  const auto& table = bijection_table();
  const auto it = table.find(a.name);
  if (it == table.end())
    throw UnknownName("unknown bijection '" + a.name + "' (expected one of " + known_bijections() + ")");
  if (a.direction != "forward" && a.direction != "inverse")
    throw UnknownName("unknown direction '" + a.direction + "' (expected forward or inverse)");
  const json input = json_io::parse(a.input);
  Trace trace;
  const auto& fn = a.direction == "forward" ? it->second.forward : it->second.inverse;
  const json output = fn(input, a.trace ? &trace : nullptr);
  if (a.trace)
    std::cout << json{{"output", output}, {"trace", trace}}.dump() << '\n';
  else
    std::cout << output.dump() << '\n';
  return kOk;
}

int run_verify(const VerifyArgs& a) {
  std::vector<CheckReport> reports;
  if (a.target == "all")
    reports = run_all(a.n_max);
  else
    reports.push_back(run_check(a.target, a.n_max.value_or(default_depth(a.target))));
  json out = json::array();
  bool ok = true;
  for (const auto& r : reports) {
    out.push_back(json_io::to_json(r, a.timings));
    ok = ok && r.passed;
  }
  std::cout << out.dump(2) << '\n';
  return ok ? kOk : kCheckFailed;
}

int fail(int code, const std::string& kind, const std::string& message) {
  std::cerr << "snake_atlas: " << kind << ": " << message << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signed snakes, Arnold families and their bijections"};
  app.require_subcommand(1);

  TriangleArgs tri;
  auto* triangle = app.add_subcommand("triangle", "Print a number or polynomial triangle");
  triangle->add_option("--kind", tri.kind, "entringer, arnold, arnold-poly, gamma or gamma-poly")->required();
  triangle->add_option("--n", tri.n, "Number of rows")->required()->check(CLI::PositiveNumber);
  triangle->add_option("--format", tri.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  FamilyArgs fam;
  auto* family = app.add_subcommand("family", "Enumerate a family of signed permutations");
  family->add_option("--name", fam.name, "Family tag, e.g. rsi-d")->required();
  family->add_option("--n", fam.n, "Size")->required();
  auto* first = family->add_option("--first", fam.first, "Keep sigma_1 = value");
  auto* last = family->add_option("--last", fam.last, "Keep sigma_n = value");
  auto* gae = family->add_option("--gae", fam.gae, "Keep gae = value");
  first->excludes(last)->excludes(gae);
  last->excludes(gae);
  family->add_flag("--count", fam.count, "Print only the number of members");

  PolyArgs pol;
  auto* poly = app.add_subcommand("poly", "Print P_n, Q_n or R_n");
  poly->add_option("--which", pol.which, "P, Q or R")->required();
  poly->add_option("--n", pol.n, "Index")->required();
  poly->add_flag("--q", pol.q, "Print the q-analogue as a polynomial in q and t");

  BijectionArgs bij;
  auto* bijection = app.add_subcommand("bijection", "Apply a bijection to one object");
  bijection->add_option("--name", bij.name, "Map name")->required();
  bijection->add_option("--direction", bij.direction, "forward (default) or inverse");
  bijection->add_option("--input", bij.input, "Input object as JSON")->required();
  bijection->add_flag("--trace", bij.trace, "Also print the per-step case tags");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Run a registered check, or all of them");
  verify->add_option("target", ver.target, "Check id or 'all'")->required();
  verify->add_option("--n-max", ver.n_max, "Largest n to test (default: per-check depth)")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--timings", ver.timings, "Include elapsed seconds in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*triangle) return run_triangle(tri);
    if (*family) return run_family(fam);
    if (*poly) return run_poly(pol);
    if (*bijection) return run_bijection(bij);
    if (*verify) return run_verify(ver);
  } catch (const UnknownName& e) {
    return fail(kUnknownName, "unknown name", e.what());
  } catch (const CeilingExceeded& e) {
    return fail(kCeiling, "ceiling exceeded", e.what());
  } catch (const ParseError& e) {
    return fail(kMalformedInput, "malformed input", e.what());
  } catch (const DomainError& e) {
    std::string where = e.what();
    if (e.step() > 0) where += " (step " + std::to_string(e.step()) + ", case " + e.where() + ")";
    return fail(kNotInDomain, "input not in domain", where);
  } catch (const std::invalid_argument& e) {
    return fail(kUsage, "invalid argument", e.what());
  } catch (const std::exception& e) {
    return fail(kInternal, "internal error", e.what());
  }
  return kUsage;
}
