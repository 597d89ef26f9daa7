#include <cstdlib>

#include "doctest.h"
#include "snake_atlas/errors.hpp"
#include "snake_atlas/verify.hpp"

using namespace snake_atlas;

TEST_CASE("registry lists every check once") {
  const auto& ids = check_ids();
  CHECK(ids.size() == 25);
  CHECK(ids.front() == "eq-1");
  CHECK(ids.back() == "tables-fixtures");
  CHECK(default_depth("thm-1-1") == 6);
  CHECK(default_depth("eq-13") == 7);
  CHECK(default_depth("eq-2") == 12);
}

TEST_CASE("unknown ids and bad depths are rejected") {
  CHECK_THROWS_AS(run_check("thm-9-9", 3), UnknownName);
  CHECK_THROWS_AS(default_depth("nope"), UnknownName);
  CHECK_THROWS_AS(run_check("eq-1", 0), std::invalid_argument);
  CHECK_THROWS_AS(run_check("thm-1-1", 20), CeilingExceeded);
}

TEST_CASE("single-cell and small runs") {
  const CheckReport r = run_check("eq-1", 1);
  CHECK(r.passed);
  CHECK(r.n_range == std::vector<int>{1});
  CHECK_FALSE(r.counterexample.has_value());
  CHECK(run_check("tables-fixtures", 6).passed);
  CHECK(run_check("thm-1-1", 6).passed);
}

TEST_CASE("every check passes at its default depth") {
  for (const CheckReport& r : run_all()) {
    CAPTURE(r.check_id);
    if (r.counterexample)
      MESSAGE(r.counterexample->inputs << " expected " << r.counterexample->expected << " got "
                                       << r.counterexample->actual);
    CHECK(r.passed);
    CHECK(r.n_range.back() == default_depth(r.check_id));
  }
}
