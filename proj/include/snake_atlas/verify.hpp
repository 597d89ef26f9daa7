#pragma once

#include <optional>
#include <string>
#include <vector>

namespace snake_atlas {

struct Counterexample {
  std::string inputs;
  std::string expected;
  std::string actual;
};

struct CheckReport {
  std::string check_id;
  std::vector<int> n_range;  // the values of n that were exercised
  bool passed = false;
  std::optional<Counterexample> counterexample;  // set iff !passed
  double elapsed_seconds = 0.0;
};

/// Registered check ids, in a fixed order.
const std::vector<std::string>& check_ids();

/// Depth used when none is given: 6 for exhaustive permutation checks, 7 for
/// trees and forests, 12 for pure recurrences, 8 for the table fixtures.
int default_depth(const std::string& check_id);

/// Runs one check for n = 1..n_max. Throws UnknownName for an unregistered id
/// and CeilingExceeded when n_max needs an enumeration above its ceiling.
CheckReport run_check(const std::string& check_id, int n_max);

/// Every registered check at its default depth (or at n_max when given),
/// in check_ids() order.
std::vector<CheckReport> run_all(std::optional<int> n_max = std::nullopt);

}  // namespace snake_atlas
