#pragma once

#include <stdexcept>
#include <string>

namespace snake_atlas {

/// Base class for every error raised by the library.
class AtlasError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input lies outside the domain of a map or a family.
///
/// `step` is the construction step at which the violation was detected
/// (0 when the check is not step-based); `where` names the failing case.
class DomainError : public AtlasError {
 public:
  DomainError(const std::string& what, int step = 0, std::string where = {})
      : AtlasError(what), step_(step), where_(std::move(where)) {}

  int step() const noexcept { return step_; }
  const std::string& where() const noexcept { return where_; }

 private:
  int step_;
  std::string where_;
};

/// An exhaustive enumeration was requested above its configured ceiling.
class CeilingExceeded : public AtlasError {
 public:
  CeilingExceeded(int n, int ceiling)
      : AtlasError("n = " + std::to_string(n) + " exceeds the enumeration ceiling " +
                   std::to_string(ceiling) + " (override with SNAKE_ATLAS_MAX_N)"),
        n_(n),
        ceiling_(ceiling) {}

  int n() const noexcept { return n_; }
  int ceiling() const noexcept { return ceiling_; }

 private:
  int n_;
  int ceiling_;
};

/// A family, bijection, check or triangle name that is not registered.
class UnknownName : public AtlasError {
 public:
  using AtlasError::AtlasError;
};

/// Structurally malformed serialized input.
class ParseError : public AtlasError {
 public:
  using AtlasError::AtlasError;
};

}  // namespace snake_atlas
