#pragma once

#include <stdexcept>
#include <string>

namespace mem {

// Base class for all toolbox errors so that callers (and the CLI) can map
// library failures to a single catch site.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the domain required by the operation (parameter
// constraint violated, point not interior, incompatible kernel/prior).
struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(what) {}
};

// Bracketing failed: no sign change found after the expansion search.
struct NoSignChange : Error {
  explicit NoSignChange(const std::string& what) : Error(what) {}
};

struct MaxIterations : Error {
  explicit MaxIterations(const std::string& what) : Error(what) {}
};

// A proximal subproblem could not certify a root bracket; signals
// inconsistent parameters rather than a numerical tolerance issue.
struct RootFailure : Error {
  explicit RootFailure(const std::string& what) : Error(what) {}
};

struct NonConvergence : Error {
  explicit NonConvergence(const std::string& what) : Error(what) {}
};

struct Unsupported : Error {
  explicit Unsupported(const std::string& what) : Error(what) {}
};

struct StepSizeError : Error {
  explicit StepSizeError(const std::string& what) : Error(what) {}
};

// Oracle-side failure to bracket a conjugate supremum; usually means the
// query point sits on or outside the effective domain boundary.
struct BracketFailure : Error {
  explicit BracketFailure(const std::string& what) : Error(what) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace mem
