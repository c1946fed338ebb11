#pragma once

#include <stdexcept>
#include <string>

namespace dwsolve {

// Evaluation landed on (or within tolerance of) a zero of a trigonometric
// bracket that is about to be inverted, or on a coalescing-rapidity zero of
// the prefactor D.  The caller should switch to a limiting procedure (e.g.
// the homogeneous-limit path) instead of dividing.
struct PoleError : std::runtime_error {
  explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

// A specialization that an operation requires (corner condition, row
// coincidence condition, ...) does not hold for the supplied inputs.
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// The n^L transfer-matrix state space exceeds the configured budget.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// DFT degree extraction retained a coefficient at the Nyquist edge; the
// measured span may be aliased and must not be trusted.
struct AliasError : std::runtime_error {
  explicit AliasError(const std::string& what) : std::runtime_error(what) {}
};

// Command-line usage problem (maps to exit code 64 in the CLI).
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dwsolve
