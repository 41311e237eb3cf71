#pragma once

// Invariant suites over a finite tau-system or the affine continuum grid.
// Every check reports its worst residual; count-type checks (group laws,
// oracle agreement) report the number of failures against tolerance 0.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tauh/affine.hpp"
#include "tauh/catalog.hpp"
#include "tauh/semidirect.hpp"

namespace tauh {

struct CheckResult {
  std::string name;
  double residual = 0;
  double tolerance = 0;
  bool passed = true;
  std::int64_t cases = 0;
};

struct VerifyOptions {
  std::string suite = "all";  // all | group | duality | plancherel | parseval | inversion
  std::int64_t trials = 100;
  std::uint64_t seed = 0;
  // Replaces every numeric tolerance. Count checks and the continuum
  // refinement ratio keep their own thresholds.
  std::optional<double> tol;
};

bool is_known_suite(const std::string& suite);

// Sorted by check name. Empty when trials == 0.
std::vector<CheckResult> verify_finite(const TauSystem& sys,
                                       const VerifyOptions& opts,
                                       const DualLaw* oracle = nullptr);
std::vector<CheckResult> verify_continuum(const affine::AffineGrid& grid,
                                          const VerifyOptions& opts);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace tauh
