#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "harmonics/harmonic_functions.hpp"
#include "harmonics/induction.hpp"
#include "harmonics/products.hpp"

namespace harmonics {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string details;
  double millis = 0.0;
};

struct SelftestReport {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  bool all_passed = false;
  double total_millis = 0.0;
};

/// Runs the full property suite: the energy-lemma identities, harmonic
/// uniqueness and minimization, monotone descent, the finite/infinite
/// dichotomy, product decomposition, induction transfer, the compact case,
/// the phi_v certificates, and the per-module invariants. Deterministic for
/// a fixed seed.
SelftestReport run_selftest(std::uint64_t seed = 0);

}  // namespace harmonics
