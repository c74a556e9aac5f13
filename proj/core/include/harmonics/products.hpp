#pragma once

#include "harmonics/harmonize.hpp"

namespace harmonics {

/// Decomposition of a harmonic representative on a product group:
/// harmonic = beta_fixed + sum_j factor_cocycles[j], where beta_fixed takes
/// values in the G-fixed subspace and factor_cocycles[j] is supported on the
/// j-th factor's generators with values invariant under the other factors.
struct ProductDecomposition {
  Cocycle beta_fixed;
  std::vector<Cocycle> factor_cocycles;  // stored on the full product group
  double residual = 0.0;                 // max generator defect of the sum
  double invariance_residual = 0.0;      // distance of beta_j values from V_j
  HarmonizeReport harmonize_report;
};

/// mu_1 x ... x mu_k on the product group.
FinMeasure product_measure(const GroupPtr& product_group, std::span<const FinMeasure> factors);

/// Vectors invariant under every factor except j (0-based).
Subspace complement_invariant_subspace(const UnitaryRep& rep, int j, const Tolerances& tol = {});

/// Harmonize under the product measure, split off the fixed part, and take
/// factor restrictions of the unfixed part.
ProductDecomposition decompose_product(const Cocycle& c, std::span<const FinMeasure> mus,
                                       const Tolerances& tol = {});

/// Dimension bookkeeping for the product decomposition:
///   total = sum_j factor_terms[j] + fixed_term,
/// where factor_terms[j] is the harmonic dimension of factor j acting on the
/// complement-invariant vectors orthogonal to the fixed subspace and
/// fixed_term is dim Z^1 of the trivial action on the fixed subspace.
struct ProductDimsBreakdown {
  int total = 0;
  std::vector<int> factor_terms;
  int fixed_term = 0;
  bool additivity_holds() const {
    int sum = fixed_term;
    for (int t : factor_terms) sum += t;
    return sum == total;
  }
};

ProductDimsBreakdown product_dimension_breakdown(const UnitaryRep& rep,
                                                 std::span<const FinMeasure> mus,
                                                 const Tolerances& tol = {});

}  // namespace harmonics
