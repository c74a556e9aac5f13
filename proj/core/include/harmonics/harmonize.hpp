#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "harmonics/energy.hpp"

namespace harmonics {

/// Real dimensions of the cocycle spaces (complex counts also reported for
/// complex-field reps). In finite dimensions B^1 is closed, so reduced and
/// unreduced cohomology coincide and dim_harmonic = dim_h1 for admissible
/// measures.
struct CohomologyDims {
  int dim_z1 = 0;
  int dim_b1 = 0;
  int dim_h1 = 0;
  std::optional<int> dim_harmonic;  // present when computed with a measure

  std::optional<int> dim_z1_complex;
  std::optional<int> dim_b1_complex;
  std::optional<int> dim_h1_complex;
  std::optional<int> dim_harmonic_complex;

  /// ker(I - pi(mu)) strictly contains the fixed subspace: the measure does
  /// not see the whole group, so harmonic representatives are not unique.
  bool kernel_exceeds_fixed = false;
  TriState measure_generates = TriState::Unknown;
};

struct HarmonizeReport {
  Cocycle harmonic;
  Vector shift;  // v with harmonic = input + coboundary(v)
  double center_residual = 0.0;
  double energy_before = 0.0;
  double energy_after = 0.0;
  std::string method;
  int iterations = 0;
  std::vector<double> energy_trace;
  bool converged = true;
  bool kernel_exceeds_fixed = false;
  CohomologyDims dims;
};

/// Thrown by the iterative harmonizer; carries the last iterate.
class NoConvergenceError : public Error {
 public:
  NoConvergenceError(std::string message, HarmonizeReport partial)
      : Error(ErrorKind::NoConvergence, std::move(message)), report(std::move(partial)) {}
  HarmonizeReport report;
};

/// Called between iterations; return false to cancel the solve.
using IterationCallback = std::function<bool(int iteration, double center_norm)>;

/// The unique mu-harmonic representative of [c] via the linear solve
/// (I - pi(mu)) v = mu-center(c), using the minimal-norm pseudoinverse
/// solution. Requires mu symmetric with generating support (definitively
/// non-generating supports are rejected; undecided ones proceed and the
/// report carries the kernel warning).
HarmonizeReport harmonize_direct(const Cocycle& c, const FinMeasure& mu,
                                 const Tolerances& tol = {});

/// The energy-decrement iteration v <- v + center(c shifted by v), i.e.
/// v_{n+1} = pi(mu) v_n + mu-center(c). Energy is checked to be
/// non-increasing at every step; stops when the center norm drops below
/// `iter_tol`. Throws NoConvergenceError after max_iter.
HarmonizeReport harmonize_iterative(const Cocycle& c, const FinMeasure& mu,
                                    double iter_tol = limits::iteration_tol,
                                    int max_iter = limits::max_iterations,
                                    const IterationCallback& progress = {},
                                    const Tolerances& tol = {});

CohomologyDims h1_dimensions(const UnitaryRep& rep, const FinMeasure& mu,
                             const Tolerances& tol = {});
/// Linear-algebra part only (Z^1, B^1, H^1); no measure involved.
CohomologyDims h1_dimensions(const UnitaryRep& rep, const Tolerances& tol = {});

// --- Z^1 machinery (shared with products, induction and the self test) ---

/// b(g) as a linear map of the stacked generator values: b(g) = E_g x,
/// where x is the concatenation of the generator values.
Matrix extension_matrix(const UnitaryRep& rep, const GroupElement& g);
Matrix extension_matrix_of_word(const UnitaryRep& rep, std::span<const int> letters);

/// Stacked linear constraints whose kernel is Z^1 (telescoped relators, or
/// the exhaustive pair constraints for kinds without stored relators).
Matrix cocycle_constraint_matrix(const UnitaryRep& rep);

/// Stacked (pi(s) - I) over generators: the coboundary map.
Matrix coboundary_matrix(const UnitaryRep& rep);

/// sum_g mu(g) E_g; its kernel intersected with Z^1 is the harmonic space.
Matrix center_matrix(const UnitaryRep& rep, const FinMeasure& mu);

/// Orthonormal basis of Z^1 as stacked generator-value vectors. Real-valued
/// entries for real-field reps.
Matrix z1_basis(const UnitaryRep& rep, const Tolerances& tol = {});

Cocycle cocycle_from_stacked(const UnitaryRep& rep, const Vector& stacked,
                             const Tolerances& tol = {});

}  // namespace harmonics
