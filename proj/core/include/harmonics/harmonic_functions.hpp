#pragma once

#include <map>

#include "harmonics/cocycle.hpp"
#include "harmonics/energy.hpp"

namespace harmonics {

/// A real-valued function tabulated on a Cayley ball. Interior elements are
/// those whose full mu-neighbourhood stays inside the domain; after a solve
/// they satisfy the mu-mean-value property within the Dirichlet tolerance.
struct BallFunction {
  std::vector<BallEntry> domain;
  std::map<GroupElement, double> values;
  int boundary_radius = 0;
  double residual = 0.0;  // max interior mean-value defect
};

/// Solves f(g) = sum_h mu(h) f(gh) on the interior of the radius ball with
/// the given boundary values on all non-interior domain elements.
BallFunction dirichlet_solve(const FinMeasure& mu, int radius,
                             const std::map<GroupElement, double>& boundary_values,
                             const Tolerances& tol = {});

struct HarmonicSpaceResult {
  int dimension = 0;  // 1-eigenspace of the Markov operator
  bool admissible = false;
};

/// Dimension of { f : G -> R | f = P_mu f } for a finite group; equals 1
/// exactly when the walk is irreducible (admissible mu).
HarmonicSpaceResult harmonic_function_space(const FinMeasure& mu, const Tolerances& tol = {});

struct LipschitzCertificate {
  double generator_norm_max = 0.0;  // L = max_s ||b(s)||
  double analytic_bound = 0.0;      // L ||v||
  double empirical_constant = 0.0;  // max Cayley-edge increment
  double max_harmonic_residual = 0.0;
  double phi_at_identity = 0.0;
  bool pass = false;
};

struct PhiTabulation {
  BallFunction values;
  LipschitzCertificate certificate;
};

/// phi_v(g) = Re<b(g), v> tabulated on the radius ball, with a certificate
/// that it is mu-harmonic on interior points and Lipschitz with constant at
/// most L ||v|| along Cayley edges. Requires a mu-harmonic cocycle and a
/// nonzero v.
PhiTabulation lipschitz_from_cocycle(const Cocycle& c, const FinMeasure& mu, const Vector& v,
                                     int radius, const Tolerances& tol = {});

}  // namespace harmonics
