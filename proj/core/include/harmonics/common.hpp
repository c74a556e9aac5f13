#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>

namespace harmonics {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Numeric thresholds shared across the library. Values are part of the
/// behavioural contract of the operations that use them; CLI flags may
/// override individual entries.
struct Tolerances {
  double mass = 1e-12;            // probability-mass bookkeeping
  double unitary = 1e-9;          // ||U*U - I||_max for generator matrices
  double relator = 1e-8;          // relator residuals for reps and cocycles
  double harmonic = 1e-8;         // center norm below which a cocycle is harmonic
  double rank_rel = 1e-9;         // relative SV threshold for ranks and kernels
  double solve_rank_rel = 1e-10;  // pseudoinverse truncation in the direct solve
  double subspace = 1e-10;        // orthonormality residual for subspace bases
  double dirichlet_residual = 1e-9;
};

namespace limits {
inline constexpr int radius_cap = 20;
inline constexpr std::size_t ball_limit = 1'000'000;
inline constexpr int gen_radius = 6;
inline constexpr int max_iterations = 100'000;
inline constexpr double iteration_tol = 1e-10;
}  // namespace limits

}  // namespace harmonics
