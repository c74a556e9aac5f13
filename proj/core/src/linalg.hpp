#pragma once

// Internal dense linear-algebra helpers (SVD-based ranks, kernels and
// minimal-norm solves). Deterministic: Eigen's JacobiSVD has no randomness.

#include "harmonics/common.hpp"

namespace harmonics::linalg {

int rank(const Matrix& a, double rel_tol);

/// Orthonormal basis of ker(a); dim(a.cols()) x nullity. Rows may be zero.
Matrix null_space(const Matrix& a, double rel_tol);
RealMatrix null_space_real(const RealMatrix& a, double rel_tol);

/// Minimal-norm least-squares solution of a x = b (SVD pseudoinverse with
/// relative truncation of small singular values).
Vector lstsq_min_norm(const Matrix& a, const Vector& b, double rel_tol);

double operator_norm(const Matrix& a);

}  // namespace harmonics::linalg
