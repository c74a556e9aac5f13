#include "linalg.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace harmonics::linalg {

namespace {

// Inputs here are assembled from products of unitaries, so their natural
// scale is ~1; flooring the cutoff at rel_tol keeps numerically-zero
// matrices (entries ~1e-16 of roundoff) from acquiring spurious rank.
double sv_cutoff(double top, double rel_tol) { return rel_tol * std::max(top, 1.0); }

template <class Mat>
Mat null_space_impl(const Mat& a, double rel_tol) {
  const auto cols = a.cols();
  if (a.rows() == 0 || cols == 0) {
    Mat id = Mat::Identity(cols, cols);
    return id;
  }
  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double cutoff = sv.size() > 0 ? sv_cutoff(sv(0), rel_tol) : 0.0;
  Eigen::Index keep_from = sv.size();
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) <= cutoff) {
      keep_from = i;
      break;
    }
  }
  const Eigen::Index nullity = cols - keep_from;
  return svd.matrixV().rightCols(nullity);
}

}  // namespace

int rank(const Matrix& a, double rel_tol) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(a);
  const auto& sv = svd.singularValues();
  double cutoff = sv_cutoff(sv(0), rel_tol);
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++r;
  return r;
}

Matrix null_space(const Matrix& a, double rel_tol) { return null_space_impl(a, rel_tol); }

RealMatrix null_space_real(const RealMatrix& a, double rel_tol) {
  return null_space_impl(a, rel_tol);
}

Vector lstsq_min_norm(const Matrix& a, const Vector& b, double rel_tol) {
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(rel_tol);
  return svd.solve(b);
}

double operator_norm(const Matrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues()(0);
}

}  // namespace harmonics::linalg
