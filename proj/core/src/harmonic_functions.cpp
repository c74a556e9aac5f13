#include "harmonics/harmonic_functions.hpp"

#include <algorithm>
#include <set>

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

#include "linalg.hpp"

namespace harmonics {

namespace {

std::set<GroupElement> interior_of(const Group& g, const FinMeasure& mu,
                                   const std::vector<BallEntry>& domain, int radius) {
  std::set<GroupElement> members;
  for (const auto& [e, len] : domain) members.insert(e);
  std::set<GroupElement> interior;
  for (const auto& [e, len] : domain) {
    if (len >= radius) continue;
    bool inside = true;
    for (const auto& h : mu.support()) {
      if (!members.count(g.mul(e, h))) {
        inside = false;
        break;
      }
    }
    if (inside) interior.insert(e);
  }
  return interior;
}

}  // namespace

BallFunction dirichlet_solve(const FinMeasure& mu, int radius,
                             const std::map<GroupElement, double>& boundary_values,
                             const Tolerances& tol) {
  const Group& g = mu.group();
  BallFunction out;
  out.boundary_radius = radius;
  out.domain = g.cayley_ball(radius);

  auto interior = interior_of(g, mu, out.domain, radius);

  std::map<GroupElement, int> index;
  int n = 0;
  for (const auto& e : interior) index[e] = n++;

  for (const auto& [e, len] : out.domain) {
    if (interior.count(e)) continue;
    auto it = boundary_values.find(e);
    if (it == boundary_values.end())
      fail(ErrorKind::MissingBoundaryValue, "no boundary value for a non-interior element");
    out.values[e] = it->second;
  }

  if (n > 0) {
    std::vector<Eigen::Triplet<double>> triplets;
    RealVector rhs = RealVector::Zero(n);
    for (const auto& [e, row] : index) {
      triplets.emplace_back(row, row, 1.0);
      for (std::size_t k = 0; k < mu.size(); ++k) {
        GroupElement target = g.mul(e, mu.support()[k]);
        double w = mu.weights()[k];
        auto it = index.find(target);
        if (it != index.end())
          triplets.emplace_back(row, it->second, -w);
        else
          rhs(row) += w * out.values.at(target);
      }
    }
    Eigen::SparseMatrix<double> a(n, n);
    a.setFromTriplets(triplets.begin(), triplets.end());
    Eigen::SparseLU<Eigen::SparseMatrix<double>> solver;
    solver.compute(a);
    if (solver.info() != Eigen::Success)
      fail(ErrorKind::SingularSystem,
           "Dirichlet system is singular (is the measure support generating?)");
    RealVector f = solver.solve(rhs);
    if (solver.info() != Eigen::Success)
      fail(ErrorKind::SingularSystem, "Dirichlet solve failed");
    for (const auto& [e, row] : index) out.values[e] = f(row);
  }

  double residual = 0.0;
  for (const auto& e : interior) {
    double avg = 0.0;
    for (std::size_t k = 0; k < mu.size(); ++k)
      avg += mu.weights()[k] * out.values.at(g.mul(e, mu.support()[k]));
    residual = std::max(residual, std::abs(avg - out.values.at(e)));
  }
  out.residual = residual;
  if (residual > tol.dirichlet_residual)
    fail(ErrorKind::SingularSystem,
         "Dirichlet residual " + std::to_string(residual) + " above tolerance");
  return out;
}

HarmonicSpaceResult harmonic_function_space(const FinMeasure& mu, const Tolerances& tol) {
  const Group& g = mu.group();
  if (!g.finite())
    fail(ErrorKind::InvalidArgument, "harmonic_function_space needs a finite group");
  auto elems = g.elements();
  const int n = static_cast<int>(elems.size());
  std::map<GroupElement, int> index;
  for (int i = 0; i < n; ++i) index[elems[i]] = i;

  RealMatrix p = RealMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (std::size_t k = 0; k < mu.size(); ++k)
      p(i, index.at(g.mul(elems[i], mu.support()[k]))) += mu.weights()[k];

  HarmonicSpaceResult result;
  result.dimension =
      static_cast<int>(linalg::null_space_real(p - RealMatrix::Identity(n, n), tol.rank_rel).cols());
  result.admissible = validate_reasonable(mu).admissible();
  return result;
}

PhiTabulation lipschitz_from_cocycle(const Cocycle& c, const FinMeasure& mu, const Vector& v,
                                     int radius, const Tolerances& tol) {
  const Group& g = c.group();
  if (v.size() != c.dim())
    fail(ErrorKind::DimensionMismatch, "vector dimension does not match the representation");
  if (v.norm() == 0.0) fail(ErrorKind::InvalidArgument, "direction vector must be nonzero");
  auto center = mu_center(c, mu, tol.harmonic);
  if (!center.harmonic)
    fail(ErrorKind::NotHarmonic,
         "cocycle is not mu-harmonic (center norm " + std::to_string(center.norm) + ")");

  PhiTabulation out;
  out.values.boundary_radius = radius;
  out.values.domain = g.cayley_ball(radius);
  for (const auto& [e, len] : out.values.domain)
    out.values.values[e] = real_inner(c.evaluate(e), v);

  auto& cert = out.certificate;
  for (int i = 0; i < g.generator_count(); ++i)
    cert.generator_norm_max = std::max(cert.generator_norm_max, c.generator_value(i).norm());
  cert.analytic_bound = cert.generator_norm_max * v.norm();
  cert.phi_at_identity = out.values.values.at(g.identity());

  auto interior = interior_of(g, mu, out.values.domain, radius);
  for (const auto& e : interior) {
    double avg = 0.0;
    for (std::size_t k = 0; k < mu.size(); ++k)
      avg += mu.weights()[k] * out.values.values.at(g.mul(e, mu.support()[k]));
    cert.max_harmonic_residual =
        std::max(cert.max_harmonic_residual, std::abs(avg - out.values.values.at(e)));
  }
  out.values.residual = cert.max_harmonic_residual;

  for (const auto& [e, len] : out.values.domain) {
    for (int i = 0; i < g.generator_count(); ++i) {
      for (int sign : {+1, -1}) {
        GroupElement s = g.generator(i);
        GroupElement next = g.mul(e, sign > 0 ? s : g.inv(s));
        auto it = out.values.values.find(next);
        if (it == out.values.values.end()) continue;
        cert.empirical_constant = std::max(
            cert.empirical_constant, std::abs(it->second - out.values.values.at(e)));
      }
    }
  }

  cert.pass = cert.max_harmonic_residual < tol.harmonic &&
              cert.empirical_constant <= cert.analytic_bound + 1e-9 &&
              std::abs(cert.phi_at_identity) < 1e-12;
  return out;
}

}  // namespace harmonics
