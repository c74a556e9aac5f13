#include "harmonics/harmonize.hpp"

#include <algorithm>

#include "linalg.hpp"

namespace harmonics {

namespace {

int nullity(const Matrix& a, bool real_field, double rel_tol) {
  if (real_field) {
    RealMatrix ar = a.real();
    return static_cast<int>(linalg::null_space_real(ar, rel_tol).cols());
  }
  return static_cast<int>(linalg::null_space(a, rel_tol).cols());
}

int rank_of(const Matrix& a, bool real_field, double rel_tol) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  if (real_field) {
    RealMatrix ar = a.real();
    return static_cast<int>(ar.cols()) -
           static_cast<int>(linalg::null_space_real(ar, rel_tol).cols());
  }
  return linalg::rank(a, rel_tol);
}

void append_rows(Matrix& dst, const Matrix& rows) {
  Matrix merged(dst.rows() + rows.rows(), rows.cols());
  if (dst.rows() > 0) merged.topRows(dst.rows()) = dst;
  merged.bottomRows(rows.rows()) = rows;
  dst = std::move(merged);
}

}  // namespace

Matrix extension_matrix_of_word(const UnitaryRep& rep, std::span<const int> letters) {
  const int d = rep.dim();
  const int k = rep.group().generator_count();
  Matrix e = Matrix::Zero(d, static_cast<Eigen::Index>(k) * d);
  Matrix p = Matrix::Identity(d, d);
  for (int l : letters) {
    int i = std::abs(l) - 1;
    const Matrix& u = rep.generator_matrix(i);
    if (l > 0) {
      e.middleCols(static_cast<Eigen::Index>(i) * d, d) += p;
      p = p * u;
    } else {
      p = p * u.adjoint();
      e.middleCols(static_cast<Eigen::Index>(i) * d, d) -= p;
    }
  }
  return e;
}

Matrix extension_matrix(const UnitaryRep& rep, const GroupElement& g) {
  auto w = rep.group().canonical_word(g);
  return extension_matrix_of_word(rep, w);
}

Matrix cocycle_constraint_matrix(const UnitaryRep& rep) {
  const Group& g = rep.group();
  const int d = rep.dim();
  const int cols = g.generator_count() * d;
  Matrix rows(0, cols);

  for (const auto& rel : g.relators()) append_rows(rows, extension_matrix_of_word(rep, rel));

  if (g.kind() == GroupKind::FinitePerm) {
    // pair constraints b(g x) = pi(g) b(x) + b(g) for x in S u S^-1
    auto elems = g.elements();
    std::map<GroupElement, Matrix> ext;
    for (const auto& e : elems) ext.emplace(e, extension_matrix(rep, e));
    for (const auto& e : elems) {
      Matrix pg = rep.evaluate(e);
      for (int i = 1; i <= g.generator_count(); ++i) {
        for (int sign : {+1, -1}) {
          std::vector<int> letter{sign * i};
          GroupElement x = g.word_element(letter);
          GroupElement ex = g.mul(e, x);
          Matrix row = ext.at(ex) - pg * extension_matrix_of_word(rep, letter) - ext.at(e);
          append_rows(rows, row);
        }
      }
    }
  } else if (g.kind() == GroupKind::Product) {
    for (int j = 0; j < g.factor_count(); ++j) {
      if (!g.factor(j)->relators_by_exhaustion()) continue;
      auto sub_rep = restrict_rep_to_factor(rep, j);
      Matrix sub = cocycle_constraint_matrix(sub_rep);
      Matrix placed = Matrix::Zero(sub.rows(), cols);
      placed.middleCols(static_cast<Eigen::Index>(g.generator_offset(j)) * d, sub.cols()) = sub;
      append_rows(rows, placed);
    }
  }
  return rows;
}

Matrix coboundary_matrix(const UnitaryRep& rep) {
  const int d = rep.dim();
  const int k = rep.group().generator_count();
  Matrix m(static_cast<Eigen::Index>(k) * d, d);
  for (int i = 0; i < k; ++i)
    m.middleRows(static_cast<Eigen::Index>(i) * d, d) =
        rep.generator_matrix(i) - Matrix::Identity(d, d);
  return m;
}

Matrix center_matrix(const UnitaryRep& rep, const FinMeasure& mu) {
  const int d = rep.dim();
  Matrix c = Matrix::Zero(d, static_cast<Eigen::Index>(rep.group().generator_count()) * d);
  for (std::size_t i = 0; i < mu.size(); ++i)
    c += mu.weights()[i] * extension_matrix(rep, mu.support()[i]);
  return c;
}

Matrix z1_basis(const UnitaryRep& rep, const Tolerances& tol) {
  Matrix constraints = cocycle_constraint_matrix(rep);
  if (rep.field() == Field::Real) {
    RealMatrix cr = constraints.real();
    return linalg::null_space_real(cr, tol.rank_rel).cast<Complex>();
  }
  return linalg::null_space(constraints, tol.rank_rel);
}

Cocycle cocycle_from_stacked(const UnitaryRep& rep, const Vector& stacked,
                             const Tolerances& tol) {
  const int d = rep.dim();
  const int k = rep.group().generator_count();
  if (stacked.size() != static_cast<Eigen::Index>(k) * d)
    fail(ErrorKind::DimensionMismatch, "stacked vector has the wrong size");
  std::vector<Vector> values;
  for (int i = 0; i < k; ++i) values.push_back(stacked.segment(static_cast<Eigen::Index>(i) * d, d));
  return Cocycle::from_generator_values(rep, std::move(values), tol);
}

// ---------------------------------------------------------------------------

namespace {

struct MeasureContext {
  std::vector<Matrix> pi_g;     // pi(g) per support element
  std::vector<Vector> beta_g;   // b(g) per support element
  Matrix pi_mu;
  Vector mu_beta;

  MeasureContext(const Cocycle& c, const FinMeasure& mu) {
    const int d = c.dim();
    pi_mu = Matrix::Zero(d, d);
    mu_beta = Vector::Zero(d);
    for (std::size_t i = 0; i < mu.size(); ++i) {
      pi_g.push_back(c.rep().evaluate(mu.support()[i]));
      beta_g.push_back(c.evaluate(mu.support()[i]));
      pi_mu += mu.weights()[i] * pi_g.back();
      mu_beta += mu.weights()[i] * beta_g.back();
    }
  }

  double energy_at(const FinMeasure& mu, const Vector& v) const {
    double e = 0.0;
    for (std::size_t i = 0; i < pi_g.size(); ++i)
      e += mu.weights()[i] * (pi_g[i] * v - v + beta_g[i]).squaredNorm();
    return e;
  }

  Vector center_at(const Vector& v) const { return mu_beta + pi_mu * v - v; }
};

// nullity(I - pi(mu)) beyond the fixed subspace signals a measure that does
// not see the whole group
bool kernel_excess(const UnitaryRep& rep, const Matrix& pi_mu, const Tolerances& tol) {
  const int d = rep.dim();
  Matrix a = Matrix::Identity(d, d) - pi_mu;
  int kernel_dim = nullity(a, rep.field() == Field::Real, tol.rank_rel);
  return kernel_dim > rep.fixed_subspace(tol).dim();
}

void check_preconditions(const Cocycle& c, const FinMeasure& mu) {
  if (mu.group_ptr()->spec().kind != c.group().spec().kind)
    fail(ErrorKind::KindMismatch, "measure lives on a different group");
  if (!is_symmetric(mu)) fail(ErrorKind::NotSymmetric, "harmonize requires a symmetric measure");
  if (support_generates(mu) == TriState::No)
    fail(ErrorKind::InvalidMeasure,
         "measure support does not generate the group; harmonic representatives are not "
         "determined");
}

Cocycle shifted_cocycle(const Cocycle& c, const Vector& v, const Tolerances& tol) {
  std::vector<Vector> values;
  for (int i = 0; i < c.group().generator_count(); ++i)
    values.push_back(c.generator_value(i) + c.rep().generator_matrix(i) * v - v);
  return Cocycle::from_generator_values(c.rep(), std::move(values), tol);
}

}  // namespace

HarmonizeReport harmonize_direct(const Cocycle& c, const FinMeasure& mu, const Tolerances& tol) {
  check_preconditions(c, mu);
  MeasureContext ctx(c, mu);
  const int d = c.dim();

  Matrix a = Matrix::Identity(d, d) - ctx.pi_mu;
  Vector v = linalg::lstsq_min_norm(a, ctx.mu_beta, tol.solve_rank_rel);

  Cocycle harmonic = shifted_cocycle(c, v, tol);
  double residual = ctx.center_at(v).norm();

  HarmonizeReport report{.harmonic = harmonic,
                         .shift = v,
                         .center_residual = residual,
                         .energy_before = ctx.energy_at(mu, Vector::Zero(d)),
                         .energy_after = ctx.energy_at(mu, v),
                         .method = "direct",
                         .iterations = 0,
                         .energy_trace = {},
                         .converged = true,
                         .kernel_exceeds_fixed = kernel_excess(c.rep(), ctx.pi_mu, tol),
                         .dims = h1_dimensions(c.rep(), mu, tol)};
  report.energy_trace = {report.energy_before, report.energy_after};
  if (residual > tol.harmonic)
    fail(ErrorKind::InconsistentSystem,
         "harmonic center residual " + std::to_string(residual) +
             " after the direct solve; the center has a component outside the range of "
             "I - pi(mu), which is impossible for a symmetric measure");
  return report;
}

HarmonizeReport harmonize_iterative(const Cocycle& c, const FinMeasure& mu, double iter_tol,
                                    int max_iter, const IterationCallback& progress,
                                    const Tolerances& tol) {
  check_preconditions(c, mu);
  if (iter_tol <= 0) fail(ErrorKind::InvalidArgument, "iteration tolerance must be positive");
  MeasureContext ctx(c, mu);
  const int d = c.dim();

  Vector v = Vector::Zero(d);
  std::vector<double> trace;
  trace.push_back(ctx.energy_at(mu, v));

  auto make_report = [&](int iterations, bool converged, const Vector& shift) {
    HarmonizeReport r{.harmonic = shifted_cocycle(c, shift, tol),
                      .shift = shift,
                      .center_residual = ctx.center_at(shift).norm(),
                      .energy_before = trace.front(),
                      .energy_after = trace.back(),
                      .method = "iterative",
                      .iterations = iterations,
                      .energy_trace = trace,
                      .converged = converged,
                      .kernel_exceeds_fixed = kernel_excess(c.rep(), ctx.pi_mu, tol),
                      .dims = h1_dimensions(c.rep(), mu, tol)};
    return r;
  };

  for (int n = 0; n < max_iter; ++n) {
    Vector center = ctx.center_at(v);
    double norm = center.norm();
    if (norm < iter_tol) return make_report(n, true, v);
    if (progress && !progress(n, norm))
      throw Error(ErrorKind::Cancelled, "harmonize_iterative cancelled by caller");
    v += center;  // v_{n+1} = pi(mu) v_n + mu(beta)
    double e = ctx.energy_at(mu, v);
    if (e > trace.back() + 1e-12)
      fail(ErrorKind::InconsistentSystem,
           "energy increased during the center-update iteration (step " + std::to_string(n) +
               ")");
    trace.push_back(e);
  }
  throw NoConvergenceError("center norm still " + std::to_string(ctx.center_at(v).norm()) +
                               " after " + std::to_string(max_iter) + " iterations",
                           make_report(max_iter, false, v));
}

// ---------------------------------------------------------------------------
// Cohomology dimensions

CohomologyDims h1_dimensions(const UnitaryRep& rep, const Tolerances& tol) {
  CohomologyDims dims;
  const bool real_field = rep.field() == Field::Real;
  Matrix constraints = cocycle_constraint_matrix(rep);
  Matrix boundary = coboundary_matrix(rep);

  int z1 = nullity(constraints, real_field, tol.rank_rel);
  int b1 = rank_of(boundary, real_field, tol.rank_rel);
  int scale = real_field ? 1 : 2;
  dims.dim_z1 = scale * z1;
  dims.dim_b1 = scale * b1;
  dims.dim_h1 = dims.dim_z1 - dims.dim_b1;
  if (!real_field) {
    dims.dim_z1_complex = z1;
    dims.dim_b1_complex = b1;
    dims.dim_h1_complex = z1 - b1;
  }
  return dims;
}

CohomologyDims h1_dimensions(const UnitaryRep& rep, const FinMeasure& mu, const Tolerances& tol) {
  CohomologyDims dims = h1_dimensions(rep, tol);
  const bool real_field = rep.field() == Field::Real;
  const int d = rep.dim();

  Matrix constraints = cocycle_constraint_matrix(rep);
  Matrix stacked(constraints.rows() + d, constraints.cols());
  if (constraints.rows() > 0) stacked.topRows(constraints.rows()) = constraints;
  stacked.bottomRows(d) = center_matrix(rep, mu);
  int harmonic_space = nullity(stacked, real_field, tol.rank_rel);

  // harmonic coboundaries: ker(I - pi(mu)) modulo the fixed subspace
  Matrix a = Matrix::Identity(d, d) - rep.pi_mu(mu);
  int kernel_dim = nullity(a, real_field, tol.rank_rel);
  int fixed_dim = rep.fixed_subspace(tol).dim();
  int excess = kernel_dim - fixed_dim;

  int harmonic = harmonic_space - excess;
  int scale = real_field ? 1 : 2;
  dims.dim_harmonic = scale * harmonic;
  if (!real_field) dims.dim_harmonic_complex = harmonic;
  dims.kernel_exceeds_fixed = excess > 0;
  dims.measure_generates = support_generates(mu);
  return dims;
}

}  // namespace harmonics
