#include "harmonics/products.hpp"

#include <algorithm>

#include "linalg.hpp"

namespace harmonics {

namespace {

void check_product(const Group& g, std::span<const FinMeasure> mus) {
  if (g.kind() != GroupKind::Product) fail(ErrorKind::NotAProduct, "group is not a product");
  if (static_cast<int>(mus.size()) != g.factor_count())
    fail(ErrorKind::InvalidArgument, "need one measure per factor");
  for (int j = 0; j < g.factor_count(); ++j)
    if (mus[j].group().spec().kind != g.factor(j)->kind())
      fail(ErrorKind::KindMismatch, "factor measure lives on the wrong group");
}

}  // namespace

FinMeasure product_measure(const GroupPtr& product_group, std::span<const FinMeasure> factors) {
  check_product(*product_group, factors);
  std::vector<GroupElement> support{GroupElement(GroupElement::Tuple{})};
  std::vector<double> weights{1.0};
  for (const auto& mu : factors) {
    std::vector<GroupElement> next_support;
    std::vector<double> next_weights;
    next_support.reserve(support.size() * mu.size());
    for (std::size_t i = 0; i < support.size(); ++i) {
      for (std::size_t k = 0; k < mu.size(); ++k) {
        auto t = support[i].tuple();
        t.push_back(mu.support()[k]);
        next_support.push_back(GroupElement(std::move(t)));
        next_weights.push_back(weights[i] * mu.weights()[k]);
      }
    }
    support = std::move(next_support);
    weights = std::move(next_weights);
  }
  return FinMeasure::make(product_group, std::move(support), std::move(weights));
}

Subspace complement_invariant_subspace(const UnitaryRep& rep, int j, const Tolerances& tol) {
  const Group& g = rep.group();
  if (g.kind() != GroupKind::Product) fail(ErrorKind::NotAProduct, "group is not a product");
  if (j < 0 || j >= g.factor_count()) fail(ErrorKind::InvalidArgument, "factor index out of range");
  const int d = rep.dim();
  std::vector<int> other_gens;
  for (int i = 0; i < g.generator_count(); ++i)
    if (g.factor_of_generator(i).first != j) other_gens.push_back(i);
  if (other_gens.empty()) return Subspace{Matrix::Identity(d, d)};
  Matrix stacked(static_cast<Eigen::Index>(other_gens.size()) * d, d);
  for (std::size_t r = 0; r < other_gens.size(); ++r)
    stacked.middleRows(static_cast<Eigen::Index>(r) * d, d) =
        rep.generator_matrix(other_gens[r]) - Matrix::Identity(d, d);
  if (rep.field() == Field::Real) {
    RealMatrix sr = stacked.real();
    return Subspace{linalg::null_space_real(sr, tol.rank_rel).cast<Complex>()};
  }
  return Subspace{linalg::null_space(stacked, tol.rank_rel)};
}

ProductDecomposition decompose_product(const Cocycle& c, std::span<const FinMeasure> mus,
                                       const Tolerances& tol) {
  const Group& g = c.group();
  check_product(g, mus);
  auto mu = product_measure(c.rep().group_ptr(), mus);
  auto report = harmonize_direct(c, mu, tol);
  const Cocycle& h = report.harmonic;

  auto [beta_fixed, beta_unfixed] = split_fixed(h, tol);

  const int d = c.dim();
  std::vector<Cocycle> factor_cocycles;
  double invariance_residual = 0.0;
  for (int j = 0; j < g.factor_count(); ++j) {
    Subspace vj = complement_invariant_subspace(c.rep(), j, tol);
    Matrix away = Matrix::Identity(d, d) - vj.projector();
    std::vector<Vector> values;
    for (int i = 0; i < g.generator_count(); ++i) {
      if (g.factor_of_generator(i).first == j) {
        Vector v = beta_unfixed.generator_value(i);
        invariance_residual = std::max(invariance_residual, (away * v).norm());
        values.push_back(std::move(v));
      } else {
        values.push_back(Vector::Zero(d));
      }
    }
    factor_cocycles.push_back(Cocycle::from_generator_values(c.rep(), std::move(values), tol));
  }

  double residual = 0.0;
  for (int i = 0; i < g.generator_count(); ++i) {
    Vector sum = beta_fixed.generator_value(i);
    for (const auto& b : factor_cocycles) sum += b.generator_value(i);
    residual = std::max(residual, (h.generator_value(i) - sum).norm());
  }

  return ProductDecomposition{.beta_fixed = std::move(beta_fixed),
                              .factor_cocycles = std::move(factor_cocycles),
                              .residual = residual,
                              .invariance_residual = invariance_residual,
                              .harmonize_report = std::move(report)};
}

ProductDimsBreakdown product_dimension_breakdown(const UnitaryRep& rep,
                                                 std::span<const FinMeasure> mus,
                                                 const Tolerances& tol) {
  const Group& g = rep.group();
  check_product(g, mus);
  ProductDimsBreakdown out;

  auto mu = product_measure(rep.group_ptr(), mus);
  out.total = h1_dimensions(rep, mu, tol).dim_harmonic.value();

  Subspace fixed = rep.fixed_subspace(tol);
  if (fixed.dim() > 0) {
    auto triv = UnitaryRep::trivial(rep.group_ptr(), fixed.dim(), rep.field());
    out.fixed_term = h1_dimensions(triv, tol).dim_z1;
  }

  const int d = rep.dim();
  Matrix fixed_proj = fixed.projector();
  for (int j = 0; j < g.factor_count(); ++j) {
    // W_j: invariant under the other factors and orthogonal to the fixed part
    std::vector<int> other_gens;
    for (int i = 0; i < g.generator_count(); ++i)
      if (g.factor_of_generator(i).first != j) other_gens.push_back(i);
    Matrix stacked(static_cast<Eigen::Index>(other_gens.size() + 1) * d, d);
    for (std::size_t r = 0; r < other_gens.size(); ++r)
      stacked.middleRows(static_cast<Eigen::Index>(r) * d, d) =
          rep.generator_matrix(other_gens[r]) - Matrix::Identity(d, d);
    stacked.bottomRows(d) = fixed_proj;
    Matrix basis;
    if (rep.field() == Field::Real) {
      RealMatrix sr = stacked.real();
      basis = linalg::null_space_real(sr, tol.rank_rel).cast<Complex>();
    } else {
      basis = linalg::null_space(stacked, tol.rank_rel);
    }
    if (basis.cols() == 0) {
      out.factor_terms.push_back(0);
      continue;
    }
    const int off = g.generator_offset(j);
    std::vector<Matrix> mats;
    for (int i = 0; i < g.factor(j)->generator_count(); ++i)
      mats.push_back(basis.adjoint() * rep.generator_matrices()[off + i] * basis);
    UnitaryRep factor_rep(g.factor(j), rep.field(), std::move(mats), tol);
    out.factor_terms.push_back(h1_dimensions(factor_rep, mus[j], tol).dim_harmonic.value());
  }
  return out;
}

}  // namespace harmonics
