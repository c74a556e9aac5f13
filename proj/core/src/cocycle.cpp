#include "harmonics/cocycle.hpp"

#include <algorithm>

namespace harmonics {

namespace {

double relator_residual_of(const UnitaryRep& rep, const std::vector<Vector>& values,
                           const Tolerances& tol);

Vector word_value_of(const UnitaryRep& rep, const std::vector<Vector>& values,
                     std::span<const int> letters) {
  Vector v = Vector::Zero(rep.dim());
  Matrix p = Matrix::Identity(rep.dim(), rep.dim());
  for (int l : letters) {
    int i = std::abs(l) - 1;
    const Matrix& u = rep.generator_matrix(i);
    if (l > 0) {
      v += p * values[i];
      p = p * u;
    } else {
      p = p * u.adjoint();
      v -= p * values[i];
    }
  }
  return v;
}

Vector evaluate_of(const UnitaryRep& rep, const std::vector<Vector>& values,
                   const GroupElement& g) {
  auto w = rep.group().canonical_word(g);
  return word_value_of(rep, values, w);
}

double exhaustive_pair_residual(const UnitaryRep& rep, const std::vector<Vector>& values) {
  const Group& g = rep.group();
  auto elems = g.elements();
  double worst = 0.0;
  std::vector<Vector> vals;
  std::vector<Matrix> mats;
  vals.reserve(elems.size());
  mats.reserve(elems.size());
  for (const auto& e : elems) {
    vals.push_back(evaluate_of(rep, values, e));
    mats.push_back(rep.evaluate(e));
  }
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      Vector lhs = evaluate_of(rep, values, g.mul(elems[i], elems[j]));
      Vector rhs = mats[i] * vals[j] + vals[i];
      worst = std::max(worst, (lhs - rhs).norm());
    }
  return worst;
}

double relator_residual_of(const UnitaryRep& rep, const std::vector<Vector>& values,
                           const Tolerances& tol) {
  const Group& g = rep.group();
  double worst = 0.0;
  for (const auto& rel : g.relators())
    worst = std::max(worst, word_value_of(rep, values, rel).norm());
  if (g.kind() == GroupKind::FinitePerm) {
    worst = std::max(worst, exhaustive_pair_residual(rep, values));
  } else if (g.kind() == GroupKind::Product) {
    for (int j = 0; j < g.factor_count(); ++j) {
      if (!g.factor(j)->relators_by_exhaustion()) continue;
      auto sub_rep = restrict_rep_to_factor(rep, j, tol);
      std::vector<Vector> sub_values;
      const int off = g.generator_offset(j);
      for (int i = 0; i < g.factor(j)->generator_count(); ++i)
        sub_values.push_back(values[off + i]);
      worst = std::max(worst, relator_residual_of(sub_rep, sub_values, tol));
    }
  }
  return worst;
}

}  // namespace

Cocycle::Cocycle(UnitaryRep rep, std::vector<Vector> values)
    : rep_(std::move(rep)), values_(std::move(values)) {}

Cocycle Cocycle::from_generator_values(UnitaryRep rep, std::vector<Vector> values,
                                       const Tolerances& tol) {
  if (static_cast<int>(values.size()) != rep.group().generator_count())
    fail(ErrorKind::RelatorViolation, "one vector per generator required");
  for (auto& v : values) {
    if (v.size() != rep.dim())
      fail(ErrorKind::DimensionMismatch, "generator value has the wrong dimension");
    if (!rep.complex_field()) {
      for (Eigen::Index i = 0; i < v.size(); ++i)
        if (std::abs(v(i).imag()) > 1e-12)
          fail(ErrorKind::RelatorViolation, "real-field cocycle has a complex value");
    }
  }
  double residual = relator_residual_of(rep, values, tol);
  if (residual > tol.relator)
    fail(ErrorKind::RelatorViolation,
         "generator values violate a relator (residual " + std::to_string(residual) + ")");
  return Cocycle(std::move(rep), std::move(values));
}

Cocycle Cocycle::from_label_map(UnitaryRep rep, const std::map<std::string, Vector>& values,
                                const Tolerances& tol) {
  std::vector<Vector> vals;
  for (const auto& label : rep.group().generator_labels()) {
    auto it = values.find(label);
    if (it == values.end())
      fail(ErrorKind::RelatorViolation, "missing value for generator '" + label + "'");
    vals.push_back(it->second);
  }
  if (values.size() != vals.size())
    fail(ErrorKind::RelatorViolation, "value map names an unknown generator");
  return from_generator_values(std::move(rep), std::move(vals), tol);
}

Cocycle Cocycle::coboundary(UnitaryRep rep, const Vector& v) {
  if (v.size() != rep.dim())
    fail(ErrorKind::DimensionMismatch, "coboundary vector has the wrong dimension");
  std::vector<Vector> values;
  for (int i = 0; i < rep.group().generator_count(); ++i)
    values.push_back(rep.generator_matrix(i) * v - v);
  return Cocycle(std::move(rep), std::move(values));
}

Cocycle Cocycle::zero(UnitaryRep rep) {
  std::vector<Vector> values(static_cast<std::size_t>(rep.group().generator_count()),
                             Vector::Zero(rep.dim()));
  return Cocycle(std::move(rep), std::move(values));
}

const Vector& Cocycle::generator_value(int i) const {
  if (i < 0 || i >= static_cast<int>(values_.size()))
    fail(ErrorKind::InvalidArgument, "generator index out of range");
  return values_[i];
}

Vector Cocycle::word_value(std::span<const int> letters) const {
  return word_value_of(rep_, values_, letters);
}

Vector Cocycle::evaluate(const GroupElement& g) const { return evaluate_of(rep_, values_, g); }

double Cocycle::relator_residual() const { return relator_residual_of(rep_, values_, {}); }

Cocycle add(const Cocycle& a, const Cocycle& b) {
  if (a.dim() != b.dim() || a.group().generator_count() != b.group().generator_count())
    fail(ErrorKind::DimensionMismatch, "cocycle shapes differ");
  std::vector<Vector> values;
  for (int i = 0; i < a.group().generator_count(); ++i)
    values.push_back(a.generator_value(i) + b.generator_value(i));
  return Cocycle::from_generator_values(a.rep(), std::move(values));
}

Cocycle subtract(const Cocycle& a, const Cocycle& b) { return add(a, scale(b, Complex(-1, 0))); }

Cocycle scale(const Cocycle& c, Complex factor) {
  std::vector<Vector> values;
  for (int i = 0; i < c.group().generator_count(); ++i)
    values.push_back(factor * c.generator_value(i));
  return Cocycle::from_generator_values(c.rep(), std::move(values));
}

CenterResult mu_center(const Cocycle& c, const FinMeasure& mu, double harmonic_tol) {
  CenterResult result;
  result.center = Vector::Zero(c.dim());
  for (std::size_t i = 0; i < mu.size(); ++i)
    result.center += mu.weights()[i] * c.evaluate(mu.support()[i]);
  result.norm = result.center.norm();
  result.harmonic = result.norm < harmonic_tol;
  return result;
}

std::pair<Cocycle, Cocycle> split_fixed(const Cocycle& c, const Tolerances& tol) {
  Subspace fixed = c.rep().fixed_subspace(tol);
  Matrix p = fixed.projector();
  std::vector<Vector> fixed_values, unfixed_values;
  for (int i = 0; i < c.group().generator_count(); ++i) {
    Vector f = p * c.generator_value(i);
    fixed_values.push_back(f);
    unfixed_values.push_back(c.generator_value(i) - f);
  }
  return {Cocycle::from_generator_values(c.rep(), std::move(fixed_values), tol),
          Cocycle::from_generator_values(c.rep(), std::move(unfixed_values), tol)};
}

Cocycle restrict_cocycle_to_factor(const Cocycle& c, int j, const Tolerances& tol) {
  const Group& g = c.group();
  auto sub_rep = restrict_rep_to_factor(c.rep(), j, tol);
  std::vector<Vector> values;
  const int off = g.generator_offset(j);
  for (int i = 0; i < g.factor(j)->generator_count(); ++i)
    values.push_back(c.generator_value(off + i));
  return Cocycle::from_generator_values(std::move(sub_rep), std::move(values), tol);
}

}  // namespace harmonics
