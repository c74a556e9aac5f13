#include "harmonics/rep.hpp"

#include <algorithm>

#include "linalg.hpp"
#include "rng.hpp"

namespace harmonics {

const char* field_name(Field f) noexcept { return f == Field::Real ? "real" : "complex"; }

namespace {

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double max_imag(const Matrix& m) {
  double r = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r = std::max(r, std::abs(m(i, j).imag()));
  return r;
}

}  // namespace

UnitaryRep::UnitaryRep(GroupPtr group, Field field, std::vector<Matrix> generator_matrices,
                       const Tolerances& tol)
    : group_(std::move(group)), field_(field), matrices_(std::move(generator_matrices)) {
  if (!group_) fail(ErrorKind::InvalidArgument, "rep needs a group");
  if (static_cast<int>(matrices_.size()) != group_->generator_count())
    fail(ErrorKind::ValidationFailed, "one matrix per generator required");
  if (matrices_.empty()) fail(ErrorKind::ValidationFailed, "rep needs at least one generator");
  dim_ = static_cast<int>(matrices_[0].rows());
  if (dim_ <= 0) fail(ErrorKind::ValidationFailed, "rep dimension must be positive");
  for (const auto& m : matrices_) {
    if (m.rows() != dim_ || m.cols() != dim_)
      fail(ErrorKind::ValidationFailed, "generator matrices must be square of equal size");
    if (field_ == Field::Real && max_imag(m) > 1e-12)
      fail(ErrorKind::ValidationFailed, "real-field rep has a complex generator matrix");
  }
  validate(0, 0, tol);
}

UnitaryRep UnitaryRep::from_label_map(GroupPtr group, Field field,
                                      const std::map<std::string, Matrix>& matrices,
                                      const Tolerances& tol) {
  if (!group) fail(ErrorKind::InvalidArgument, "rep needs a group");
  std::vector<Matrix> mats;
  for (const auto& label : group->generator_labels()) {
    auto it = matrices.find(label);
    if (it == matrices.end())
      fail(ErrorKind::ValidationFailed, "missing matrix for generator '" + label + "'");
    mats.push_back(it->second);
  }
  if (matrices.size() != mats.size())
    fail(ErrorKind::ValidationFailed, "matrix map names an unknown generator");
  return UnitaryRep(std::move(group), field, std::move(mats), tol);
}

UnitaryRep UnitaryRep::trivial(GroupPtr group, int dim, Field field) {
  std::vector<Matrix> mats(static_cast<std::size_t>(group->generator_count()),
                           Matrix::Identity(dim, dim));
  return UnitaryRep(std::move(group), field, std::move(mats));
}

const Matrix& UnitaryRep::generator_matrix(int i) const {
  if (i < 0 || i >= static_cast<int>(matrices_.size()))
    fail(ErrorKind::InvalidArgument, "generator index out of range");
  return matrices_[i];
}

Matrix UnitaryRep::word_matrix(std::span<const int> letters) const {
  Matrix p = Matrix::Identity(dim_, dim_);
  for (int l : letters) {
    const Matrix& u = generator_matrix(std::abs(l) - 1);
    if (l > 0)
      p = p * u;
    else
      p = p * u.adjoint();
  }
  return p;
}

Matrix UnitaryRep::evaluate(const GroupElement& g) const {
  auto w = group_->canonical_word(g);
  return word_matrix(w);
}

ValidationReport UnitaryRep::validate(int trials, std::uint64_t seed, const Tolerances& tol) const {
  ValidationReport report;
  for (std::size_t i = 0; i < matrices_.size(); ++i) {
    double r = max_abs(matrices_[i].adjoint() * matrices_[i] - Matrix::Identity(dim_, dim_));
    report.max_unitary_residual = std::max(report.max_unitary_residual, r);
    if (r > tol.unitary)
      fail(ErrorKind::ValidationFailed, "generator '" + group_->generator_labels()[i] +
                                            "' is not unitary (residual " + std::to_string(r) + ")");
  }

  for (const auto& rel : group_->relators()) {
    double r = max_abs(word_matrix(rel) - Matrix::Identity(dim_, dim_));
    report.max_relator_residual = std::max(report.max_relator_residual, r);
    if (r > tol.relator)
      fail(ErrorKind::ValidationFailed,
           "relator identity fails (residual " + std::to_string(r) + ")");
  }

  if (group_->kind() == GroupKind::FinitePerm) {
    auto elems = group_->elements();
    for (const auto& a : elems) {
      Matrix pa = evaluate(a);
      for (const auto& b : elems) {
        double r = max_abs(pa * evaluate(b) - evaluate(group_->mul(a, b)));
        report.max_relator_residual = std::max(report.max_relator_residual, r);
        if (r > tol.relator)
          fail(ErrorKind::ValidationFailed,
               "homomorphism fails on an element pair (residual " + std::to_string(r) + ")");
      }
    }
  } else if (group_->kind() == GroupKind::Product) {
    // factor relators are covered above where the factor stores relators;
    // by-exhaustion factors are validated through their restrictions
    for (int j = 0; j < group_->factor_count(); ++j) {
      if (group_->factor(j)->relators_by_exhaustion()) {
        auto restricted = restrict_rep_to_factor(*this, j, tol);
        auto sub = restricted.validate(0, 0, tol);
        report.max_relator_residual =
            std::max(report.max_relator_residual, sub.max_relator_residual);
      }
    }
  }

  if (trials > 0) {
    detail::Rng rng(seed ^ 0x7265705f76616cULL);
    auto ball = group_->cayley_ball(3);
    for (int t = 0; t < trials; ++t) {
      const auto& a = ball[rng.uniform_int(0, static_cast<long long>(ball.size()) - 1)].element;
      const auto& b = ball[rng.uniform_int(0, static_cast<long long>(ball.size()) - 1)].element;
      double r = max_abs(evaluate(a) * evaluate(b) - evaluate(group_->mul(a, b)));
      report.max_pair_residual = std::max(report.max_pair_residual, r);
      ++report.pairs_checked;
      if (r > tol.relator)
        fail(ErrorKind::ValidationFailed,
             "random-pair homomorphism check fails (residual " + std::to_string(r) + ")");
    }
  }
  return report;
}

Subspace UnitaryRep::fixed_subspace(const Tolerances& tol) const {
  const int k = static_cast<int>(matrices_.size());
  if (field_ == Field::Real) {
    RealMatrix stacked(static_cast<Eigen::Index>(k) * dim_, dim_);
    for (int i = 0; i < k; ++i)
      stacked.middleRows(static_cast<Eigen::Index>(i) * dim_, dim_) =
          (matrices_[i] - Matrix::Identity(dim_, dim_)).real();
    RealMatrix basis = linalg::null_space_real(stacked, tol.rank_rel);
    return Subspace{basis.cast<Complex>()};
  }
  Matrix stacked(static_cast<Eigen::Index>(k) * dim_, dim_);
  for (int i = 0; i < k; ++i)
    stacked.middleRows(static_cast<Eigen::Index>(i) * dim_, dim_) =
        matrices_[i] - Matrix::Identity(dim_, dim_);
  return Subspace{linalg::null_space(stacked, tol.rank_rel)};
}

Matrix UnitaryRep::pi_mu(const FinMeasure& mu) const {
  if (mu.group_ptr()->spec().kind != group_->spec().kind)
    fail(ErrorKind::KindMismatch, "measure lives on a different group");
  Matrix sum = Matrix::Zero(dim_, dim_);
  for (std::size_t i = 0; i < mu.size(); ++i)
    sum += mu.weights()[i] * evaluate(mu.support()[i]);
  double norm = linalg::operator_norm(sum);
  if (norm > 1.0 + 1e-9)
    fail(ErrorKind::InconsistentSystem,
         "pi(mu) has operator norm " + std::to_string(norm) + " > 1");
  return sum;
}

UnitaryRep direct_sum(const UnitaryRep& a, const UnitaryRep& b) {
  if (a.group_ptr().get() != b.group_ptr().get())
    fail(ErrorKind::InvalidArgument, "direct sum needs reps of the same group");
  const int da = a.dim(), db = b.dim();
  std::vector<Matrix> mats;
  for (int i = 0; i < a.group().generator_count(); ++i) {
    Matrix m = Matrix::Zero(da + db, da + db);
    m.topLeftCorner(da, da) = a.generator_matrix(i);
    m.bottomRightCorner(db, db) = b.generator_matrix(i);
    mats.push_back(std::move(m));
  }
  Field f = (a.field() == Field::Complex || b.field() == Field::Complex) ? Field::Complex
                                                                         : Field::Real;
  return UnitaryRep(a.group_ptr(), f, std::move(mats));
}

UnitaryRep tensor_product(const UnitaryRep& a, const UnitaryRep& b) {
  if (a.group_ptr().get() != b.group_ptr().get())
    fail(ErrorKind::InvalidArgument, "tensor product needs reps of the same group");
  std::vector<Matrix> mats;
  for (int i = 0; i < a.group().generator_count(); ++i) {
    const Matrix& ma = a.generator_matrix(i);
    const Matrix& mb = b.generator_matrix(i);
    Matrix m(ma.rows() * mb.rows(), ma.cols() * mb.cols());
    for (Eigen::Index r = 0; r < ma.rows(); ++r)
      for (Eigen::Index c = 0; c < ma.cols(); ++c)
        m.block(r * mb.rows(), c * mb.cols(), mb.rows(), mb.cols()) = ma(r, c) * mb;
    mats.push_back(std::move(m));
  }
  Field f = (a.field() == Field::Complex || b.field() == Field::Complex) ? Field::Complex
                                                                         : Field::Real;
  return UnitaryRep(a.group_ptr(), f, std::move(mats));
}

UnitaryRep restrict_rep_to_factor(const UnitaryRep& rep, int j, const Tolerances& tol) {
  const Group& g = rep.group();
  const auto& factor = g.factor(j);  // throws NotAProduct otherwise
  std::vector<Matrix> mats;
  const int off = g.generator_offset(j);
  for (int i = 0; i < factor->generator_count(); ++i)
    mats.push_back(rep.generator_matrices()[off + i]);
  return UnitaryRep(factor, rep.field(), std::move(mats), tol);
}

UnitaryRep conjugate(const UnitaryRep& rep, const Matrix& u) {
  if (u.rows() != rep.dim() || u.cols() != rep.dim())
    fail(ErrorKind::DimensionMismatch, "conjugating unitary has the wrong size");
  std::vector<Matrix> mats;
  for (int i = 0; i < rep.group().generator_count(); ++i)
    mats.push_back(u * rep.generator_matrix(i) * u.adjoint());
  Field f = rep.field();
  if (f == Field::Real) {
    for (const auto& m : mats)
      if (max_imag(m) > 1e-12) {
        f = Field::Complex;
        break;
      }
  }
  return UnitaryRep(rep.group_ptr(), f, std::move(mats));
}

}  // namespace harmonics
