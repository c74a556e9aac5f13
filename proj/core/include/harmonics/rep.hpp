#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "harmonics/common.hpp"
#include "harmonics/group.hpp"
#include "harmonics/measure.hpp"

namespace harmonics {

enum class Field { Real, Complex };

const char* field_name(Field f) noexcept;

/// Orthonormal basis of a subspace; columns orthonormal within the subspace
/// tolerance, deterministic column order.
struct Subspace {
  Matrix basis;  // dim x k

  int ambient_dim() const { return static_cast<int>(basis.rows()); }
  int dim() const { return static_cast<int>(basis.cols()); }
  Matrix projector() const { return basis * basis.adjoint(); }
  Vector project(const Vector& v) const { return basis * (basis.adjoint() * v); }
};

struct ValidationReport {
  double max_unitary_residual = 0.0;
  double max_relator_residual = 0.0;  // exhaustive pair residual for by-exhaustion kinds
  double max_pair_residual = 0.0;     // random spot checks
  int pairs_checked = 0;
};

/// Finite-dimensional unitary representation given by generator matrices.
/// Construction checks shapes, field-realness, unitarity of the generator
/// matrices and the relator identities (exhaustive pair check for kinds
/// without stored relators), so a constructed rep is always valid.
class UnitaryRep {
 public:
  UnitaryRep(GroupPtr group, Field field, std::vector<Matrix> generator_matrices,
             const Tolerances& tol = {});
  static UnitaryRep from_label_map(GroupPtr group, Field field,
                                   const std::map<std::string, Matrix>& matrices,
                                   const Tolerances& tol = {});
  static UnitaryRep trivial(GroupPtr group, int dim, Field field = Field::Real);

  const Group& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  Field field() const { return field_; }
  bool complex_field() const { return field_ == Field::Complex; }
  int dim() const { return dim_; }
  const std::vector<Matrix>& generator_matrices() const { return matrices_; }
  const Matrix& generator_matrix(int i) const;

  /// pi(g) along the canonical word of g; pi(e) = I, pi(g^-1) = pi(g)*.
  Matrix evaluate(const GroupElement& g) const;
  Matrix word_matrix(std::span<const int> letters) const;

  /// Re-runs the construction checks plus `trials` random-pair homomorphism
  /// spot checks in the radius-3 ball. Throws ValidationFailed on residuals
  /// above tolerance.
  ValidationReport validate(int trials = 50, std::uint64_t seed = 0,
                            const Tolerances& tol = {}) const;

  /// Orthonormal basis of the intersection of ker(pi(s) - I) over generators.
  Subspace fixed_subspace(const Tolerances& tol = {}) const;

  /// The convolution operator pi(mu) = sum_g mu(g) pi(g).
  Matrix pi_mu(const FinMeasure& mu) const;

 private:
  GroupPtr group_;
  Field field_;
  int dim_;
  std::vector<Matrix> matrices_;
};

UnitaryRep direct_sum(const UnitaryRep& a, const UnitaryRep& b);
UnitaryRep tensor_product(const UnitaryRep& a, const UnitaryRep& b);
/// u pi(.) u* for a unitary u.
UnitaryRep conjugate(const UnitaryRep& rep, const Matrix& u);

/// Restriction of a product rep to factor j (0-based): the factor's
/// generators acting on the same space, pi|_{G_j}(g) = pi(..., e, g, e, ...).
UnitaryRep restrict_rep_to_factor(const UnitaryRep& rep, int j, const Tolerances& tol = {});

}  // namespace harmonics
