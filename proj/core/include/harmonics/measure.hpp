#pragma once

#include <vector>

#include "harmonics/common.hpp"
#include "harmonics/group.hpp"

namespace harmonics {

enum class TriState { No, Yes, Unknown };

const char* tri_state_name(TriState t) noexcept;

/// Finitely supported probability measure on a catalog group. Support is
/// kept sorted with pairwise-distinct elements and strictly positive weights;
/// total mass is 1 within the mass tolerance.
class FinMeasure {
 public:
  static FinMeasure make(GroupPtr group, std::vector<GroupElement> support,
                         std::vector<double> weights, const Tolerances& tol = {});
  static FinMeasure point_mass(GroupPtr group, const GroupElement& g);
  static FinMeasure uniform(GroupPtr group, std::vector<GroupElement> support);
  /// Uniform measure on the symmetrized generating set S u S^-1.
  static FinMeasure uniform_on_generators(GroupPtr group);

  const Group& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  std::size_t size() const { return support_.size(); }
  const std::vector<GroupElement>& support() const { return support_; }
  const std::vector<double>& weights() const { return weights_; }
  double weight_of(const GroupElement& g) const;  // 0 when not in the support
  double total_mass() const;

 private:
  FinMeasure(GroupPtr group, std::vector<GroupElement> support, std::vector<double> weights);

  GroupPtr group_;
  std::vector<GroupElement> support_;
  std::vector<double> weights_;
};

struct ReasonablenessReport {
  bool symmetric = false;
  TriState generates = TriState::Unknown;
  double second_moment = 0.0;
  /// Nonsingularity w.r.t. the counting measure; automatic for discrete groups.
  bool nonsingular = true;
  bool admissible() const { return generates == TriState::Yes && nonsingular; }
  bool reasonable() const { return symmetric && admissible(); }
};

/// The symmetrization (mu + mu-check)/2 with mu-check(g) = mu(g^-1).
FinMeasure symmetrize(const FinMeasure& mu);

/// Convolution (mu * nu)(g) = sum over ab=g of mu(a) nu(b).
FinMeasure convolve(const FinMeasure& mu, const FinMeasure& nu);

bool is_symmetric(const FinMeasure& mu, double mass_tol = Tolerances{}.mass);

/// Decides whether the support generates the group. Exact (Yes/No) for
/// finite groups, abelian kinds and the Heisenberg group; for free groups
/// and mixed products the bounded product search may return Unknown.
TriState support_generates(const FinMeasure& mu, int gen_radius = limits::gen_radius);

ReasonablenessReport validate_reasonable(const FinMeasure& mu,
                                         int gen_radius = limits::gen_radius,
                                         int radius_cap = limits::radius_cap);

}  // namespace harmonics
