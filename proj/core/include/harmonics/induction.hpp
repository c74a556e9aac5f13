#pragma once

#include <map>
#include <optional>
#include <vector>

#include "harmonics/harmonize.hpp"

namespace harmonics {

/// A finite-index subgroup Gamma of a catalog ambient group, presented as a
/// catalog group Lambda together with an embedding of its generators and a
/// fundamental domain F of coset representatives (identity first, so
/// F Gamma = G and the translates f Gamma partition the group).
///
/// Membership is exact: full enumeration for finite ambient groups, integer
/// lattice arithmetic for free-abelian ones.
class FiniteIndexSubgroup {
 public:
  static FiniteIndexSubgroup make(GroupPtr ambient, GroupPtr subgroup,
                                  std::vector<GroupElement> generator_images,
                                  std::vector<GroupElement> coset_reps);

  const Group& ambient() const { return *ambient_; }
  const GroupPtr& ambient_ptr() const { return ambient_; }
  const Group& subgroup() const { return *subgroup_; }
  const GroupPtr& subgroup_ptr() const { return subgroup_; }
  const std::vector<GroupElement>& generator_images() const { return images_; }
  const std::vector<GroupElement>& coset_reps() const { return coset_reps_; }
  int index() const { return static_cast<int>(coset_reps_.size()); }

  bool contains(const GroupElement& g) const;
  /// Gamma-element of the ambient group as an element of Lambda; throws
  /// MembershipFailure for elements outside Gamma.
  GroupElement to_subgroup(const GroupElement& g) const;
  /// Lambda-element embedded into the ambient group.
  GroupElement embed(const GroupElement& lambda) const;
  int coset_index_of(const GroupElement& f) const;  // position in coset_reps

  struct AlphaResult {
    GroupElement gamma_ambient;
    GroupElement gamma_sub;  // same element, in Lambda coordinates
    GroupElement f_new;      // g f gamma
    int f_new_index = 0;
  };
  /// The unique gamma in Gamma with g f gamma in F. Satisfies the
  /// composition law alpha(gh, f) = alpha(h, f) alpha(g, h f alpha(h, f)).
  AlphaResult alpha(const GroupElement& g, const GroupElement& f) const;

  /// sum over f in F of |alpha(s, f)|^2 in the subgroup word metric.
  double alpha_second_moment(int generator_index,
                             int radius_cap = limits::radius_cap) const;

 private:
  FiniteIndexSubgroup() = default;

  GroupPtr ambient_;
  GroupPtr subgroup_;
  std::vector<GroupElement> images_;
  std::vector<GroupElement> coset_reps_;

  // finite-enumeration oracle
  std::optional<std::map<GroupElement, GroupElement>> member_map_;
  // integer-lattice oracle: embedding matrix columns, adjugate and det
  std::vector<std::vector<long long>> lattice_cols_;
  std::vector<std::vector<long long>> lattice_adjugate_;
  long long lattice_det_ = 0;
};

/// Induced representation of the ambient group on F-indexed copies of the
/// base space, (pi~(g) q)(f) = pi(alpha(g^-1, f)) q(g^-1 f alpha(g^-1, f)).
struct InducedRep {
  UnitaryRep base;     // on the subgroup
  UnitaryRep induced;  // on the ambient group, dim = base dim * index
};

InducedRep induce_rep(const FiniteIndexSubgroup& sub, const UnitaryRep& base,
                      const Tolerances& tol = {});

/// Induced cocycle phi~(g)(f) = phi(alpha(g^-1, f)) for the induced rep.
Cocycle induce_cocycle(const FiniteIndexSubgroup& sub, const UnitaryRep& induced,
                       const Cocycle& phi, const Tolerances& tol = {});

}  // namespace harmonics
