#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "harmonics/measure.hpp"
#include "harmonics/rep.hpp"

namespace harmonics {

/// A cocycle b : G -> H determined by its values on generators, extended
/// along canonical words via b(gh) = pi(g) b(h) + b(g). Construction checks
/// relator consistency (exhaustive pair checks for kinds without stored
/// relators), so a constructed cocycle is always a valid element of Z^1.
class Cocycle {
 public:
  static Cocycle from_generator_values(UnitaryRep rep, std::vector<Vector> values,
                                       const Tolerances& tol = {});
  static Cocycle from_label_map(UnitaryRep rep, const std::map<std::string, Vector>& values,
                                const Tolerances& tol = {});
  /// b(g) = pi(g) v - v.
  static Cocycle coboundary(UnitaryRep rep, const Vector& v);
  static Cocycle zero(UnitaryRep rep);

  const UnitaryRep& rep() const { return rep_; }
  const Group& group() const { return rep_.group(); }
  int dim() const { return rep_.dim(); }
  const std::vector<Vector>& generator_values() const { return values_; }
  const Vector& generator_value(int i) const;

  Vector evaluate(const GroupElement& g) const;
  Vector word_value(std::span<const int> letters) const;

  /// Largest violation of the defining identities (relators, or all element
  /// pairs for by-exhaustion kinds).
  double relator_residual() const;

 private:
  Cocycle(UnitaryRep rep, std::vector<Vector> values);

  UnitaryRep rep_;
  std::vector<Vector> values_;
};

Cocycle add(const Cocycle& a, const Cocycle& b);
Cocycle subtract(const Cocycle& a, const Cocycle& b);
Cocycle scale(const Cocycle& c, Complex factor);

struct CenterResult {
  Vector center;
  double norm = 0.0;
  bool harmonic = false;
};

/// The mu-center sum_g mu(g) b(g); zero exactly when the cocycle is
/// mu-harmonic.
CenterResult mu_center(const Cocycle& c, const FinMeasure& mu,
                       double harmonic_tol = Tolerances{}.harmonic);

/// Orthogonal split of the generator values into the fixed subspace and its
/// complement; both parts are valid cocycles and sum to the input.
std::pair<Cocycle, Cocycle> split_fixed(const Cocycle& c, const Tolerances& tol = {});

/// Restriction of a product-group cocycle to factor j (0-based), as a
/// cocycle of the factor group under the restricted representation.
Cocycle restrict_cocycle_to_factor(const Cocycle& c, int j, const Tolerances& tol = {});

}  // namespace harmonics
