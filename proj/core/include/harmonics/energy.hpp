#pragma once

#include "harmonics/cocycle.hpp"

namespace harmonics {

/// E(v) = sum_g mu(g) || pi(g)v - v + b(g) ||^2, the energy of the shifted
/// cocycle b_v. E(0) is the plain energy of b.
double energy_at(const Cocycle& c, const FinMeasure& mu, const Vector& v);
double energy(const Cocycle& c, const FinMeasure& mu);

/// Directional derivative of the energy function at 0:
/// D_w E = -2 sum_g (mu(g) + mu(g^-1)) Re<b(g), w>.
/// For symmetric mu this equals -4 Re<mu-center(b), w>.
double directional_derivative(const Cocycle& c, const FinMeasure& mu, const Vector& w);

/// Re<a, b> with the convention used throughout (complex spaces treated as
/// real, so bilinear pairings take the real part).
double real_inner(const Vector& a, const Vector& b);

}  // namespace harmonics
