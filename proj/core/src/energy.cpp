#include "harmonics/energy.hpp"

namespace harmonics {

double real_inner(const Vector& a, const Vector& b) { return a.dot(b).real(); }

namespace {

void check_dims(const Cocycle& c, const Vector& v) {
  if (v.size() != c.dim())
    fail(ErrorKind::DimensionMismatch, "vector dimension does not match the representation");
}

}  // namespace

double energy_at(const Cocycle& c, const FinMeasure& mu, const Vector& v) {
  check_dims(c, v);
  const UnitaryRep& rep = c.rep();
  double e = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    Vector term = rep.evaluate(mu.support()[i]) * v - v + c.evaluate(mu.support()[i]);
    e += mu.weights()[i] * term.squaredNorm();
  }
  return e;
}

double energy(const Cocycle& c, const FinMeasure& mu) {
  return energy_at(c, mu, Vector::Zero(c.dim()));
}

double directional_derivative(const Cocycle& c, const FinMeasure& mu, const Vector& w) {
  check_dims(c, w);
  const Group& g = c.group();
  double sum = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const GroupElement& s = mu.support()[i];
    sum += mu.weights()[i] *
           (real_inner(c.evaluate(s), w) + real_inner(c.evaluate(g.inv(s)), w));
  }
  return -2.0 * sum;
}

}  // namespace harmonics
