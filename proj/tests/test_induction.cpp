#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "harmonics/induction.hpp"
#include "testkit.hpp"

using namespace harmonics;
using testkit::Rng;

namespace {

GroupPtr z_group(const char* label = "t") {
  return Group::make(GroupSpec::free_abelian(1, {label}));
}
GroupElement zn(long long n) { return GroupElement(IntVec{{n}}); }

Matrix rotation(double theta) {
  Matrix r(2, 2);
  r << Complex(std::cos(theta), 0), Complex(-std::sin(theta), 0),
      Complex(std::sin(theta), 0), Complex(std::cos(theta), 0);
  return r;
}

// 2Z < Z with F = {e, t}
FiniteIndexSubgroup two_z() {
  auto z = z_group();
  auto lambda = z_group("u");
  return FiniteIndexSubgroup::make(z, lambda, {zn(2)}, {zn(0), zn(1)});
}

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("alpha: identity action and the 2Z < Z table") {
  auto sub = two_z();

  auto id = sub.alpha(zn(0), zn(1));
  CHECK(id.gamma_ambient == zn(0));
  CHECK(id.f_new == zn(1));

  // alpha(t, e): t e gamma in {e, t} forces gamma = e, lands at f = t
  auto a1 = sub.alpha(zn(1), zn(0));
  CHECK(a1.gamma_ambient == zn(0));
  CHECK(a1.f_new == zn(1));

  // alpha(t, t): t t gamma in F forces gamma = t^-2, lands at f = e
  auto a2 = sub.alpha(zn(1), zn(1));
  CHECK(a2.gamma_ambient == zn(-2));
  CHECK(a2.gamma_sub == zn(-1));  // u^-1 in subgroup coordinates
  CHECK(a2.f_new == zn(0));
}

TEST_CASE("alpha composition law holds exactly on random triples") {
  Rng rng(89);
  auto sub = two_z();
  const auto& amb = sub.ambient();
  for (int t = 0; t < 500; ++t) {
    GroupElement g = zn(rng.uniform_int(-40, 40));
    GroupElement h = zn(rng.uniform_int(-40, 40));
    GroupElement f = sub.coset_reps()[static_cast<std::size_t>(rng.uniform_int(0, 1))];
    auto lhs = sub.alpha(amb.mul(g, h), f);
    auto inner = sub.alpha(h, f);
    auto outer = sub.alpha(g, inner.f_new);
    CHECK(lhs.gamma_ambient == amb.mul(inner.gamma_ambient, outer.gamma_ambient));
    CHECK(lhs.f_new == outer.f_new);
  }

  // same law on a finite example: A3 < S3
  auto s3 = Group::make(GroupSpec::finite_perm(3, {{1, 0, 2}, {1, 2, 0}}, {"a", "b"}));
  auto c3 = Group::make(GroupSpec::finite_cyclic(3));
  GroupElement cyc(Perm{{1, 2, 0}});
  GroupElement swap01(Perm{{1, 0, 2}});
  auto a3 = FiniteIndexSubgroup::make(s3, c3, {cyc}, {s3->identity(), swap01});
  auto elems = s3->elements();
  for (int t = 0; t < 500; ++t) {
    GroupElement g = elems[static_cast<std::size_t>(rng.uniform_int(0, 5))];
    GroupElement h = elems[static_cast<std::size_t>(rng.uniform_int(0, 5))];
    GroupElement f = a3.coset_reps()[static_cast<std::size_t>(rng.uniform_int(0, 1))];
    auto lhs = a3.alpha(s3->mul(g, h), f);
    auto inner = a3.alpha(h, f);
    auto outer = a3.alpha(g, inner.f_new);
    CHECK(lhs.gamma_ambient == s3->mul(inner.gamma_ambient, outer.gamma_ambient));
    CHECK(lhs.f_new == outer.f_new);
  }
}

TEST_CASE("induce_rep: index one is the identity operation") {
  auto z = z_group();
  auto lambda = z_group("u");
  auto sub = FiniteIndexSubgroup::make(z, lambda, {zn(1)}, {zn(0)});
  UnitaryRep base(lambda, Field::Real, {rotation(0.5)});
  auto ind = induce_rep(sub, base);
  CHECK(ind.induced.dim() == 2);
  CHECK(max_abs(ind.induced.generator_matrix(0) - rotation(0.5)) < 1e-14);
}

TEST_CASE("induce_rep: trivial rep of 2Z gives the swap matrix") {
  auto sub = two_z();
  auto base = UnitaryRep::trivial(sub.subgroup_ptr(), 1);
  auto ind = induce_rep(sub, base);
  Matrix expected(2, 2);
  expected << Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0);
  CHECK(max_abs(ind.induced.generator_matrix(0) - expected) < 1e-14);
}

TEST_CASE("induce_rep: rotation block structure squares to diag(R, R)") {
  auto sub = two_z();
  UnitaryRep base(sub.subgroup_ptr(), Field::Real, {rotation(0.3)});
  auto ind = induce_rep(sub, base);
  CHECK(ind.induced.dim() == 4);
  Matrix sq = ind.induced.evaluate(zn(2));
  Matrix expected = Matrix::Zero(4, 4);
  expected.topLeftCorner(2, 2) = rotation(0.3);
  expected.bottomRightCorner(2, 2) = rotation(0.3);
  CHECK(max_abs(sq - expected) < 1e-12);
}

TEST_CASE("induce_cocycle: zero maps to zero, the basic class transfers") {
  auto sub = two_z();
  auto base_rep = UnitaryRep::trivial(sub.subgroup_ptr(), 1);
  auto ind = induce_rep(sub, base_rep);

  auto zero = induce_cocycle(sub, ind.induced, Cocycle::zero(base_rep));
  CHECK(zero.generator_value(0).norm() < 1e-14);

  Vector one(1);
  one << Complex(1, 0);
  auto phi = Cocycle::from_generator_values(base_rep, {one});
  auto phi_t = induce_cocycle(sub, ind.induced, phi);
  // blocks: phi(alpha(t^-1, e)) = phi(u) = 1 and phi(alpha(t^-1, t)) = phi(e) = 0
  CHECK(phi_t.generator_value(0)(0).real() == doctest::Approx(1.0));
  CHECK(phi_t.generator_value(0)(1).real() == doctest::Approx(0.0));

  auto dims_sub = h1_dimensions(base_rep);
  auto dims_amb = h1_dimensions(ind.induced);
  CHECK(dims_sub.dim_h1 == 1);
  CHECK(dims_amb.dim_h1 == 1);
}

TEST_CASE("induce_cocycle: coboundaries map to coboundaries") {
  auto sub = two_z();
  UnitaryRep base(sub.subgroup_ptr(), Field::Real, {rotation(0.9)});
  auto ind = induce_rep(sub, base);
  Vector v(2);
  v << Complex(0.7, 0), Complex(-0.2, 0);
  auto db = Cocycle::coboundary(base, v);
  auto induced_db = induce_cocycle(sub, ind.induced, db);
  // the induced coboundary comes from the block-constant vector (v, v)
  Vector vv(4);
  vv << v(0), v(1), v(0), v(1);
  auto expected = Cocycle::coboundary(ind.induced, vv);
  CHECK((induced_db.generator_value(0) - expected.generator_value(0)).norm() < 1e-12);
}

TEST_CASE("cohomology transfer: dim H1 matches across induction") {
  auto sub = two_z();
  std::vector<double> angles{0.0, M_PI / 2, 0.3};
  for (double theta : angles) {
    UnitaryRep base(sub.subgroup_ptr(), Field::Real, {rotation(theta)});
    auto ind = induce_rep(sub, base);
    CHECK(h1_dimensions(base).dim_h1 == h1_dimensions(ind.induced).dim_h1);
  }
  {
    auto base = UnitaryRep::trivial(sub.subgroup_ptr(), 1);
    auto ind = induce_rep(sub, base);
    CHECK(h1_dimensions(base).dim_h1 == h1_dimensions(ind.induced).dim_h1);
  }

  // index-2 subgroup of a finite group: A3 < S3 with a faithful character
  auto s3 = Group::make(GroupSpec::finite_perm(3, {{1, 0, 2}, {1, 2, 0}}, {"a", "b"}));
  auto c3 = Group::make(GroupSpec::finite_cyclic(3));
  auto a3 = FiniteIndexSubgroup::make(s3, c3, {GroupElement(Perm{{1, 2, 0}})},
                                      {s3->identity(), GroupElement(Perm{{1, 0, 2}})});
  Matrix omega(1, 1);
  omega(0, 0) = std::polar(1.0, 2.0 * M_PI / 3.0);
  UnitaryRep chi(c3, Field::Complex, {omega});
  auto ind = induce_rep(a3, chi);
  CHECK(ind.induced.dim() == 2);
  CHECK(h1_dimensions(chi).dim_h1 == 0);
  CHECK(h1_dimensions(ind.induced).dim_h1 == 0);

  // index-2 subgroup of Z/4
  auto z4 = Group::make(GroupSpec::finite_cyclic(4));
  auto c2 = Group::make(GroupSpec::finite_cyclic(2));
  auto sub2 = FiniteIndexSubgroup::make(z4, c2, {GroupElement(Residue{2})},
                                        {z4->identity(), GroupElement(Residue{1})});
  Matrix minus(1, 1);
  minus(0, 0) = Complex(-1, 0);
  UnitaryRep sign(c2, Field::Real, {minus});
  auto ind2 = induce_rep(sub2, sign);
  CHECK(h1_dimensions(sign).dim_h1 == 0);
  CHECK(h1_dimensions(ind2.induced).dim_h1 == 0);
}

TEST_CASE("harmonizing an induced cocycle stays in its class") {
  auto sub = two_z();
  UnitaryRep base(sub.subgroup_ptr(), Field::Real, {rotation(0.3)});
  auto ind = induce_rep(sub, base);
  Vector w(2);
  w << Complex(1, 0), Complex(0.5, 0);
  auto phi = Cocycle::from_generator_values(base, {w});
  auto phi_t = induce_cocycle(sub, ind.induced, phi);
  auto mu = symmetrize(FinMeasure::uniform_on_generators(sub.ambient_ptr()));
  auto report = harmonize_direct(phi_t, mu);
  CHECK(report.center_residual < 1e-8);
  // the output differs from the input by exactly the coboundary of the shift
  auto shift_cb = Cocycle::coboundary(ind.induced, report.shift);
  CHECK((report.harmonic.generator_value(0) -
         (phi_t.generator_value(0) + shift_cb.generator_value(0)))
            .norm() < 1e-12);
}

TEST_CASE("alpha integrability sums are exact") {
  auto sub = two_z();
  // alpha(t, e) = e and alpha(t, t) = u^-1: lengths 0 and 1
  CHECK(sub.alpha_second_moment(0) == doctest::Approx(1.0));
}

TEST_CASE("invalid subgroup data is rejected") {
  auto z = z_group();
  auto lambda = z_group("u");
  // wrong coset count for the lattice index
  CHECK_THROWS_AS(FiniteIndexSubgroup::make(z, lambda, {zn(2)}, {zn(0)}), Error);
  // coset representatives in the same coset
  CHECK_THROWS_AS(FiniteIndexSubgroup::make(z, lambda, {zn(2)}, {zn(0), zn(2)}), Error);
  // identity not first
  CHECK_THROWS_AS(FiniteIndexSubgroup::make(z, lambda, {zn(2)}, {zn(1), zn(0)}), Error);
  // rank-deficient lattice
  CHECK_THROWS_AS(FiniteIndexSubgroup::make(z, lambda, {zn(0)}, {zn(0)}), Error);

  auto sub = two_z();
  CHECK_THROWS_AS(sub.alpha(zn(1), zn(5)), Error);       // f not in F
  CHECK_THROWS_AS(sub.to_subgroup(zn(3)), Error);        // not in the lattice
  CHECK(sub.contains(zn(-6)));
  CHECK_FALSE(sub.contains(zn(7)));
}
