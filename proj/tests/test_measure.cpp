#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "harmonics/measure.hpp"
#include "testkit.hpp"

using namespace harmonics;
using testkit::Rng;

namespace {

GroupPtr z_group() { return Group::make(GroupSpec::free_abelian(1, {"t"})); }
GroupElement zn(long long n) { return GroupElement(IntVec{{n}}); }

GroupPtr s3_group() {
  return Group::make(GroupSpec::finite_perm(3, {{1, 0, 2}, {1, 2, 0}}, {"a", "b"}));
}

}  // namespace

TEST_CASE("symmetrize: point mass splits in half") {
  auto g = z_group();
  auto mu = FinMeasure::point_mass(g, zn(1));
  auto sym = symmetrize(mu);
  CHECK(sym.size() == 2);
  CHECK(sym.weight_of(zn(1)) == doctest::Approx(0.5));
  CHECK(sym.weight_of(zn(-1)) == doctest::Approx(0.5));
}

TEST_CASE("symmetrize: fixed point on symmetric input") {
  auto g = z_group();
  auto mu = FinMeasure::uniform(g, {zn(1), zn(-1)});
  auto sym = symmetrize(mu);
  CHECK(sym.size() == 2);
  CHECK(sym.weight_of(zn(1)) == doctest::Approx(0.5));
  CHECK(sym.weight_of(zn(-1)) == doctest::Approx(0.5));
}

TEST_CASE("symmetrize: S3 with an involution and a 3-cycle") {
  auto g = s3_group();
  GroupElement swap01(Perm{{1, 0, 2}});   // (01), its own inverse
  GroupElement cyc012(Perm{{1, 2, 0}});   // (012)
  GroupElement cyc021(Perm{{2, 0, 1}});   // (021) = (012)^-1
  auto mu = FinMeasure::make(g, {swap01, cyc012}, {0.7, 0.3});
  auto sym = symmetrize(mu);
  CHECK(sym.weight_of(swap01) == doctest::Approx(0.7));
  CHECK(sym.weight_of(cyc012) == doctest::Approx(0.15));
  CHECK(sym.weight_of(cyc021) == doctest::Approx(0.15));
}

TEST_CASE("validate_reasonable: uniform nearest-neighbour measure on Z") {
  auto g = z_group();
  auto report = validate_reasonable(FinMeasure::uniform(g, {zn(1), zn(-1)}));
  CHECK(report.symmetric);
  CHECK(report.generates == TriState::Yes);
  CHECK(report.second_moment == doctest::Approx(1.0));
  CHECK(report.nonsingular);
  CHECK(report.reasonable());
}

TEST_CASE("validate_reasonable: support in 2Z does not generate Z") {
  auto g = z_group();
  auto report = validate_reasonable(FinMeasure::uniform(g, {zn(2), zn(-2)}));
  CHECK(report.generates == TriState::No);
  CHECK(report.second_moment == doctest::Approx(4.0));
  CHECK_FALSE(report.admissible());
}

TEST_CASE("support generation certificates across kinds") {
  auto s3 = s3_group();
  GroupElement swap01(Perm{{1, 0, 2}});
  GroupElement cyc012(Perm{{1, 2, 0}});
  CHECK(support_generates(FinMeasure::uniform(s3, {swap01, cyc012})) == TriState::Yes);
  CHECK(support_generates(FinMeasure::uniform(s3, {cyc012})) == TriState::No);

  auto heis = Group::make(GroupSpec::heisenberg());
  GroupElement x = heis->generator(0), y = heis->generator(1), z = heis->generator(2);
  CHECK(support_generates(FinMeasure::uniform(heis, {x, y})) == TriState::Yes);
  CHECK(support_generates(FinMeasure::uniform(heis, {x, z})) == TriState::No);
  CHECK(support_generates(FinMeasure::uniform(heis, {heis->mul(x, x), y})) == TriState::No);

  auto f2 = Group::make(GroupSpec::free_group(2, {"x", "y"}));
  GroupElement fx = f2->generator(0), fy = f2->generator(1);
  CHECK(support_generates(FinMeasure::uniform(f2, {fx, fy})) == TriState::Yes);
  // products of {x^2, y} never stabilize within the bound and x stays missing
  CHECK(support_generates(FinMeasure::uniform(f2, {f2->mul(fx, fx), fy})) == TriState::Unknown);

  auto z2 = Group::make(GroupSpec::free_abelian(2, {"s", "t"}));
  CHECK(support_generates(FinMeasure::uniform(
            z2, {GroupElement(IntVec{{1, 0}}), GroupElement(IntVec{{0, 1}})})) == TriState::Yes);
  CHECK(support_generates(FinMeasure::uniform(
            z2, {GroupElement(IntVec{{1, 1}}), GroupElement(IntVec{{1, -1}})})) == TriState::No);

  // diagonal support generates the parity sublattice of Z x Z only
  auto zxz = Group::make(
      GroupSpec::product({GroupSpec::free_abelian(1, {"t"}), GroupSpec::free_abelian(1, {"t"})}));
  GroupElement d1(GroupElement::Tuple{zn(1), zn(1)});
  GroupElement d2(GroupElement::Tuple{zn(1), zn(-1)});
  CHECK(support_generates(FinMeasure::uniform(zxz, {d1, d2})) == TriState::No);
  GroupElement e1(GroupElement::Tuple{zn(1), zn(0)});
  GroupElement e2(GroupElement::Tuple{zn(0), zn(1)});
  CHECK(support_generates(FinMeasure::uniform(zxz, {e1, e2})) == TriState::Yes);
}

TEST_CASE("convolve: point masses, squares, identity") {
  auto g = z_group();
  auto da = FinMeasure::point_mass(g, zn(2));
  auto db = FinMeasure::point_mass(g, zn(3));
  auto dd = convolve(da, db);
  CHECK(dd.size() == 1);
  CHECK(dd.weight_of(zn(5)) == doctest::Approx(1.0));

  auto mu = FinMeasure::uniform(g, {zn(1), zn(-1)});
  auto sq = convolve(mu, mu);
  // oracle: the four products t*t, t*t^-1, t^-1*t, t^-1*t^-1
  CHECK(sq.weight_of(zn(2)) == doctest::Approx(0.25));
  CHECK(sq.weight_of(zn(0)) == doctest::Approx(0.5));
  CHECK(sq.weight_of(zn(-2)) == doctest::Approx(0.25));

  auto ident = convolve(mu, FinMeasure::point_mass(g, zn(0)));
  CHECK(ident.size() == 2);
  CHECK(ident.weight_of(zn(1)) == doctest::Approx(0.5));
}

TEST_CASE("random measures: symmetrize is symmetric, convolve preserves mass") {
  Rng rng(23);
  std::vector<GroupPtr> groups = {z_group(), s3_group(), Group::make(GroupSpec::heisenberg()),
                                  Group::make(GroupSpec::free_group(2))};
  for (const auto& g : groups) {
    for (int trial = 0; trial < 50; ++trial) {
      auto ball = g->cayley_ball(2);
      std::vector<GroupElement> support;
      std::vector<double> weights;
      double mass = 0.0;
      for (const auto& [e, len] : ball) {
        if (rng.uniform() < 0.4) {
          support.push_back(e);
          double w = rng.uniform(0.05, 1.0);
          weights.push_back(w);
          mass += w;
        }
      }
      if (support.empty()) continue;
      for (auto& w : weights) w /= mass;
      auto mu = FinMeasure::make(g, support, weights);

      auto sym = symmetrize(mu);
      CHECK(is_symmetric(sym));
      CHECK(std::abs(sym.total_mass() - 1.0) < 1e-12);

      auto conv = convolve(mu, sym);
      CHECK(std::abs(conv.total_mass() - 1.0) < 1e-12);

      // m2 is inversion-invariant, so symmetrization preserves it
      auto r1 = validate_reasonable(mu);
      auto r2 = validate_reasonable(sym);
      CHECK(r2.second_moment == doctest::Approx(r1.second_moment).epsilon(1e-10));
    }
  }
}

TEST_CASE("measure validation errors") {
  auto g = z_group();
  CHECK_THROWS_AS(FinMeasure::make(g, {zn(1)}, {0.9}), Error);            // mass != 1
  CHECK_THROWS_AS(FinMeasure::make(g, {zn(1), zn(1)}, {0.5, 0.5}), Error);  // duplicate support
  CHECK_THROWS_AS(FinMeasure::make(g, {zn(1), zn(2)}, {1.5, -0.5}), Error);  // negative weight
}
