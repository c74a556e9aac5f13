#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <Eigen/LU>

#include "harmonics/products.hpp"
#include "testkit.hpp"

using namespace harmonics;
using testkit::Rng;

namespace {

GroupPtr zxz_group() {
  return Group::make(
      GroupSpec::product({GroupSpec::free_abelian(1, {"s"}), GroupSpec::free_abelian(1, {"t"})}));
}

GroupElement pair_el(long long a, long long b) {
  return GroupElement(GroupElement::Tuple{GroupElement(IntVec{{a}}), GroupElement(IntVec{{b}})});
}

Matrix rotation(double theta) {
  Matrix r(2, 2);
  r << Complex(std::cos(theta), 0), Complex(-std::sin(theta), 0),
      Complex(std::sin(theta), 0), Complex(std::cos(theta), 0);
  return r;
}

Vector vec2(double a, double b) {
  Vector v(2);
  v << Complex(a, 0), Complex(b, 0);
  return v;
}

// lazy symmetric generating measure on Z
FinMeasure lazy_z_measure(const GroupPtr& z) {
  GroupElement t = z->generator(0);
  return FinMeasure::uniform(z, {z->identity(), t, z->inv(t)});
}

Matrix diag_pm() {
  Matrix d(2, 2);
  d << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(-1, 0);
  return d;
}

}  // namespace

TEST_CASE("restrict_factor: trivial factor action and coordinate extraction") {
  auto g = zxz_group();
  UnitaryRep rep(g, Field::Real, {rotation(M_PI / 2), Matrix::Identity(2, 2)});

  auto factor2 = restrict_rep_to_factor(rep, 1);
  CHECK(factor2.dim() == 2);
  CHECK((factor2.generator_matrix(0) - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(factor2.fixed_subspace().dim() == 2);

  auto c = Cocycle::from_generator_values(rep, {vec2(1, 0), vec2(0, 0)});
  auto c1 = restrict_cocycle_to_factor(c, 0);
  CHECK((c1.generator_value(0) - vec2(1, 0)).norm() < 1e-14);
  CHECK(c1.group().kind() == GroupKind::FreeAbelian);
}

TEST_CASE("restrict_factor: restriction of a validated cocycle on a finite product") {
  auto g = Group::make(
      GroupSpec::product({GroupSpec::finite_cyclic(2), GroupSpec::finite_cyclic(3)}));
  Matrix m2(1, 1), m3(1, 1);
  m2(0, 0) = Complex(-1, 0);
  m3(0, 0) = std::polar(1.0, 2.0 * M_PI / 3.0);
  UnitaryRep rep(g, Field::Complex, {m2, m3});
  Vector v(1);
  v << Complex(0.3, 0.1);
  auto c = Cocycle::coboundary(rep, v);
  for (int j = 0; j < 2; ++j) {
    auto cj = restrict_cocycle_to_factor(c, j);
    CHECK(cj.relator_residual() < 1e-12);
  }
}

TEST_CASE("restrict_factor rejects non-products") {
  auto flat = Group::make(GroupSpec::free_abelian(2, {"s", "t"}));
  UnitaryRep rep(flat, Field::Real, {rotation(0.3), rotation(0.9)});
  CHECK_THROWS_AS(restrict_rep_to_factor(rep, 0), Error);
}

TEST_CASE("product measure multiplies supports and weights") {
  auto g = zxz_group();
  auto mu1 = lazy_z_measure(g->factor(0));
  auto mu2 = lazy_z_measure(g->factor(1));
  std::vector<FinMeasure> mus{mu1, mu2};
  auto mu = product_measure(g, mus);
  CHECK(mu.size() == 9);
  CHECK(mu.weight_of(pair_el(1, -1)) == doctest::Approx(1.0 / 9.0));
  CHECK(is_symmetric(mu));
  CHECK(support_generates(mu) == TriState::Yes);
}

TEST_CASE("decompose: trivial rep is all fixed part") {
  auto g = zxz_group();
  auto rep = UnitaryRep::trivial(g, 1);
  Vector a(1), b(1);
  a << Complex(0.8, 0);
  b << Complex(-0.3, 0);
  auto c = Cocycle::from_generator_values(rep, {a, b});
  std::vector<FinMeasure> mus{lazy_z_measure(g->factor(0)), lazy_z_measure(g->factor(1))};
  auto dec = decompose_product(c, mus);
  CHECK(dec.residual < 1e-12);
  CHECK((dec.beta_fixed.generator_value(0) - a).norm() < 1e-12);
  CHECK((dec.beta_fixed.generator_value(1) - b).norm() < 1e-12);
  for (const auto& fc : dec.factor_cocycles)
    for (int i = 0; i < 2; ++i) CHECK(fc.generator_value(i).norm() < 1e-12);
}

TEST_CASE("decompose: quarter rotation forces the all-zero decomposition") {
  auto g = zxz_group();
  UnitaryRep rep(g, Field::Real, {rotation(M_PI / 2), Matrix::Identity(2, 2)});
  auto c = Cocycle::from_generator_values(rep, {vec2(1, 0), vec2(0, 0)});
  std::vector<FinMeasure> mus{lazy_z_measure(g->factor(0)), lazy_z_measure(g->factor(1))};
  auto dec = decompose_product(c, mus);
  CHECK(dec.residual < 1e-10);
  for (int i = 0; i < 2; ++i) {
    CHECK(dec.beta_fixed.generator_value(i).norm() < 1e-10);
    for (const auto& fc : dec.factor_cocycles) CHECK(fc.generator_value(i).norm() < 1e-10);
  }
  CHECK(dec.harmonize_report.dims.dim_harmonic.value() == 0);
}

TEST_CASE("decompose: diag(1, (-1)^n) against a brute-force constraint oracle") {
  auto g = zxz_group();
  UnitaryRep rep(g, Field::Real, {Matrix::Identity(2, 2), diag_pm()});
  std::vector<FinMeasure> mus{lazy_z_measure(g->factor(0)), lazy_z_measure(g->factor(1))};
  auto mu = product_measure(g, mus);

  // oracle: assemble relator + center constraints on (b(s); b(t)) directly
  // and count the kernel with a rank-revealing LU
  RealMatrix constraints = RealMatrix::Zero(2 + 2, 4);
  RealMatrix d = diag_pm().real();
  RealMatrix eye = RealMatrix::Identity(2, 2);
  constraints.block(0, 0, 2, 2) = eye - d;  // (I - pi(t)) b(s) = (I - pi(s)) b(t) = 0
  // center rows: sum over the 9 support pairs (m, n), m,n in {-1,0,1}
  RealMatrix center = RealMatrix::Zero(2, 4);
  for (int m = -1; m <= 1; ++m) {
    for (int n = -1; n <= 1; ++n) {
      // b(s^m t^n) = sign(m) pi(s)^{min(m,0)} b(s) ... telescoped by hand:
      RealMatrix es = RealMatrix::Zero(2, 2), et = RealMatrix::Zero(2, 2);
      if (m > 0) es = eye;                   // b(s) with pi(s) = I
      if (m < 0) es = -eye;                  // b(s^-1) = -b(s)
      RealMatrix pm_s = eye;                 // pi(s^m) = I
      if (n > 0) et = eye;                   // b(t)
      if (n < 0) et = -d.transpose();        // b(t^-1) = -pi(t)^-1 b(t)
      center.block(0, 0, 2, 2) += (1.0 / 9.0) * es;
      center.block(0, 2, 2, 2) += (1.0 / 9.0) * pm_s * et;
    }
  }
  constraints.block(2, 0, 2, 4) = center;
  Eigen::FullPivLU<RealMatrix> lu(constraints);
  lu.setThreshold(1e-9);
  int oracle_harmonic_dim = 4 - static_cast<int>(lu.rank());
  CHECK(oracle_harmonic_dim == 2);

  auto dims = h1_dimensions(rep, mu);
  CHECK(dims.dim_harmonic.value() == oracle_harmonic_dim);
  CHECK(dims.dim_z1 == 3);
  CHECK(dims.dim_b1 == 1);

  // the harmonic decomposition of a generic class is all fixed part here
  auto c = Cocycle::from_generator_values(rep, {vec2(0.7, 0), vec2(0.4, 1.2)});
  auto dec = decompose_product(c, mus);
  CHECK(dec.residual < 1e-10);
  CHECK(dec.invariance_residual < 1e-8);
  for (const auto& fc : dec.factor_cocycles)
    for (int i = 0; i < 2; ++i) CHECK(fc.generator_value(i)(1).real() == doctest::Approx(0.0));

  auto breakdown = product_dimension_breakdown(rep, mus);
  CHECK(breakdown.total == 2);
  CHECK(breakdown.fixed_term == 2);
  CHECK(breakdown.factor_terms == std::vector<int>{0, 0});
  CHECK(breakdown.additivity_holds());
}

TEST_CASE("factor restrictions of a harmonic cocycle are harmonic and invariant") {
  Rng rng(83);
  auto g = zxz_group();
  // two commuting rotation blocks: factor 1 acts on the first block only
  Matrix ps = Matrix::Identity(4, 4), pt = Matrix::Identity(4, 4);
  ps.topLeftCorner(2, 2) = rotation(0.3);
  pt.bottomRightCorner(2, 2) = rotation(0.7);
  UnitaryRep rep(g, Field::Real, {ps, pt});
  std::vector<FinMeasure> mus{lazy_z_measure(g->factor(0)), lazy_z_measure(g->factor(1))};
  auto mu = product_measure(g, mus);

  for (int trial = 0; trial < 10; ++trial) {
    Matrix basis = z1_basis(rep);
    Vector coeff(basis.cols());
    for (Eigen::Index i = 0; i < coeff.size(); ++i) coeff(i) = Complex(rng.normal(), 0);
    auto c = cocycle_from_stacked(rep, basis * coeff);
    auto dec = decompose_product(c, mus);
    const Cocycle& h = dec.harmonize_report.harmonic;

    CHECK(dec.residual < 1e-7);
    CHECK(dec.invariance_residual < 1e-8);

    for (int j = 0; j < 2; ++j) {
      auto rj = restrict_cocycle_to_factor(h, j);
      auto cj = mu_center(rj, mus[j]);
      CHECK(cj.norm < 1e-8);
    }

    // cross evaluation: h(g1, g2) = beta1(g1, e) + beta2(e, g2) + fixed(g1, g2)
    for (int t = 0; t < 20; ++t) {
      long long a = rng.uniform_int(-3, 3), b = rng.uniform_int(-3, 3);
      Vector lhs = h.evaluate(pair_el(a, b));
      Vector rhs = dec.factor_cocycles[0].evaluate(pair_el(a, 0)) +
                   dec.factor_cocycles[1].evaluate(pair_el(0, b)) +
                   dec.beta_fixed.evaluate(pair_el(a, b));
      CHECK((lhs - rhs).norm() < 1e-7);
    }
  }
}

TEST_CASE("dimension additivity across representation shapes") {
  auto g = zxz_group();
  std::vector<FinMeasure> mus{lazy_z_measure(g->factor(0)), lazy_z_measure(g->factor(1))};

  std::vector<UnitaryRep> reps;
  reps.emplace_back(g, Field::Real,
                    std::vector<Matrix>{rotation(M_PI / 2), Matrix::Identity(2, 2)});
  reps.emplace_back(g, Field::Real,
                    std::vector<Matrix>{Matrix::Identity(2, 2), diag_pm()});
  reps.push_back(UnitaryRep::trivial(g, 2));
  {
    Matrix ps = Matrix::Identity(4, 4), pt = Matrix::Identity(4, 4);
    ps.topLeftCorner(2, 2) = rotation(0.3);
    pt.bottomRightCorner(2, 2) = rotation(0.7);
    reps.emplace_back(g, Field::Real, std::vector<Matrix>{ps, pt});
  }
  {
    Matrix es(1, 1), et(1, 1);
    es(0, 0) = std::polar(1.0, 0.4);
    et(0, 0) = std::polar(1.0, 1.1);
    reps.emplace_back(g, Field::Complex, std::vector<Matrix>{es, et});
  }
  for (const auto& rep : reps) {
    auto breakdown = product_dimension_breakdown(rep, mus);
    CAPTURE(breakdown.total);
    CHECK(breakdown.additivity_holds());
  }
}

TEST_CASE("decompose_product rejects non-products and wrong measure counts") {
  auto flat = Group::make(GroupSpec::free_abelian(2, {"s", "t"}));
  auto c = Cocycle::zero(UnitaryRep::trivial(flat, 1));
  auto z = Group::make(GroupSpec::free_abelian(1, {"t"}));
  std::vector<FinMeasure> mus{lazy_z_measure(z), lazy_z_measure(z)};
  CHECK_THROWS_AS(decompose_product(c, mus), Error);

  auto g = zxz_group();
  auto c2 = Cocycle::zero(UnitaryRep::trivial(g, 1));
  std::vector<FinMeasure> one{lazy_z_measure(g->factor(0))};
  CHECK_THROWS_AS(decompose_product(c2, one), Error);
}
