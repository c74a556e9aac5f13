#include "harmonics/selftest.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include <Eigen/QR>

#include "rng.hpp"

namespace harmonics {

namespace {

using detail::Rng;

// ---------------------------------------------------------------------------
// Fixture pool

Matrix rotation(double theta) {
  Matrix r(2, 2);
  r << Complex(std::cos(theta), 0), Complex(-std::sin(theta), 0),
      Complex(std::sin(theta), 0), Complex(std::cos(theta), 0);
  return r;
}

Matrix diag_pm() {
  Matrix d(2, 2);
  d << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(-1, 0);
  return d;
}

GroupPtr z_group() { return Group::make(GroupSpec::free_abelian(1, {"t"})); }
GroupPtr z2_flat() { return Group::make(GroupSpec::free_abelian(2, {"s", "t"})); }
GroupPtr f2_group() { return Group::make(GroupSpec::free_group(2, {"x", "y"})); }
GroupPtr cyclic(long long n) { return Group::make(GroupSpec::finite_cyclic(n)); }
GroupPtr s3_group() {
  return Group::make(GroupSpec::finite_perm(3, {{1, 0, 2}, {1, 2, 0}}, {"a", "b"}));
}
GroupPtr d4_group() {
  // r = (0123), s = reflection swapping 1 and 3
  return Group::make(GroupSpec::finite_perm(4, {{1, 2, 3, 0}, {0, 3, 2, 1}}, {"r", "s"}));
}
GroupPtr heis_group() { return Group::make(GroupSpec::heisenberg()); }
GroupPtr zxz_group() {
  return Group::make(
      GroupSpec::product({GroupSpec::free_abelian(1, {"s"}), GroupSpec::free_abelian(1, {"t"})}));
}
GroupPtr zxc3_group() {
  return Group::make(
      GroupSpec::product({GroupSpec::free_abelian(1, {"t"}), GroupSpec::finite_cyclic(3)}));
}

Matrix random_unitary(Rng& rng, int dim, bool complex_field) {
  Matrix a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      a(i, j) = complex_field ? rng.normal_complex() : Complex(rng.normal(), 0.0);
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    Complex d = r(i, i);
    double ad = std::abs(d);
    q.col(i) *= ad > 0 ? d / ad : Complex(1, 0);
  }
  return q;
}

Vector random_vector(Rng& rng, int dim, bool complex_field) {
  Vector v(dim);
  for (int i = 0; i < dim; ++i)
    v(i) = complex_field ? rng.normal_complex() : Complex(rng.normal(), 0.0);
  return v;
}

// commuting unitaries: a common random eigenbasis with independent phases
std::vector<Matrix> commuting_family(Rng& rng, int dim, int count,
                                     const std::vector<long long>& orders) {
  Matrix v = random_unitary(rng, dim, true);
  std::vector<Matrix> out;
  for (int k = 0; k < count; ++k) {
    Matrix d = Matrix::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
      if (orders[k] > 0) {
        long long j = rng.uniform_int(0, orders[k] - 1);
        d(i, i) = std::polar(1.0, 2.0 * M_PI * static_cast<double>(j) /
                                      static_cast<double>(orders[k]));
      } else {
        d(i, i) = std::polar(1.0, rng.uniform(0.0, 2.0 * M_PI));
      }
    }
    out.push_back(v * d * v.adjoint());
  }
  return out;
}

UnitaryRep s3_irrep(const GroupPtr& s3, int which) {
  // which: 0 = sign, 1 = standard
  if (which == 0) {
    Matrix a(1, 1), b(1, 1);
    a(0, 0) = Complex(-1, 0);
    b(0, 0) = Complex(1, 0);
    return UnitaryRep(s3, Field::Real, {a, b});
  }
  return UnitaryRep(s3, Field::Real, {diag_pm(), rotation(2.0 * M_PI / 3.0)});
}

std::vector<UnitaryRep> d4_nontrivial_irreps(const GroupPtr& d4) {
  std::vector<UnitaryRep> reps;
  auto chr = [&](double r, double s) {
    Matrix mr(1, 1), ms(1, 1);
    mr(0, 0) = Complex(r, 0);
    ms(0, 0) = Complex(s, 0);
    return UnitaryRep(d4, Field::Real, {mr, ms});
  };
  reps.push_back(chr(1, -1));
  reps.push_back(chr(-1, 1));
  reps.push_back(chr(-1, -1));
  reps.emplace_back(d4, Field::Real, std::vector<Matrix>{rotation(M_PI / 2), diag_pm()});
  return reps;
}

UnitaryRep cyclic_character(const GroupPtr& cn, long long j) {
  Matrix m(1, 1);
  m(0, 0) = std::polar(1.0, 2.0 * M_PI * static_cast<double>(j) /
                                static_cast<double>(cn->spec().modulus));
  return UnitaryRep(cn, Field::Complex, {m});
}

UnitaryRep heis_clock_shift(const GroupPtr& heis, int n) {
  Matrix shift = Matrix::Zero(n, n), clock = Matrix::Zero(n, n);
  Complex omega = std::polar(1.0, 2.0 * M_PI / static_cast<double>(n));
  for (int i = 0; i < n; ++i) {
    shift((i + 1) % n, i) = 1;
    clock(i, i) = std::pow(omega, i);
  }
  return UnitaryRep(heis, Field::Complex,
                    {clock, shift, omega * Matrix::Identity(n, n)});
}

UnitaryRep random_rep(Rng& rng, const GroupPtr& g) {
  switch (g->kind()) {
    case GroupKind::FreeAbelian: {
      int k = g->generator_count();
      if (rng.uniform() < 0.4) {
        // real rotation blocks, one independent angle per generator and block
        int blocks = static_cast<int>(rng.uniform_int(1, 2));
        std::vector<Matrix> mats(k, Matrix::Zero(2 * blocks, 2 * blocks));
        for (int i = 0; i < k; ++i)
          for (int b = 0; b < blocks; ++b)
            mats[i].block(2 * b, 2 * b, 2, 2) = rotation(rng.uniform(-2.5, 2.5));
        return UnitaryRep(g, Field::Real, std::move(mats));
      }
      int dim = static_cast<int>(rng.uniform_int(1, 4));
      return UnitaryRep(g, Field::Complex,
                        commuting_family(rng, dim, k, std::vector<long long>(k, 0)));
    }
    case GroupKind::Free: {
      int dim = static_cast<int>(rng.uniform_int(1, 4));
      bool cplx = rng.uniform() < 0.5;
      std::vector<Matrix> mats;
      for (int i = 0; i < g->generator_count(); ++i)
        mats.push_back(random_unitary(rng, dim, cplx));
      return UnitaryRep(g, cplx ? Field::Complex : Field::Real, std::move(mats));
    }
    case GroupKind::FiniteCyclic: {
      int dim = static_cast<int>(rng.uniform_int(1, 4));
      return UnitaryRep(
          g, Field::Complex,
          commuting_family(rng, dim, 1, {g->spec().modulus}));
    }
    case GroupKind::FinitePerm: {
      // direct sums of the S3 irreducibles conjugated by a random unitary
      auto rep = s3_irrep(g, 1);
      if (rng.uniform() < 0.5) rep = direct_sum(rep, s3_irrep(g, 0));
      if (rng.uniform() < 0.3) rep = direct_sum(rep, s3_irrep(g, 1));
      return conjugate(rep, random_unitary(rng, rep.dim(), true));
    }
    case GroupKind::Heisenberg: {
      auto rep = heis_clock_shift(g, 3);
      if (rng.uniform() < 0.4) rep = direct_sum(rep, UnitaryRep::trivial(g, 1, Field::Complex));
      return conjugate(rep, random_unitary(rng, rep.dim(), true));
    }
    case GroupKind::Product: {
      // commuting family split across the factors, with finite orders where
      // a factor is cyclic
      int dim = static_cast<int>(rng.uniform_int(1, 4));
      std::vector<long long> orders;
      for (int i = 0; i < g->generator_count(); ++i) {
        auto [j, local] = g->factor_of_generator(i);
        orders.push_back(g->factor(j)->kind() == GroupKind::FiniteCyclic
                             ? g->factor(j)->spec().modulus
                             : 0);
      }
      return UnitaryRep(g, Field::Complex,
                        commuting_family(rng, dim, g->generator_count(), orders));
    }
  }
  fail(ErrorKind::InvalidSpec, "unreachable");
}

Cocycle random_cocycle(Rng& rng, const UnitaryRep& rep) {
  Matrix basis = z1_basis(rep);
  if (basis.cols() == 0) return Cocycle::zero(rep);
  Vector coeff(basis.cols());
  for (Eigen::Index i = 0; i < coeff.size(); ++i)
    coeff(i) = rep.complex_field() ? rng.normal_complex() : Complex(rng.normal(), 0.0);
  return cocycle_from_stacked(rep, basis * coeff);
}

FinMeasure random_symmetric_measure(Rng& rng, const GroupPtr& g, bool lazy) {
  std::map<GroupElement, double> acc;
  double mass = 0.0;
  for (int i = 0; i < g->generator_count(); ++i) {
    double w = rng.uniform(0.2, 1.0);
    acc[g->generator(i)] += w;
    mass += w;
  }
  if (lazy) {
    double w = rng.uniform(0.3, 1.0);
    acc[g->identity()] += w;
    mass += w;
  }
  std::vector<GroupElement> support;
  std::vector<double> weights;
  for (auto& [e, w] : acc) {
    support.push_back(e);
    weights.push_back(w / mass);
  }
  return symmetrize(FinMeasure::make(g, std::move(support), std::move(weights)));
}

FinMeasure random_measure(Rng& rng, const GroupPtr& g) {
  auto ball = g->cayley_ball(2);
  std::map<GroupElement, double> acc;
  double mass = 0.0;
  for (const auto& [e, len] : ball) {
    if (rng.uniform() < 0.3) {
      double w = rng.uniform(0.1, 1.0);
      acc[e] += w;
      mass += w;
    }
  }
  if (acc.empty()) {
    acc[g->generator(0)] = 1.0;
    mass = 1.0;
  }
  std::vector<GroupElement> support;
  std::vector<double> weights;
  for (auto& [e, w] : acc) {
    support.push_back(e);
    weights.push_back(w / mass);
  }
  return FinMeasure::make(g, std::move(support), std::move(weights));
}

// ---------------------------------------------------------------------------
// Check harness

class Checker {
 public:
  void expect(bool condition, const std::string& message) {
    if (!condition) {
      ok_ = false;
      if (!failures_.str().empty()) failures_ << "; ";
      failures_ << message;
    }
  }
  void track(const std::string& name, double value) {
    auto [it, inserted] = maxima_.emplace(name, value);
    if (!inserted) it->second = std::max(it->second, value);
  }
  void bound(const std::string& name, double value, double limit) {
    track(name, value);
    expect(value < limit, name + " " + std::to_string(value) + " >= " + std::to_string(limit));
  }
  bool ok() const { return ok_; }
  std::string details() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [name, value] : maxima_) {
      if (!first) out << ", ";
      first = false;
      out << name << "=" << value;
    }
    std::string fails = failures_.str();
    if (!fails.empty()) out << (first ? "" : "; ") << "FAIL: " << fails;
    return out.str();
  }

 private:
  bool ok_ = true;
  std::map<std::string, double> maxima_;
  std::ostringstream failures_;
};

// ---------------------------------------------------------------------------
// Criterion checks

void check_energy_lemmas(Rng& rng, Checker& c) {
  std::vector<GroupPtr> groups = {z_group(), z2_flat(), f2_group(), cyclic(5),
                                  s3_group(), heis_group()};
  const int instances = 500;
  for (int t = 0; t < instances; ++t) {
    const auto& g = groups[static_cast<std::size_t>(t) % groups.size()];
    auto rep = random_rep(rng, g);
    auto beta = random_cocycle(rng, rep);
    auto mu = random_measure(rng, g);
    bool cplx = rep.complex_field();
    Vector v = random_vector(rng, rep.dim(), cplx);
    Vector w = random_vector(rng, rep.dim(), cplx);

    auto quad = [&](const Vector& x) {
      double s = 0.0;
      for (std::size_t i = 0; i < mu.size(); ++i) {
        Vector d = rep.evaluate(mu.support()[i]) * x - x;
        s += mu.weights()[i] * d.squaredNorm();
      }
      return s;
    };
    auto pair_sum = [&](const Vector& x, const Vector& dir) {
      double s = 0.0;
      for (std::size_t i = 0; i < mu.size(); ++i) {
        const GroupElement& e = mu.support()[i];
        GroupElement einv = g->inv(e);
        Vector a1 = rep.evaluate(e) * x - x + beta.evaluate(e);
        Vector a2 = rep.evaluate(einv) * x - x + beta.evaluate(einv);
        s += mu.weights()[i] * (real_inner(a1, dir) + real_inner(a2, dir));
      }
      return s;
    };

    double ev = energy_at(beta, mu, v);
    double e0 = energy(beta, mu);
    c.bound("lemma_increment", std::abs((energy_at(beta, mu, v + w) - ev) -
                                        (quad(w) - 2.0 * pair_sum(v, w))),
            1e-9);
    c.bound("lemma_shift",
            std::abs((ev - e0) - (quad(v) - 2.0 * pair_sum(Vector::Zero(rep.dim()), v))), 1e-9);
    c.bound("lemma_derivative_form",
            std::abs((ev - e0) - (quad(v) + directional_derivative(beta, mu, v))), 1e-9);

    // closed-form derivative equals -4 Re<symmetrized center, w>
    auto bar = symmetrize(mu);
    double via_center = -4.0 * real_inner(mu_center(beta, bar).center, w);
    c.bound("lemma_center_form",
            std::abs(directional_derivative(beta, mu, w) - via_center), 1e-9);

    double scalar = rng.uniform(-3.0, 3.0);
    double d1 = directional_derivative(beta, mu, scalar * v);
    double d2 = scalar * directional_derivative(beta, mu, v);
    c.bound("lemma_homogeneity", std::abs(d1 - d2) / std::max(1.0, std::abs(d2)), 1e-12);

    // the center update never increases energy
    Vector center = mu_center(beta, bar).center;
    c.expect(energy_at(beta, mu, center) <= e0 + 1e-12, "center update increased energy");
  }
}

struct AdmissibleInstance {
  UnitaryRep rep;
  Cocycle cocycle;
  FinMeasure mu;
};

AdmissibleInstance admissible_instance(Rng& rng, int index) {
  std::vector<GroupPtr> groups = {z_group(), z2_flat(), f2_group(), cyclic(5), s3_group()};
  const auto& g = groups[static_cast<std::size_t>(index) % groups.size()];
  auto rep = random_rep(rng, g);
  auto beta = random_cocycle(rng, rep);
  auto mu = random_symmetric_measure(rng, g, rng.uniform() < 0.5);
  return AdmissibleInstance{std::move(rep), std::move(beta), std::move(mu)};
}

void check_uniqueness(Rng& rng, Checker& c) {
  for (int t = 0; t < 100; ++t) {
    auto inst = admissible_instance(rng, t);
    auto base = harmonize_direct(inst.cocycle, inst.mu);
    for (int s = 0; s < 20; ++s) {
      Vector v = random_vector(rng, inst.rep.dim(), inst.rep.complex_field());
      auto shifted = add(inst.cocycle, Cocycle::coboundary(inst.rep, v));
      auto other = harmonize_direct(shifted, inst.mu);
      double dist = 0.0;
      for (int i = 0; i < inst.rep.group().generator_count(); ++i)
        dist = std::max(dist, (base.harmonic.generator_value(i) -
                               other.harmonic.generator_value(i))
                                  .norm());
      c.bound("uniqueness_distance", dist, 1e-6);
    }
  }
}

void check_minimizer(Rng& rng, Checker& c) {
  for (int t = 0; t < 100; ++t) {
    auto inst = admissible_instance(rng, t);
    auto report = harmonize_direct(inst.cocycle, inst.mu);
    double e0 = energy(report.harmonic, inst.mu);
    for (int s = 0; s < 100; ++s) {
      Vector w = random_vector(rng, inst.rep.dim(), inst.rep.complex_field());
      c.bound("derivative_at_minimum",
              std::abs(directional_derivative(report.harmonic, inst.mu, w)), 1e-8);
      double shifted = energy_at(report.harmonic, inst.mu, w);
      c.expect(e0 <= shifted + 1e-12, "harmonized energy above a shifted energy");
      c.track("energy_slack", std::max(0.0, e0 - shifted));
    }
  }
}

void check_descent(Rng& rng, Checker& c) {
  int converged = 0;
  for (int t = 0; t < 50; ++t) {
    std::vector<GroupPtr> groups = {z_group(), z2_flat(), f2_group(), cyclic(5), s3_group()};
    const auto& g = groups[static_cast<std::size_t>(t) % groups.size()];
    auto rep = random_rep(rng, g);
    auto beta = random_cocycle(rng, rep);
    auto mu = random_symmetric_measure(rng, g, true);  // lazy: spectrum in (-1, 1]
    try {
      auto report = harmonize_iterative(beta, mu, 1e-10, 50000);
      ++converged;
      double worst_uptick = 0.0;
      for (std::size_t i = 1; i < report.energy_trace.size(); ++i)
        worst_uptick = std::max(worst_uptick,
                                report.energy_trace[i] - report.energy_trace[i - 1]);
      c.track("energy_uptick", worst_uptick);
      c.expect(worst_uptick <= 1e-12, "energy increased along the iteration");
      auto direct = harmonize_direct(beta, mu);
      double dist = 0.0;
      for (int i = 0; i < rep.group().generator_count(); ++i)
        dist = std::max(dist, (report.harmonic.generator_value(i) -
                               direct.harmonic.generator_value(i))
                                  .norm());
      c.bound("method_agreement", dist, 1e-6);
    } catch (const NoConvergenceError&) {
      // counted below; descent monotonicity was asserted inside the solver
    }
  }
  c.expect(converged == 50, "iterative harmonizer failed to converge on " +
                                std::to_string(50 - converged) + " lazy instances");
}

void check_dichotomy(Rng& rng, Checker& c) {
  auto measures_for = [&](const GroupPtr& g) {
    std::vector<FinMeasure> mus;
    mus.push_back(symmetrize(FinMeasure::uniform_on_generators(g)));
    mus.push_back(random_symmetric_measure(rng, g, true));
    mus.push_back(random_symmetric_measure(rng, g, false));
    return mus;
  };

  auto expect_zero = [&](const UnitaryRep& rep, const char* label) {
    for (const auto& mu : measures_for(rep.group_ptr())) {
      auto dims = h1_dimensions(rep, mu);
      c.expect(dims.dim_harmonic.value() == 0,
               std::string(label) + ": expected dim_harmonic 0, got " +
                   std::to_string(dims.dim_harmonic.value()));
    }
  };

  auto s3 = s3_group();
  expect_zero(s3_irrep(s3, 0), "S3 sign");
  expect_zero(s3_irrep(s3, 1), "S3 standard");
  auto d4 = d4_group();
  for (const auto& rep : d4_nontrivial_irreps(d4)) expect_zero(rep, "D4 irrep");
  for (long long n = 2; n <= 7; ++n) {
    auto cn = cyclic(n);
    for (long long j = 1; j < n; ++j) expect_zero(cyclic_character(cn, j), "Z/n character");
  }

  auto z = z_group();
  for (const auto& mu : measures_for(z)) {
    auto dims = h1_dimensions(UnitaryRep::trivial(z, 1), mu);
    c.expect(dims.dim_harmonic.value() == 1, "Z trivial: expected dim_harmonic 1");
  }
  auto f2 = f2_group();
  for (const auto& mu : measures_for(f2)) {
    auto dims = h1_dimensions(UnitaryRep::trivial(f2, 1), mu);
    c.expect(dims.dim_harmonic.value() >= 1, "F2 trivial: expected dim_harmonic >= 1");
    c.expect(dims.dim_harmonic.value() == 2, "F2 trivial: expected dim_harmonic 2");
  }
}

void check_products(Rng& rng, Checker& c) {
  struct ProductCase {
    GroupPtr group;
    std::vector<UnitaryRep> reps;
  };
  std::vector<ProductCase> cases;
  {
    auto g = zxz_group();
    std::vector<UnitaryRep> reps;
    reps.emplace_back(g, Field::Real,
                      std::vector<Matrix>{rotation(M_PI / 2), Matrix::Identity(2, 2)});
    reps.emplace_back(g, Field::Real, std::vector<Matrix>{Matrix::Identity(2, 2), diag_pm()});
    {
      Matrix ps = Matrix::Identity(4, 4), pt = Matrix::Identity(4, 4);
      ps.topLeftCorner(2, 2) = rotation(0.3);
      pt.bottomRightCorner(2, 2) = rotation(0.7);
      reps.emplace_back(g, Field::Real, std::vector<Matrix>{ps, pt});
    }
    reps.push_back(UnitaryRep::trivial(g, 2));
    reps.push_back(random_rep(rng, g));
    cases.push_back({g, std::move(reps)});
  }
  {
    auto g = zxc3_group();
    std::vector<UnitaryRep> reps;
    {
      Matrix e1(1, 1), w1(1, 1);
      e1(0, 0) = std::polar(1.0, 0.4);
      w1(0, 0) = std::polar(1.0, 2.0 * M_PI / 3.0);
      reps.emplace_back(g, Field::Complex, std::vector<Matrix>{e1, w1});
    }
    reps.emplace_back(g, Field::Real,
                      std::vector<Matrix>{Matrix::Identity(2, 2), rotation(2.0 * M_PI / 3.0)});
    {
      Matrix ps = Matrix::Identity(4, 4), pt = Matrix::Identity(4, 4);
      ps.topLeftCorner(2, 2) = rotation(0.5);
      pt.bottomRightCorner(2, 2) = rotation(2.0 * M_PI / 3.0);
      reps.emplace_back(g, Field::Real, std::vector<Matrix>{ps, pt});
    }
    reps.push_back(random_rep(rng, g));
    cases.push_back({g, std::move(reps)});
  }

  for (const auto& pc : cases) {
    std::vector<FinMeasure> mus;
    for (int j = 0; j < pc.group->factor_count(); ++j)
      mus.push_back(random_symmetric_measure(rng, pc.group->factor(j), true));
    for (const auto& rep : pc.reps) {
      for (int t = 0; t < 3; ++t) {
        auto beta = random_cocycle(rng, rep);
        auto dec = decompose_product(beta, mus);
        c.bound("decomposition_residual", dec.residual, 1e-7);
        c.bound("invariance_residual", dec.invariance_residual, 1e-8);
      }
      auto breakdown = product_dimension_breakdown(rep, mus);
      c.expect(breakdown.additivity_holds(), "dimension additivity failed");
    }
  }
}

void check_induction(Rng& rng, Checker& c) {
  auto z = z_group();
  auto lambda = Group::make(GroupSpec::free_abelian(1, {"u"}));
  GroupElement two(IntVec{{2}});
  GroupElement one(IntVec{{1}});
  auto sub = FiniteIndexSubgroup::make(z, lambda, {two}, {z->identity(), one});

  std::vector<UnitaryRep> bases;
  bases.push_back(UnitaryRep::trivial(lambda, 1));
  for (double theta : {0.0, M_PI / 2, 0.3})
    bases.emplace_back(lambda, Field::Real, std::vector<Matrix>{rotation(theta)});
  for (const auto& base : bases) {
    auto ind = induce_rep(sub, base);
    c.expect(h1_dimensions(base).dim_h1 == h1_dimensions(ind.induced).dim_h1,
             "2Z < Z transfer mismatch");
  }

  auto s3 = s3_group();
  auto c3 = cyclic(3);
  auto a3 = FiniteIndexSubgroup::make(s3, c3, {GroupElement(Perm{{1, 2, 0}})},
                                      {s3->identity(), GroupElement(Perm{{1, 0, 2}})});
  for (long long j = 0; j < 3; ++j) {
    auto chi = cyclic_character(c3, j);
    auto ind = induce_rep(a3, chi);
    c.expect(h1_dimensions(chi).dim_h1 == h1_dimensions(ind.induced).dim_h1,
             "A3 < S3 transfer mismatch");
  }

  // composition law, exact arithmetic
  for (int t = 0; t < 500; ++t) {
    GroupElement g(IntVec{{rng.uniform_int(-50, 50)}});
    GroupElement h(IntVec{{rng.uniform_int(-50, 50)}});
    GroupElement f = sub.coset_reps()[static_cast<std::size_t>(rng.uniform_int(0, 1))];
    auto lhs = sub.alpha(z->mul(g, h), f);
    auto inner = sub.alpha(h, f);
    auto outer = sub.alpha(g, inner.f_new);
    c.expect(lhs.gamma_ambient == z->mul(inner.gamma_ambient, outer.gamma_ambient) &&
                 lhs.f_new == outer.f_new,
             "alpha composition law failed");
  }

  for (int i = 0; i < z->generator_count(); ++i)
    c.expect(std::isfinite(sub.alpha_second_moment(i)), "alpha integrability not finite");
}

void check_compact_case(Rng& rng, Checker& c) {
  std::vector<GroupPtr> finite_groups = {s3_group(), d4_group()};
  for (long long n = 2; n <= 7; ++n) finite_groups.push_back(cyclic(n));
  finite_groups.push_back(Group::make(
      GroupSpec::product({GroupSpec::finite_cyclic(2), GroupSpec::finite_cyclic(3)})));
  for (const auto& g : finite_groups) {
    std::vector<FinMeasure> mus;
    mus.push_back(symmetrize(FinMeasure::uniform_on_generators(g)));
    mus.push_back(random_symmetric_measure(rng, g, true));
    mus.push_back(random_symmetric_measure(rng, g, false));
    for (const auto& mu : mus) {
      auto result = harmonic_function_space(mu);
      c.expect(result.admissible, "finite-group fixture measure should be admissible");
      c.expect(result.dimension == 1,
               "harmonic function space dimension " + std::to_string(result.dimension) +
                   " on a finite group");
    }
  }

  auto z = z_group();
  auto mu = FinMeasure::uniform(z, {GroupElement(IntVec{{1}}), GroupElement(IntVec{{-1}})});
  auto f = dirichlet_solve(mu, 5,
                           {{GroupElement(IntVec{{5}}), 5.0}, {GroupElement(IntVec{{-5}}), -5.0}});
  double worst = 0.0;
  for (long long n = -5; n <= 5; ++n)
    worst = std::max(worst,
                     std::abs(f.values.at(GroupElement(IntVec{{n}})) - static_cast<double>(n)));
  c.bound("dirichlet_line_error", worst, 1e-9);
}

void check_phiv(Rng&, Checker& c) {
  auto z = z_group();
  auto triv = UnitaryRep::trivial(z, 1);
  Vector one(1);
  one << Complex(1, 0);
  auto cz = Cocycle::from_generator_values(triv, {one});
  auto muz = FinMeasure::uniform(z, {GroupElement(IntVec{{1}}), GroupElement(IntVec{{-1}})});
  auto tabz = lipschitz_from_cocycle(cz, muz, one, 5);
  c.expect(tabz.certificate.pass, "phi_v certificate failed on Z");
  c.bound("phiv_residual_z", tabz.certificate.max_harmonic_residual, 1e-8);

  auto f2 = f2_group();
  auto triv2 = UnitaryRep::trivial(f2, 2);
  Vector bx(2), by(2), v(2);
  bx << Complex(1, 0), Complex(0, 0);
  by << Complex(0, 0), Complex(1, 0);
  v << Complex(1, 0), Complex(1, 0);
  auto cf = Cocycle::from_generator_values(triv2, {bx, by});
  auto muf = FinMeasure::uniform_on_generators(f2);
  auto tabf = lipschitz_from_cocycle(cf, muf, v, 4);
  c.expect(tabf.certificate.pass, "phi_v certificate failed on F2");
  c.bound("phiv_residual_f2", tabf.certificate.max_harmonic_residual, 1e-8);
  c.expect(tabf.certificate.empirical_constant <= tabf.certificate.analytic_bound + 1e-9,
           "phi_v Lipschitz bound violated on F2");
}

// ---------------------------------------------------------------------------
// Module invariants beyond the numbered criteria

void check_group_invariants(Rng& rng, Checker& c) {
  std::vector<GroupPtr> groups = {z2_flat(), f2_group(), s3_group(), heis_group()};
  for (const auto& g : groups) {
    auto ball = g->cayley_ball(3);
    for (int t = 0; t < 200; ++t) {
      const auto& a = ball[rng.uniform_int(0, static_cast<long long>(ball.size()) - 1)].element;
      const auto& b = ball[rng.uniform_int(0, static_cast<long long>(ball.size()) - 1)].element;
      c.expect(g->mul(g->mul(a, b), g->inv(b)) == a, "group law failed");
      c.expect(g->word_length(g->mul(a, b)) <= g->word_length(a) + g->word_length(b),
               "triangle inequality failed");
      c.expect(g->word_length(g->inv(a)) == g->word_length(a), "metric not symmetric");
    }
    auto small = g->cayley_ball(2);
    std::map<GroupElement, int> lengths;
    for (const auto& [e, l] : ball) lengths[e] = l;
    for (const auto& [e, l] : small)
      c.expect(lengths.count(e) == 1 && lengths[e] == l, "balls are inconsistent");
  }
}

void check_measure_invariants(Rng& rng, Checker& c) {
  std::vector<GroupPtr> groups = {z_group(), s3_group(), heis_group()};
  for (const auto& g : groups) {
    for (int t = 0; t < 20; ++t) {
      auto mu = random_measure(rng, g);
      auto bar = symmetrize(mu);
      c.expect(is_symmetric(bar), "symmetrization is not symmetric");
      c.track("measure_mass_defect", std::abs(convolve(mu, bar).total_mass() - 1.0));
      c.expect(std::abs(convolve(mu, bar).total_mass() - 1.0) < 1e-12,
               "convolution mass defect");
      auto r1 = validate_reasonable(mu);
      auto r2 = validate_reasonable(bar);
      c.expect(std::abs(r1.second_moment - r2.second_moment) < 1e-10,
               "second moment changed under symmetrization");
    }
  }
}

void check_rep_invariants(Rng& rng, Checker& c) {
  std::vector<GroupPtr> groups = {z2_flat(), s3_group(), heis_group()};
  for (const auto& g : groups) {
    auto rep = random_rep(rng, g);
    rep.validate(50, rng.next_u64());
    auto ball = g->cayley_ball(3);
    for (int t = 0; t < 50; ++t) {
      const auto& e = ball[rng.uniform_int(0, static_cast<long long>(ball.size()) - 1)].element;
      auto word = g->canonical_word(e);
      for (int k = 0; k < 3; ++k) {
        int l = static_cast<int>(rng.uniform_int(1, g->generator_count()));
        std::size_t pos =
            static_cast<std::size_t>(rng.uniform_int(0, static_cast<long long>(word.size())));
        word.insert(word.begin() + static_cast<std::ptrdiff_t>(pos), {l, -l});
      }
      c.track("rep_word_independence",
              (rep.word_matrix(word) - rep.evaluate(e)).cwiseAbs().maxCoeff());
      c.expect((rep.word_matrix(word) - rep.evaluate(e)).cwiseAbs().maxCoeff() < 1e-10,
               "evaluation depends on the word");
    }
    for (int t = 0; t < 10; ++t) {
      auto mu = random_measure(rng, g);
      Eigen::JacobiSVD<Matrix> svd(rep.pi_mu(mu));
      c.expect(svd.singularValues()(0) <= 1.0 + 1e-12, "pi(mu) is not a contraction");
    }
  }
}

void check_cocycle_invariants(Rng& rng, Checker& c) {
  std::vector<GroupPtr> groups = {z2_flat(), f2_group(), s3_group(), heis_group()};
  for (const auto& g : groups) {
    auto rep = random_rep(rng, g);
    auto beta = random_cocycle(rng, rep);
    double sup = 0.0;
    for (int i = 0; i < g->generator_count(); ++i)
      sup = std::max(sup, beta.generator_value(i).norm());
    auto ball = g->cayley_ball(3);
    for (int t = 0; t < 250; ++t) {
      const auto& a = ball[rng.uniform_int(0, static_cast<long long>(ball.size()) - 1)].element;
      const auto& b = ball[rng.uniform_int(0, static_cast<long long>(ball.size()) - 1)].element;
      double identity_residual =
          (beta.evaluate(g->mul(a, b)) -
           (rep.evaluate(a) * beta.evaluate(b) + beta.evaluate(a)))
              .norm();
      c.track("cocycle_identity", identity_residual);
      c.expect(identity_residual < 1e-8, "cocycle identity failed");
      c.expect(beta.evaluate(a).norm() <= g->word_length(a) * sup + 1e-9,
               "cocycle growth bound failed");
      double inverse_residual =
          (rep.evaluate(g->inv(a)) * beta.evaluate(a) + beta.evaluate(g->inv(a))).norm();
      c.expect(inverse_residual < 1e-9, "cocycle inverse formula failed");
    }
  }
}

void check_parallelogram(Rng& rng, Checker& c) {
  auto g = z2_flat();
  auto rep = random_rep(rng, g);
  auto beta = random_cocycle(rng, rep);
  auto mu = random_symmetric_measure(rng, g, true);
  Matrix pim = rep.pi_mu(mu);
  Vector mb = mu_center(beta, mu).center;
  std::vector<Vector> iterates{Vector::Zero(rep.dim())};
  for (int n = 0; n < 30; ++n) iterates.push_back(pim * iterates.back() + mb);
  for (std::size_t n = 0; n < iterates.size(); n += 6) {
    for (std::size_t m = 0; m < iterates.size(); m += 5) {
      auto bn = add(beta, Cocycle::coboundary(rep, iterates[n]));
      auto bm = add(beta, Cocycle::coboundary(rep, iterates[m]));
      double lhs = 0.0;
      for (std::size_t i = 0; i < mu.size(); ++i)
        lhs += 0.5 * mu.weights()[i] *
               (bn.evaluate(mu.support()[i]) - bm.evaluate(mu.support()[i])).squaredNorm();
      double rhs = energy_at(beta, mu, iterates[n]) + energy_at(beta, mu, iterates[m]) -
                   2.0 * energy_at(beta, mu, (iterates[n] + iterates[m]) / 2.0);
      c.bound("parallelogram_residual", std::abs(lhs - rhs), 1e-9);
    }
  }
}

CheckResult run_one(const std::string& name, std::uint64_t seed,
                    const std::function<void(Rng&, Checker&)>& fn) {
  CheckResult result;
  result.name = name;
  auto start = std::chrono::steady_clock::now();
  Checker checker;
  try {
    Rng rng(seed);
    fn(rng, checker);
    result.passed = checker.ok();
    result.details = checker.details();
  } catch (const std::exception& e) {
    result.passed = false;
    result.details = std::string("exception: ") + e.what();
  }
  auto stop = std::chrono::steady_clock::now();
  result.millis = std::chrono::duration<double, std::milli>(stop - start).count();
  return result;
}

}  // namespace

SelftestReport run_selftest(std::uint64_t seed) {
  SelftestReport report;
  report.seed = seed;
  struct Entry {
    const char* name;
    void (*fn)(Rng&, Checker&);
  };
  const std::vector<Entry> entries = {
      {"criterion_1_energy_lemmas", check_energy_lemmas},
      {"criterion_2_harmonic_uniqueness", check_uniqueness},
      {"criterion_3_minimizer_characterization", check_minimizer},
      {"criterion_4_monotone_descent", check_descent},
      {"criterion_5_finite_dichotomy", check_dichotomy},
      {"criterion_6_product_decomposition", check_products},
      {"criterion_7_induction_transfer", check_induction},
      {"criterion_8_compact_case", check_compact_case},
      {"criterion_9_phiv_construction", check_phiv},
      {"invariants_group_metric", check_group_invariants},
      {"invariants_measures", check_measure_invariants},
      {"invariants_representations", check_rep_invariants},
      {"invariants_cocycles", check_cocycle_invariants},
      {"invariants_parallelogram", check_parallelogram},
  };
  report.all_passed = true;
  std::uint64_t salt = 0;
  for (const auto& entry : entries) {
    ++salt;
    auto result = run_one(entry.name, seed * 0x9e3779b97f4a7c15ULL + salt,
                          std::function<void(Rng&, Checker&)>(entry.fn));
    report.total_millis += result.millis;
    report.all_passed = report.all_passed && result.passed;
    report.checks.push_back(std::move(result));
  }
  return report;
}

}  // namespace harmonics
