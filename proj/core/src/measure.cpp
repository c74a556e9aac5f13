#include "harmonics/measure.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace harmonics {

const char* tri_state_name(TriState t) noexcept {
  switch (t) {
    case TriState::No: return "no";
    case TriState::Yes: return "yes";
    case TriState::Unknown: return "unknown";
  }
  return "unknown";
}

FinMeasure::FinMeasure(GroupPtr group, std::vector<GroupElement> support,
                       std::vector<double> weights)
    : group_(std::move(group)), support_(std::move(support)), weights_(std::move(weights)) {}

FinMeasure FinMeasure::make(GroupPtr group, std::vector<GroupElement> support,
                            std::vector<double> weights, const Tolerances& tol) {
  if (!group) fail(ErrorKind::InvalidArgument, "measure needs a group");
  if (support.size() != weights.size())
    fail(ErrorKind::InvalidMeasure, "support and weight counts differ");
  std::map<GroupElement, double> acc;
  double mass = 0.0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    group->check_element(support[i]);
    if (weights[i] < 0.0) fail(ErrorKind::InvalidMeasure, "negative weight");
    if (acc.count(support[i]))
      fail(ErrorKind::InvalidMeasure, "support elements must be pairwise distinct");
    mass += weights[i];
    if (weights[i] > 0.0) acc.emplace(support[i], weights[i]);
  }
  if (std::abs(mass - 1.0) > tol.mass)
    fail(ErrorKind::InvalidMeasure, "weights sum to " + std::to_string(mass) + ", expected 1");
  std::vector<GroupElement> s;
  std::vector<double> w;
  s.reserve(acc.size());
  w.reserve(acc.size());
  for (const auto& [g, x] : acc) {
    s.push_back(g);
    w.push_back(x);
  }
  return FinMeasure(std::move(group), std::move(s), std::move(w));
}

FinMeasure FinMeasure::point_mass(GroupPtr group, const GroupElement& g) {
  return make(std::move(group), {g}, {1.0});
}

FinMeasure FinMeasure::uniform(GroupPtr group, std::vector<GroupElement> support) {
  if (support.empty()) fail(ErrorKind::InvalidMeasure, "uniform measure needs a nonempty support");
  std::vector<double> w(support.size(), 1.0 / static_cast<double>(support.size()));
  return make(std::move(group), std::move(support), std::move(w));
}

FinMeasure FinMeasure::uniform_on_generators(GroupPtr group) {
  std::set<GroupElement> sym;
  for (int i = 0; i < group->generator_count(); ++i) {
    GroupElement s = group->generator(i);
    sym.insert(s);
    sym.insert(group->inv(s));
  }
  return uniform(group, std::vector<GroupElement>(sym.begin(), sym.end()));
}

double FinMeasure::weight_of(const GroupElement& g) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), g);
  if (it != support_.end() && *it == g)
    return weights_[static_cast<std::size_t>(it - support_.begin())];
  return 0.0;
}

double FinMeasure::total_mass() const {
  double m = 0.0;
  for (double w : weights_) m += w;
  return m;
}

FinMeasure symmetrize(const FinMeasure& mu) {
  const Group& g = mu.group();
  std::map<GroupElement, double> acc;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    acc[mu.support()[i]] += 0.5 * mu.weights()[i];
    acc[g.inv(mu.support()[i])] += 0.5 * mu.weights()[i];
  }
  std::vector<GroupElement> s;
  std::vector<double> w;
  for (const auto& [e, x] : acc) {
    s.push_back(e);
    w.push_back(x);
  }
  return FinMeasure::make(mu.group_ptr(), std::move(s), std::move(w));
}

FinMeasure convolve(const FinMeasure& mu, const FinMeasure& nu) {
  if (mu.group_ptr().get() != nu.group_ptr().get() && !(mu.group().spec().kind == nu.group().spec().kind))
    fail(ErrorKind::KindMismatch, "convolution needs measures on the same group");
  const Group& g = mu.group();
  std::map<GroupElement, double> acc;
  for (std::size_t i = 0; i < mu.size(); ++i)
    for (std::size_t j = 0; j < nu.size(); ++j)
      acc[g.mul(mu.support()[i], nu.support()[j])] += mu.weights()[i] * nu.weights()[j];
  std::vector<GroupElement> s;
  std::vector<double> w;
  for (const auto& [e, x] : acc) {
    s.push_back(e);
    w.push_back(x);
  }
  return FinMeasure::make(mu.group_ptr(), std::move(s), std::move(w));
}

bool is_symmetric(const FinMeasure& mu, double mass_tol) {
  const Group& g = mu.group();
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (std::abs(mu.weights()[i] - mu.weight_of(g.inv(mu.support()[i]))) > mass_tol) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Generation certificates

namespace {

// Reduces integer row vectors and reports whether they span all of Z^d.
bool lattice_is_full(std::vector<std::vector<long long>> rows, int d) {
  if (d == 0) return true;
  long long index = 1;
  int pivot_row = 0;
  for (int col = 0; col < d; ++col) {
    while (true) {
      int best = -1;
      for (int i = pivot_row; i < static_cast<int>(rows.size()); ++i) {
        if (rows[i][col] != 0 &&
            (best < 0 || std::abs(rows[i][col]) < std::abs(rows[best][col])))
          best = i;
      }
      if (best < 0) return false;  // no pivot in this column: rank < d
      std::swap(rows[pivot_row], rows[best]);
      bool clean = true;
      for (int i = pivot_row + 1; i < static_cast<int>(rows.size()); ++i) {
        if (rows[i][col] == 0) continue;
        long long q = rows[i][col] / rows[pivot_row][col];
        for (int k = col; k < d; ++k) rows[i][k] -= q * rows[pivot_row][k];
        if (rows[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    index *= std::abs(rows[pivot_row][col]);
    ++pivot_row;
  }
  return index == 1;
}

// Coordinates for groups assembled from free_abelian and finite_cyclic kinds.
struct AbelianShape {
  int dim = 0;
  std::vector<long long> moduli;  // 0 for a free coordinate
};

bool abelian_shape(const Group& g, AbelianShape& out) {
  switch (g.kind()) {
    case GroupKind::FreeAbelian:
      for (int i = 0; i < g.spec().rank; ++i) out.moduli.push_back(0);
      out.dim += g.spec().rank;
      return true;
    case GroupKind::FiniteCyclic:
      out.moduli.push_back(g.spec().modulus);
      out.dim += 1;
      return true;
    case GroupKind::Product:
      for (int j = 0; j < g.factor_count(); ++j)
        if (!abelian_shape(*g.factor(j), out)) return false;
      return true;
    default:
      return false;
  }
}

void abelian_coords(const Group& g, const GroupElement& e, std::vector<long long>& out) {
  switch (g.kind()) {
    case GroupKind::FreeAbelian:
      for (long long c : e.int_vec().c) out.push_back(c);
      return;
    case GroupKind::FiniteCyclic:
      out.push_back(e.residue().r);
      return;
    case GroupKind::Product:
      for (int j = 0; j < g.factor_count(); ++j) abelian_coords(*g.factor(j), e.tuple()[j], out);
      return;
    default:
      fail(ErrorKind::KindMismatch, "not an abelian-type group");
  }
}

TriState generates_abelian(const FinMeasure& mu) {
  AbelianShape shape;
  if (!abelian_shape(mu.group(), shape)) return TriState::Unknown;
  std::vector<std::vector<long long>> rows;
  for (const auto& s : mu.support()) {
    std::vector<long long> coords;
    abelian_coords(mu.group(), s, coords);
    rows.push_back(std::move(coords));
  }
  for (int i = 0; i < shape.dim; ++i) {
    if (shape.moduli[i] != 0) {
      std::vector<long long> rel(shape.dim, 0);
      rel[i] = shape.moduli[i];
      rows.push_back(std::move(rel));
    }
  }
  return lattice_is_full(std::move(rows), shape.dim) ? TriState::Yes : TriState::No;
}

// The support generates the integer Heisenberg group iff its projections to
// Z^2 span the full lattice (a commutator of preimages of (1,0) and (0,1)
// then produces the central generator).
TriState generates_heisenberg(const FinMeasure& mu) {
  std::vector<std::vector<long long>> rows;
  for (const auto& s : mu.support()) rows.push_back({s.heis().a, s.heis().b});
  return lattice_is_full(std::move(rows), 2) ? TriState::Yes : TriState::No;
}

TriState generates_finite(const FinMeasure& mu) {
  const Group& g = mu.group();
  std::set<GroupElement> closure;
  std::vector<GroupElement> step;
  for (const auto& s : mu.support()) {
    step.push_back(s);
    step.push_back(g.inv(s));
  }
  closure.insert(g.identity());
  std::vector<GroupElement> frontier{g.identity()};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& e : frontier)
      for (const auto& s : step) {
        GroupElement h = g.mul(e, s);
        if (closure.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  return closure.size() == g.elements().size() ? TriState::Yes : TriState::No;
}

TriState generates_bounded_search(const FinMeasure& mu, int gen_radius) {
  const Group& g = mu.group();
  std::set<GroupElement> reached{g.identity()};
  std::vector<GroupElement> step;
  for (const auto& s : mu.support()) {
    step.push_back(s);
    step.push_back(g.inv(s));
  }
  std::set<GroupElement> targets;
  for (int i = 0; i < g.generator_count(); ++i) targets.insert(g.generator(i));
  std::vector<GroupElement> frontier{g.identity()};
  for (int depth = 0; depth < gen_radius && !targets.empty(); ++depth) {
    std::vector<GroupElement> next;
    for (const auto& e : frontier)
      for (const auto& s : step) {
        GroupElement h = g.mul(e, s);
        if (reached.insert(h).second) {
          targets.erase(h);
          next.push_back(h);
        }
      }
    if (next.empty()) {
      // closure is complete; missing generators are genuinely unreachable
      return targets.empty() ? TriState::Yes : TriState::No;
    }
    frontier = std::move(next);
  }
  return targets.empty() ? TriState::Yes : TriState::Unknown;
}

}  // namespace

TriState support_generates(const FinMeasure& mu, int gen_radius) {
  const Group& g = mu.group();
  switch (g.kind()) {
    case GroupKind::FreeAbelian:
    case GroupKind::FiniteCyclic:
      return generates_abelian(mu);
    case GroupKind::Heisenberg:
      return generates_heisenberg(mu);
    case GroupKind::FinitePerm:
      return generates_finite(mu);
    case GroupKind::Free:
      return generates_bounded_search(mu, gen_radius);
    case GroupKind::Product: {
      if (g.finite()) return generates_finite(mu);
      TriState abelian = generates_abelian(mu);
      if (abelian != TriState::Unknown) return abelian;
      // necessary condition: each factor projection must generate its factor
      for (int j = 0; j < g.factor_count(); ++j) {
        std::map<GroupElement, double> proj;
        for (std::size_t i = 0; i < mu.size(); ++i)
          proj[mu.support()[i].tuple()[j]] += mu.weights()[i];
        std::vector<GroupElement> s;
        std::vector<double> w;
        for (const auto& [e, x] : proj) {
          s.push_back(e);
          w.push_back(x);
        }
        auto factor_mu = FinMeasure::make(g.factor(j), std::move(s), std::move(w));
        if (support_generates(factor_mu, gen_radius) == TriState::No) return TriState::No;
      }
      return generates_bounded_search(mu, gen_radius);
    }
  }
  return TriState::Unknown;
}

ReasonablenessReport validate_reasonable(const FinMeasure& mu, int gen_radius, int radius_cap) {
  ReasonablenessReport report;
  report.symmetric = is_symmetric(mu);
  report.generates = support_generates(mu, gen_radius);
  double m2 = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    double len = static_cast<double>(mu.group().word_length(mu.support()[i], radius_cap));
    m2 += len * len * mu.weights()[i];
  }
  report.second_moment = m2;
  report.nonsingular = true;
  return report;
}

}  // namespace harmonics
