#include "harmonics/induction.hpp"

#include <algorithm>
#include <set>

namespace harmonics {

namespace {

// integer determinant by cofactor expansion; subgroup ranks are tiny
long long int_det(const std::vector<std::vector<long long>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long det = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::vector<long long>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long long> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    long long term = m[0][k] * int_det(minor);
    det += (k % 2 == 0) ? term : -term;
  }
  return det;
}

std::vector<std::vector<long long>> int_adjugate(const std::vector<std::vector<long long>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<long long>> adj(n, std::vector<long long>(n, 0));
  if (n == 1) {
    adj[0][0] = 1;
    return adj;
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<std::vector<long long>> minor;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == r) continue;
        std::vector<long long> row;
        for (std::size_t j = 0; j < n; ++j)
          if (j != c) row.push_back(m[i][j]);
        minor.push_back(std::move(row));
      }
      long long cof = int_det(minor);
      adj[c][r] = ((r + c) % 2 == 0) ? cof : -cof;  // transposed cofactor
    }
  }
  return adj;
}

}  // namespace

GroupElement FiniteIndexSubgroup::embed(const GroupElement& lambda) const {
  subgroup_->check_element(lambda);
  auto word = subgroup_->canonical_word(lambda);
  GroupElement g = ambient_->identity();
  for (int l : word) {
    const GroupElement& img = images_[static_cast<std::size_t>(std::abs(l)) - 1];
    g = ambient_->mul(g, l > 0 ? img : ambient_->inv(img));
  }
  return g;
}

FiniteIndexSubgroup FiniteIndexSubgroup::make(GroupPtr ambient, GroupPtr subgroup,
                                              std::vector<GroupElement> generator_images,
                                              std::vector<GroupElement> coset_reps) {
  FiniteIndexSubgroup sub;
  if (!ambient || !subgroup) fail(ErrorKind::InvalidArgument, "subgroup needs both groups");
  sub.ambient_ = std::move(ambient);
  sub.subgroup_ = std::move(subgroup);
  sub.images_ = std::move(generator_images);
  sub.coset_reps_ = std::move(coset_reps);

  const Group& amb = *sub.ambient_;
  const Group& lam = *sub.subgroup_;
  if (static_cast<int>(sub.images_.size()) != lam.generator_count())
    fail(ErrorKind::InvalidSpec, "one ambient image per subgroup generator required");
  for (const auto& g : sub.images_) amb.check_element(g);
  if (sub.coset_reps_.empty() || !(sub.coset_reps_.front() == amb.identity()))
    fail(ErrorKind::InvalidSpec, "coset representatives must start with the identity");
  for (const auto& f : sub.coset_reps_) amb.check_element(f);
  {
    std::set<GroupElement> dedup(sub.coset_reps_.begin(), sub.coset_reps_.end());
    if (dedup.size() != sub.coset_reps_.size())
      fail(ErrorKind::InvalidSpec, "coset representatives must be distinct");
  }

  // embedding must respect the subgroup's relations (exact group arithmetic)
  for (const auto& rel : lam.relators()) {
    GroupElement p = amb.identity();
    for (int l : rel) {
      const GroupElement& img = sub.images_[static_cast<std::size_t>(std::abs(l)) - 1];
      p = amb.mul(p, l > 0 ? img : amb.inv(img));
    }
    if (!amb.is_identity(p))
      fail(ErrorKind::InvalidSpec, "generator images violate a subgroup relator");
  }

  if (amb.finite()) {
    std::map<GroupElement, GroupElement> member;
    for (const auto& lambda : lam.elements()) {
      GroupElement g = sub.embed(lambda);
      auto [it, inserted] = member.emplace(g, lambda);
      if (!inserted) fail(ErrorKind::InvalidSpec, "embedding is not injective");
    }
    // exhaustive homomorphism check of the embedding
    for (const auto& [ga, la] : member)
      for (const auto& [gb, lb] : member)
        if (!(sub.embed(lam.mul(la, lb)) == amb.mul(ga, gb)))
          fail(ErrorKind::InvalidSpec, "embedding is not a homomorphism");
    if (member.size() * sub.coset_reps_.size() != amb.elements().size())
      fail(ErrorKind::InvalidSpec, "coset representatives do not partition the group");
    sub.member_map_ = std::move(member);
  } else if (amb.kind() == GroupKind::FreeAbelian) {
    const int d = amb.spec().rank;
    if (lam.kind() != GroupKind::FreeAbelian || lam.spec().rank != d)
      fail(ErrorKind::InvalidSpec,
           "free-abelian ambient needs a free-abelian subgroup of the same rank");
    sub.lattice_cols_.assign(d, std::vector<long long>(d, 0));
    for (int j = 0; j < d; ++j)
      for (int i = 0; i < d; ++i) sub.lattice_cols_[i][j] = sub.images_[j].int_vec().c[i];
    sub.lattice_det_ = int_det(sub.lattice_cols_);
    if (sub.lattice_det_ == 0)
      fail(ErrorKind::InvalidSpec, "subgroup lattice does not have finite index");
    if (std::abs(sub.lattice_det_) != static_cast<long long>(sub.coset_reps_.size()))
      fail(ErrorKind::InvalidSpec, "coset count does not match the lattice index");
    sub.lattice_adjugate_ = int_adjugate(sub.lattice_cols_);
  } else {
    fail(ErrorKind::InvalidSpec,
         "finite-index machinery supports finite and free-abelian ambient groups");
  }

  // pairwise-distinct cosets
  for (std::size_t i = 0; i < sub.coset_reps_.size(); ++i)
    for (std::size_t j = i + 1; j < sub.coset_reps_.size(); ++j)
      if (sub.contains(amb.mul(amb.inv(sub.coset_reps_[i]), sub.coset_reps_[j])))
        fail(ErrorKind::InvalidSpec, "coset representatives are not in distinct cosets");
  return sub;
}

bool FiniteIndexSubgroup::contains(const GroupElement& g) const {
  ambient_->check_element(g);
  if (member_map_) return member_map_->count(g) > 0;
  const int d = ambient_->spec().rank;
  const auto& v = g.int_vec().c;
  for (int i = 0; i < d; ++i) {
    long long s = 0;
    for (int j = 0; j < d; ++j) s += lattice_adjugate_[i][j] * v[j];
    if (s % lattice_det_ != 0) return false;
  }
  return true;
}

GroupElement FiniteIndexSubgroup::to_subgroup(const GroupElement& g) const {
  ambient_->check_element(g);
  if (member_map_) {
    auto it = member_map_->find(g);
    if (it == member_map_->end())
      fail(ErrorKind::MembershipFailure, "element is not in the subgroup");
    return it->second;
  }
  const int d = ambient_->spec().rank;
  const auto& v = g.int_vec().c;
  std::vector<long long> coords(d);
  for (int i = 0; i < d; ++i) {
    long long s = 0;
    for (int j = 0; j < d; ++j) s += lattice_adjugate_[i][j] * v[j];
    if (s % lattice_det_ != 0)
      fail(ErrorKind::MembershipFailure, "element is not in the subgroup lattice");
    coords[i] = s / lattice_det_;
  }
  return GroupElement(IntVec{std::move(coords)});
}

int FiniteIndexSubgroup::coset_index_of(const GroupElement& f) const {
  for (std::size_t i = 0; i < coset_reps_.size(); ++i)
    if (coset_reps_[i] == f) return static_cast<int>(i);
  fail(ErrorKind::InvalidArgument, "element is not a coset representative");
}

FiniteIndexSubgroup::AlphaResult FiniteIndexSubgroup::alpha(const GroupElement& g,
                                                            const GroupElement& f) const {
  coset_index_of(f);  // validates f in F
  GroupElement gf = ambient_->mul(g, f);
  GroupElement gf_inv = ambient_->inv(gf);
  for (std::size_t i = 0; i < coset_reps_.size(); ++i) {
    GroupElement gamma = ambient_->mul(gf_inv, coset_reps_[i]);
    if (contains(gamma)) {
      return AlphaResult{gamma, to_subgroup(gamma), coset_reps_[i], static_cast<int>(i)};
    }
  }
  fail(ErrorKind::MembershipFailure,
       "no coset representative matches; the fundamental domain is invalid");
}

double FiniteIndexSubgroup::alpha_second_moment(int generator_index, int radius_cap) const {
  if (generator_index < 0 || generator_index >= ambient_->generator_count())
    fail(ErrorKind::InvalidArgument, "generator index out of range");
  GroupElement s = ambient_->generator(generator_index);
  double sum = 0.0;
  for (const auto& f : coset_reps_) {
    auto a = alpha(s, f);
    double len = static_cast<double>(subgroup_->word_length(a.gamma_sub, radius_cap));
    sum += len * len;
  }
  return sum;
}

InducedRep induce_rep(const FiniteIndexSubgroup& sub, const UnitaryRep& base,
                      const Tolerances& tol) {
  if (base.group().spec().kind != sub.subgroup().spec().kind)
    fail(ErrorKind::KindMismatch, "base representation must live on the subgroup");
  const int d = base.dim();
  const int n = sub.index();
  const Group& amb = sub.ambient();
  std::vector<Matrix> mats;
  for (int i = 0; i < amb.generator_count(); ++i) {
    GroupElement s_inv = amb.inv(amb.generator(i));
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(d) * n, static_cast<Eigen::Index>(d) * n);
    for (int rf = 0; rf < n; ++rf) {
      auto a = sub.alpha(s_inv, sub.coset_reps()[rf]);
      m.block(static_cast<Eigen::Index>(rf) * d, static_cast<Eigen::Index>(a.f_new_index) * d, d,
              d) = base.evaluate(a.gamma_sub);
    }
    mats.push_back(std::move(m));
  }
  return InducedRep{base, UnitaryRep(sub.ambient_ptr(), base.field(), std::move(mats), tol)};
}

Cocycle induce_cocycle(const FiniteIndexSubgroup& sub, const UnitaryRep& induced,
                       const Cocycle& phi, const Tolerances& tol) {
  const int n = sub.index();
  const int d = phi.dim();
  if (induced.dim() != d * n)
    fail(ErrorKind::DimensionMismatch, "induced representation does not match the base cocycle");
  const Group& amb = sub.ambient();
  std::vector<Vector> values;
  for (int i = 0; i < amb.generator_count(); ++i) {
    GroupElement s_inv = amb.inv(amb.generator(i));
    Vector v = Vector::Zero(static_cast<Eigen::Index>(d) * n);
    for (int rf = 0; rf < n; ++rf) {
      auto a = sub.alpha(s_inv, sub.coset_reps()[rf]);
      v.segment(static_cast<Eigen::Index>(rf) * d, d) = phi.evaluate(a.gamma_sub);
    }
    values.push_back(std::move(v));
  }
  return Cocycle::from_generator_values(induced, std::move(values), tol);
}

}  // namespace harmonics
