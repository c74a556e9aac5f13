#include "harmonics/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace harmonics {

const char* group_kind_name(GroupKind kind) noexcept {
  switch (kind) {
    case GroupKind::FinitePerm: return "finite_perm";
    case GroupKind::FiniteCyclic: return "finite_cyclic";
    case GroupKind::FreeAbelian: return "free_abelian";
    case GroupKind::Free: return "free";
    case GroupKind::Heisenberg: return "heisenberg";
    case GroupKind::Product: return "product";
  }
  return "unknown";
}

namespace {

template <class T>
const T* get_if_checked(const GroupElement& e) {
  return std::get_if<T>(&e.data());
}

int compare_elements(const GroupElement& a, const GroupElement& b);

int compare_ll(long long x, long long y) { return x < y ? -1 : (x > y ? 1 : 0); }

template <class Seq>
int compare_seq(const Seq& x, const Seq& y) {
  if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < y[i]) return -1;
    if (y[i] < x[i]) return 1;
  }
  return 0;
}

int compare_data(const Perm& x, const Perm& y) { return compare_seq(x.img, y.img); }
int compare_data(const Residue& x, const Residue& y) { return compare_ll(x.r, y.r); }
int compare_data(const IntVec& x, const IntVec& y) { return compare_seq(x.c, y.c); }
int compare_data(const Word& x, const Word& y) { return compare_seq(x.letters, y.letters); }
int compare_data(const Heis& x, const Heis& y) {
  if (int c = compare_ll(x.a, y.a)) return c;
  if (int c = compare_ll(x.b, y.b)) return c;
  return compare_ll(x.c, y.c);
}
int compare_data(const GroupElement::Tuple& x, const GroupElement::Tuple& y) {
  if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (int c = compare_elements(x[i], y[i])) return c;
  }
  return 0;
}

int compare_elements(const GroupElement& a, const GroupElement& b) {
  if (a.data().index() != b.data().index())
    return a.data().index() < b.data().index() ? -1 : 1;
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        return compare_data(x, std::get<T>(b.data()));
      },
      a.data());
}

long long mod_norm(long long r, long long n) {
  long long m = r % n;
  return m < 0 ? m + n : m;
}

bool is_permutation(const std::vector<int>& img, int degree) {
  if (static_cast<int>(img.size()) != degree) return false;
  std::vector<bool> seen(degree, false);
  for (int v : img) {
    if (v < 0 || v >= degree || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

void append_reduced(std::vector<int>& letters, int letter) {
  if (!letters.empty() && letters.back() == -letter) {
    letters.pop_back();
  } else {
    letters.push_back(letter);
  }
}

}  // namespace

const Perm& GroupElement::perm() const {
  if (auto* p = get_if_checked<Perm>(*this)) return *p;
  fail(ErrorKind::KindMismatch, "element is not a permutation");
}
const Residue& GroupElement::residue() const {
  if (auto* p = get_if_checked<Residue>(*this)) return *p;
  fail(ErrorKind::KindMismatch, "element is not a cyclic residue");
}
const IntVec& GroupElement::int_vec() const {
  if (auto* p = get_if_checked<IntVec>(*this)) return *p;
  fail(ErrorKind::KindMismatch, "element is not an integer vector");
}
const Word& GroupElement::word() const {
  if (auto* p = get_if_checked<Word>(*this)) return *p;
  fail(ErrorKind::KindMismatch, "element is not a free word");
}
const Heis& GroupElement::heis() const {
  if (auto* p = get_if_checked<Heis>(*this)) return *p;
  fail(ErrorKind::KindMismatch, "element is not a Heisenberg triple");
}
const GroupElement::Tuple& GroupElement::tuple() const {
  if (auto* p = get_if_checked<Tuple>(*this)) return *p;
  fail(ErrorKind::KindMismatch, "element is not a product tuple");
}

bool operator==(const GroupElement& a, const GroupElement& b) {
  return compare_elements(a, b) == 0;
}
bool operator<(const GroupElement& a, const GroupElement& b) {
  return compare_elements(a, b) < 0;
}

// ---------------------------------------------------------------------------
// GroupSpec factories

GroupSpec GroupSpec::finite_perm(int degree, std::vector<std::vector<int>> generators,
                                 std::vector<std::string> labels) {
  GroupSpec s;
  s.kind = GroupKind::FinitePerm;
  s.degree = degree;
  s.perm_generators = std::move(generators);
  s.generator_labels = std::move(labels);
  return s;
}
GroupSpec GroupSpec::finite_cyclic(long long n, std::string label) {
  GroupSpec s;
  s.kind = GroupKind::FiniteCyclic;
  s.modulus = n;
  s.generator_labels = {std::move(label)};
  return s;
}
GroupSpec GroupSpec::free_abelian(int rank, std::vector<std::string> labels) {
  GroupSpec s;
  s.kind = GroupKind::FreeAbelian;
  s.rank = rank;
  s.generator_labels = std::move(labels);
  return s;
}
GroupSpec GroupSpec::free_group(int rank, std::vector<std::string> labels) {
  GroupSpec s;
  s.kind = GroupKind::Free;
  s.rank = rank;
  s.generator_labels = std::move(labels);
  return s;
}
GroupSpec GroupSpec::heisenberg() {
  GroupSpec s;
  s.kind = GroupKind::Heisenberg;
  s.generator_labels = {"x", "y", "z"};
  return s;
}
GroupSpec GroupSpec::product(std::vector<GroupSpec> factors) {
  GroupSpec s;
  s.kind = GroupKind::Product;
  s.factors = std::move(factors);
  return s;
}

// ---------------------------------------------------------------------------
// Construction and validation

std::shared_ptr<const Group> Group::make(GroupSpec spec) {
  return std::shared_ptr<const Group>(new Group(std::move(spec)));
}

Group::Group(GroupSpec spec) : spec_(std::move(spec)) {
  switch (spec_.kind) {
    case GroupKind::FinitePerm: {
      if (spec_.degree <= 0) fail(ErrorKind::InvalidSpec, "finite_perm needs degree >= 1");
      if (spec_.perm_generators.empty())
        fail(ErrorKind::InvalidSpec, "finite_perm needs at least one generator");
      for (const auto& g : spec_.perm_generators)
        if (!is_permutation(g, spec_.degree))
          fail(ErrorKind::InvalidSpec, "finite_perm generator is not a bijection of {0..degree-1}");
      if (spec_.generator_labels.empty()) {
        for (std::size_t i = 0; i < spec_.perm_generators.size(); ++i)
          spec_.generator_labels.push_back("g" + std::to_string(i + 1));
      }
      if (spec_.generator_labels.size() != spec_.perm_generators.size())
        fail(ErrorKind::InvalidSpec, "finite_perm label count does not match generators");
      break;
    }
    case GroupKind::FiniteCyclic: {
      if (spec_.modulus <= 0) fail(ErrorKind::InvalidSpec, "finite_cyclic needs n >= 1");
      if (spec_.generator_labels.empty()) spec_.generator_labels = {"t"};
      if (spec_.generator_labels.size() != 1)
        fail(ErrorKind::InvalidSpec, "finite_cyclic has exactly one generator");
      break;
    }
    case GroupKind::FreeAbelian:
    case GroupKind::Free: {
      if (spec_.rank <= 0) fail(ErrorKind::InvalidSpec, "rank must be >= 1");
      if (spec_.generator_labels.empty()) {
        const char* stem = spec_.kind == GroupKind::FreeAbelian ? "e" : "x";
        for (int i = 0; i < spec_.rank; ++i)
          spec_.generator_labels.push_back(stem + std::to_string(i + 1));
      }
      if (static_cast<int>(spec_.generator_labels.size()) != spec_.rank)
        fail(ErrorKind::InvalidSpec, "label count does not match rank");
      break;
    }
    case GroupKind::Heisenberg: {
      if (spec_.generator_labels.empty()) spec_.generator_labels = {"x", "y", "z"};
      if (spec_.generator_labels.size() != 3)
        fail(ErrorKind::InvalidSpec, "heisenberg has exactly three generators");
      break;
    }
    case GroupKind::Product: {
      if (spec_.factors.size() < 2)
        fail(ErrorKind::InvalidSpec, "product needs at least 2 factors");
      int offset = 0;
      std::vector<std::string> labels;
      for (std::size_t j = 0; j < spec_.factors.size(); ++j) {
        auto f = Group::make(spec_.factors[j]);
        spec_.factors[j] = f->spec();  // store normalized factor specs
        factor_offsets_.push_back(offset);
        offset += f->generator_count();
        for (const auto& l : f->generator_labels())
          labels.push_back(std::to_string(j + 1) + "." + l);
        factors_.push_back(std::move(f));
      }
      spec_.generator_labels = std::move(labels);
      break;
    }
  }
  // duplicate labels would make generator maps ambiguous
  auto sorted = spec_.generator_labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(ErrorKind::InvalidSpec, "generator labels must be distinct");
  build_relators();
}

void Group::build_relators() {
  relators_.clear();
  switch (spec_.kind) {
    case GroupKind::FinitePerm:
      break;  // relators_by_exhaustion
    case GroupKind::FiniteCyclic: {
      std::vector<int> r(static_cast<std::size_t>(spec_.modulus), 1);
      relators_.push_back(std::move(r));
      break;
    }
    case GroupKind::FreeAbelian: {
      for (int i = 1; i <= spec_.rank; ++i)
        for (int j = i + 1; j <= spec_.rank; ++j)
          relators_.push_back({i, j, -i, -j});
      break;
    }
    case GroupKind::Free:
      break;
    case GroupKind::Heisenberg:
      // [x,y] z^-1, [x,z], [y,z] with x=1, y=2, z=3
      relators_.push_back({1, 2, -1, -2, -3});
      relators_.push_back({1, 3, -1, -3});
      relators_.push_back({2, 3, -2, -3});
      break;
    case GroupKind::Product: {
      for (int j = 0; j < factor_count(); ++j) {
        const int off = factor_offsets_[j];
        for (const auto& rel : factors_[j]->relators()) {
          std::vector<int> shifted;
          shifted.reserve(rel.size());
          for (int l : rel) shifted.push_back(l > 0 ? l + off : l - off);
          relators_.push_back(std::move(shifted));
        }
      }
      // cross-factor commutators
      for (int j = 0; j < factor_count(); ++j) {
        for (int k = j + 1; k < factor_count(); ++k) {
          for (int a = 1; a <= factors_[j]->generator_count(); ++a) {
            for (int b = 1; b <= factors_[k]->generator_count(); ++b) {
              int ga = a + factor_offsets_[j];
              int gb = b + factor_offsets_[k];
              relators_.push_back({ga, gb, -ga, -gb});
            }
          }
        }
      }
      break;
    }
  }
}

bool Group::relators_by_exhaustion() const {
  if (spec_.kind == GroupKind::FinitePerm) return true;
  if (spec_.kind == GroupKind::Product) {
    for (const auto& f : factors_)
      if (f->relators_by_exhaustion()) return true;
  }
  return false;
}

int Group::generator_index(const std::string& label) const {
  for (int i = 0; i < generator_count(); ++i)
    if (spec_.generator_labels[i] == label) return i;
  fail(ErrorKind::InvalidArgument, "unknown generator label '" + label + "'");
}

const std::shared_ptr<const Group>& Group::factor(int j) const {
  if (spec_.kind != GroupKind::Product)
    fail(ErrorKind::NotAProduct, "group is not a product");
  if (j < 0 || j >= factor_count()) fail(ErrorKind::InvalidArgument, "factor index out of range");
  return factors_[j];
}

std::pair<int, int> Group::factor_of_generator(int i) const {
  if (spec_.kind != GroupKind::Product)
    fail(ErrorKind::NotAProduct, "group is not a product");
  for (int j = factor_count() - 1; j >= 0; --j) {
    if (i >= factor_offsets_[j]) return {j, i - factor_offsets_[j]};
  }
  fail(ErrorKind::InvalidArgument, "generator index out of range");
}

int Group::generator_offset(int j) const {
  if (spec_.kind != GroupKind::Product)
    fail(ErrorKind::NotAProduct, "group is not a product");
  return factor_offsets_[j];
}

// ---------------------------------------------------------------------------
// Element validation

void Group::check_element(const GroupElement& a) const {
  switch (spec_.kind) {
    case GroupKind::FinitePerm: {
      const auto& p = a.perm();
      if (!is_permutation(p.img, spec_.degree))
        fail(ErrorKind::KindMismatch, "permutation does not match group degree");
      break;
    }
    case GroupKind::FiniteCyclic: {
      const auto& r = a.residue();
      if (r.r < 0 || r.r >= spec_.modulus)
        fail(ErrorKind::KindMismatch, "residue out of range [0, n)");
      break;
    }
    case GroupKind::FreeAbelian: {
      const auto& v = a.int_vec();
      if (static_cast<int>(v.c.size()) != spec_.rank)
        fail(ErrorKind::KindMismatch, "vector length does not match rank");
      break;
    }
    case GroupKind::Free: {
      const auto& w = a.word();
      for (std::size_t i = 0; i < w.letters.size(); ++i) {
        int l = w.letters[i];
        if (l == 0 || std::abs(l) > spec_.rank)
          fail(ErrorKind::KindMismatch, "word letter out of range");
        if (i > 0 && w.letters[i - 1] == -l)
          fail(ErrorKind::KindMismatch, "word is not reduced");
      }
      break;
    }
    case GroupKind::Heisenberg:
      a.heis();
      break;
    case GroupKind::Product: {
      const auto& t = a.tuple();
      if (static_cast<int>(t.size()) != factor_count())
        fail(ErrorKind::KindMismatch, "tuple arity does not match factor count");
      for (int j = 0; j < factor_count(); ++j) factors_[j]->check_element(t[j]);
      break;
    }
  }
}

// ---------------------------------------------------------------------------
// Group operations

GroupElement Group::identity() const {
  switch (spec_.kind) {
    case GroupKind::FinitePerm: {
      std::vector<int> img(spec_.degree);
      std::iota(img.begin(), img.end(), 0);
      return GroupElement(Perm{std::move(img)});
    }
    case GroupKind::FiniteCyclic:
      return GroupElement(Residue{0});
    case GroupKind::FreeAbelian:
      return GroupElement(IntVec{std::vector<long long>(spec_.rank, 0)});
    case GroupKind::Free:
      return GroupElement(Word{});
    case GroupKind::Heisenberg:
      return GroupElement(Heis{});
    case GroupKind::Product: {
      GroupElement::Tuple t;
      for (const auto& f : factors_) t.push_back(f->identity());
      return GroupElement(std::move(t));
    }
  }
  fail(ErrorKind::InvalidSpec, "unreachable");
}

GroupElement Group::generator(int i) const {
  if (i < 0 || i >= generator_count())
    fail(ErrorKind::InvalidArgument, "generator index out of range");
  switch (spec_.kind) {
    case GroupKind::FinitePerm:
      return GroupElement(Perm{spec_.perm_generators[i]});
    case GroupKind::FiniteCyclic:
      return GroupElement(Residue{mod_norm(1, spec_.modulus)});
    case GroupKind::FreeAbelian: {
      std::vector<long long> c(spec_.rank, 0);
      c[i] = 1;
      return GroupElement(IntVec{std::move(c)});
    }
    case GroupKind::Free:
      return GroupElement(Word{{i + 1}});
    case GroupKind::Heisenberg:
      return GroupElement(i == 0 ? Heis{1, 0, 0} : (i == 1 ? Heis{0, 1, 0} : Heis{0, 0, 1}));
    case GroupKind::Product: {
      auto [j, local] = factor_of_generator(i);
      GroupElement::Tuple t;
      for (int f = 0; f < factor_count(); ++f)
        t.push_back(f == j ? factors_[f]->generator(local) : factors_[f]->identity());
      return GroupElement(std::move(t));
    }
  }
  fail(ErrorKind::InvalidSpec, "unreachable");
}

bool Group::is_identity(const GroupElement& a) const { return a == identity(); }

GroupElement Group::mul(const GroupElement& a, const GroupElement& b) const {
  check_element(a);
  check_element(b);
  switch (spec_.kind) {
    case GroupKind::FinitePerm: {
      const auto& pa = a.perm().img;
      const auto& pb = b.perm().img;
      std::vector<int> img(spec_.degree);
      for (int i = 0; i < spec_.degree; ++i) img[i] = pa[pb[i]];
      return GroupElement(Perm{std::move(img)});
    }
    case GroupKind::FiniteCyclic:
      return GroupElement(Residue{mod_norm(a.residue().r + b.residue().r, spec_.modulus)});
    case GroupKind::FreeAbelian: {
      std::vector<long long> c(spec_.rank);
      for (int i = 0; i < spec_.rank; ++i) c[i] = a.int_vec().c[i] + b.int_vec().c[i];
      return GroupElement(IntVec{std::move(c)});
    }
    case GroupKind::Free: {
      std::vector<int> letters = a.word().letters;
      for (int l : b.word().letters) append_reduced(letters, l);
      return GroupElement(Word{std::move(letters)});
    }
    case GroupKind::Heisenberg: {
      const auto& x = a.heis();
      const auto& y = b.heis();
      return GroupElement(Heis{x.a + y.a, x.b + y.b, x.c + y.c + x.a * y.b});
    }
    case GroupKind::Product: {
      GroupElement::Tuple t;
      for (int j = 0; j < factor_count(); ++j)
        t.push_back(factors_[j]->mul(a.tuple()[j], b.tuple()[j]));
      return GroupElement(std::move(t));
    }
  }
  fail(ErrorKind::InvalidSpec, "unreachable");
}

GroupElement Group::inv(const GroupElement& a) const {
  check_element(a);
  switch (spec_.kind) {
    case GroupKind::FinitePerm: {
      const auto& p = a.perm().img;
      std::vector<int> img(spec_.degree);
      for (int i = 0; i < spec_.degree; ++i) img[p[i]] = i;
      return GroupElement(Perm{std::move(img)});
    }
    case GroupKind::FiniteCyclic:
      return GroupElement(Residue{mod_norm(-a.residue().r, spec_.modulus)});
    case GroupKind::FreeAbelian: {
      std::vector<long long> c(spec_.rank);
      for (int i = 0; i < spec_.rank; ++i) c[i] = -a.int_vec().c[i];
      return GroupElement(IntVec{std::move(c)});
    }
    case GroupKind::Free: {
      const auto& w = a.word().letters;
      std::vector<int> letters(w.rbegin(), w.rend());
      for (int& l : letters) l = -l;
      return GroupElement(Word{std::move(letters)});
    }
    case GroupKind::Heisenberg: {
      const auto& x = a.heis();
      return GroupElement(Heis{-x.a, -x.b, x.a * x.b - x.c});
    }
    case GroupKind::Product: {
      GroupElement::Tuple t;
      for (int j = 0; j < factor_count(); ++j) t.push_back(factors_[j]->inv(a.tuple()[j]));
      return GroupElement(std::move(t));
    }
  }
  fail(ErrorKind::InvalidSpec, "unreachable");
}

GroupElement Group::word_element(std::span<const int> letters) const {
  GroupElement g = identity();
  for (int l : letters) {
    if (l == 0 || std::abs(l) > generator_count())
      fail(ErrorKind::InvalidArgument, "word letter out of range");
    GroupElement s = generator(std::abs(l) - 1);
    g = mul(g, l > 0 ? s : inv(s));
  }
  return g;
}

// ---------------------------------------------------------------------------
// Canonical words

std::vector<int> Group::canonical_word(const GroupElement& a) const {
  check_element(a);
  switch (spec_.kind) {
    case GroupKind::FiniteCyclic: {
      return std::vector<int>(static_cast<std::size_t>(a.residue().r), 1);
    }
    case GroupKind::FreeAbelian: {
      std::vector<int> w;
      for (int i = 0; i < spec_.rank; ++i) {
        long long c = a.int_vec().c[i];
        for (long long k = 0; k < std::abs(c); ++k) w.push_back(c > 0 ? i + 1 : -(i + 1));
      }
      return w;
    }
    case GroupKind::Free:
      return a.word().letters;
    case GroupKind::Heisenberg: {
      // (a,b,c) = x^a y^b z^(c - a b)
      const auto& h = a.heis();
      std::vector<int> w;
      auto push_power = [&w](int gen, long long p) {
        for (long long k = 0; k < std::abs(p); ++k) w.push_back(p > 0 ? gen : -gen);
      };
      push_power(1, h.a);
      push_power(2, h.b);
      push_power(3, h.c - h.a * h.b);
      return w;
    }
    case GroupKind::Product: {
      std::vector<int> w;
      for (int j = 0; j < factor_count(); ++j) {
        const int off = factor_offsets_[j];
        for (int l : factors_[j]->canonical_word(a.tuple()[j]))
          w.push_back(l > 0 ? l + off : l - off);
      }
      return w;
    }
    case GroupKind::FinitePerm: {
      std::lock_guard<std::mutex> lock(cache_mutex_);
      while (true) {
        auto it = bfs_word_.find(a);
        if (it != bfs_word_.end()) return it->second;
        if (bfs_exhausted_)
          fail(ErrorKind::ElementNotInGroup,
               "permutation is not in the subgroup generated by the spec generators");
        ensure_bfs_radius(bfs_radius_ + 1, limits::ball_limit);
      }
    }
  }
  fail(ErrorKind::InvalidSpec, "unreachable");
}

// ---------------------------------------------------------------------------
// BFS over the Cayley graph (symmetrized generating set)

void Group::ensure_bfs_radius(int radius, std::size_t limit) const {
  // caller holds cache_mutex_
  if (bfs_radius_ < 0) {
    GroupElement e = identity();
    bfs_length_[e] = 0;
    bfs_word_[e] = {};
    bfs_frontier_ = {e};
    bfs_radius_ = 0;
  }
  while (bfs_radius_ < radius && !bfs_exhausted_) {
    std::map<GroupElement, std::vector<int>> next;
    for (const auto& g : bfs_frontier_) {
      const auto& gw = bfs_word_.at(g);
      for (int i = 1; i <= generator_count(); ++i) {
        for (int sign : {+1, -1}) {
          GroupElement s = generator(i - 1);
          GroupElement h = mul(g, sign > 0 ? s : inv(s));
          if (bfs_length_.count(h) || next.count(h)) continue;
          auto w = gw;
          w.push_back(sign * i);
          next.emplace(std::move(h), std::move(w));
        }
      }
    }
    if (next.empty()) {
      bfs_exhausted_ = true;
      break;
    }
    ++bfs_radius_;
    std::vector<GroupElement> frontier;
    frontier.reserve(next.size());
    for (auto& [h, w] : next) {
      bfs_length_[h] = bfs_radius_;
      bfs_word_[h] = std::move(w);
      frontier.push_back(h);
    }
    bfs_frontier_ = std::move(frontier);
    if (bfs_length_.size() > limit)
      fail(ErrorKind::BallTooLarge, "Cayley ball exceeds element limit");
  }
}

int Group::word_length(const GroupElement& a, int radius_cap) const {
  check_element(a);
  if (radius_cap < 0) fail(ErrorKind::InvalidArgument, "radius_cap must be >= 0");
  long long len = -1;
  switch (spec_.kind) {
    case GroupKind::FiniteCyclic: {
      long long r = a.residue().r;
      len = std::min(r, spec_.modulus - r);
      break;
    }
    case GroupKind::FreeAbelian: {
      len = 0;
      for (long long c : a.int_vec().c) len += std::abs(c);
      break;
    }
    case GroupKind::Free:
      len = static_cast<long long>(a.word().letters.size());
      break;
    case GroupKind::Product: {
      len = 0;
      for (int j = 0; j < factor_count(); ++j)
        len += factors_[j]->word_length(a.tuple()[j], radius_cap);
      break;
    }
    case GroupKind::FinitePerm:
    case GroupKind::Heisenberg: {
      std::lock_guard<std::mutex> lock(cache_mutex_);
      while (true) {
        auto it = bfs_length_.find(a);
        if (it != bfs_length_.end()) {
          len = it->second;
          break;
        }
        if (bfs_exhausted_)
          fail(ErrorKind::ElementNotInGroup, "element not generated by the spec generators");
        if (bfs_radius_ >= radius_cap)
          fail(ErrorKind::RadiusExceeded, "word length exceeds radius cap");
        ensure_bfs_radius(bfs_radius_ + 1, limits::ball_limit);
      }
      break;
    }
  }
  if (len > radius_cap)
    fail(ErrorKind::RadiusExceeded, "word length " + std::to_string(len) +
                                        " exceeds radius cap " + std::to_string(radius_cap));
  return static_cast<int>(len);
}

std::vector<BallEntry> Group::cayley_ball(int radius, std::size_t limit) const {
  if (radius < 0) fail(ErrorKind::InvalidArgument, "radius must be >= 0");
  switch (spec_.kind) {
    case GroupKind::FiniteCyclic:
    case GroupKind::FreeAbelian:
    case GroupKind::Free:
    case GroupKind::Product:
    case GroupKind::FinitePerm:
    case GroupKind::Heisenberg: {
      std::lock_guard<std::mutex> lock(cache_mutex_);
      ensure_bfs_radius(radius, limit);
      std::vector<BallEntry> out;
      for (const auto& [g, l] : bfs_length_)
        if (l <= radius) out.push_back({g, l});
      // std::map iteration is already sorted by canonical form
      return out;
    }
  }
  fail(ErrorKind::InvalidSpec, "unreachable");
}

bool Group::finite() const {
  switch (spec_.kind) {
    case GroupKind::FinitePerm:
    case GroupKind::FiniteCyclic:
      return true;
    case GroupKind::FreeAbelian:
    case GroupKind::Free:
    case GroupKind::Heisenberg:
      return false;
    case GroupKind::Product:
      for (const auto& f : factors_)
        if (!f->finite()) return false;
      return true;
  }
  return false;
}

std::vector<GroupElement> Group::elements(std::size_t limit) const {
  if (!finite()) fail(ErrorKind::InvalidArgument, "elements() requires a finite group");
  switch (spec_.kind) {
    case GroupKind::FiniteCyclic: {
      std::vector<GroupElement> out;
      for (long long r = 0; r < spec_.modulus; ++r) out.push_back(GroupElement(Residue{r}));
      return out;
    }
    case GroupKind::FinitePerm: {
      std::lock_guard<std::mutex> lock(cache_mutex_);
      while (!bfs_exhausted_) ensure_bfs_radius(bfs_radius_ + 1, limit);
      std::vector<GroupElement> out;
      for (const auto& [g, l] : bfs_length_) out.push_back(g);
      return out;
    }
    case GroupKind::Product: {
      std::vector<GroupElement> out{GroupElement(GroupElement::Tuple{})};
      for (const auto& f : factors_) {
        auto fe = f->elements(limit);
        std::vector<GroupElement> grown;
        grown.reserve(out.size() * fe.size());
        for (const auto& head : out) {
          for (const auto& tail : fe) {
            auto t = head.tuple();
            t.push_back(tail);
            grown.push_back(GroupElement(std::move(t)));
          }
        }
        out = std::move(grown);
        if (out.size() > limit) fail(ErrorKind::BallTooLarge, "enumeration exceeds limit");
      }
      std::sort(out.begin(), out.end());
      return out;
    }
    default:
      fail(ErrorKind::InvalidArgument, "elements() not supported for this kind");
  }
}

}  // namespace harmonics
