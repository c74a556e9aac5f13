#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "harmonics/common.hpp"
#include "harmonics/errors.hpp"

namespace harmonics {

enum class GroupKind { FinitePerm, FiniteCyclic, FreeAbelian, Free, Heisenberg, Product };

const char* group_kind_name(GroupKind kind) noexcept;

/// Canonical forms, one alternative per catalog kind. Equality of canonical
/// forms is equality of group elements.
struct Perm {
  std::vector<int> img;  // i -> img[i]
  bool operator==(const Perm&) const = default;
};
struct Residue {
  long long r = 0;  // normalized to [0, n)
  bool operator==(const Residue&) const = default;
};
struct IntVec {
  std::vector<long long> c;
  bool operator==(const IntVec&) const = default;
};
struct Word {
  std::vector<int> letters;  // reduced; +k = generator k (1-based), -k = its inverse
  bool operator==(const Word&) const = default;
};
struct Heis {
  // Entries of the upper unitriangular matrix [[1,a,c],[0,1,b],[0,0,1]].
  long long a = 0, b = 0, c = 0;
  bool operator==(const Heis&) const = default;
};

class GroupElement {
 public:
  using Tuple = std::vector<GroupElement>;
  using Data = std::variant<Perm, Residue, IntVec, Word, Heis, Tuple>;

  GroupElement() : data_(Residue{0}) {}
  explicit GroupElement(Data data) : data_(std::move(data)) {}

  const Data& data() const { return data_; }

  const Perm& perm() const;
  const Residue& residue() const;
  const IntVec& int_vec() const;
  const Word& word() const;
  const Heis& heis() const;
  const Tuple& tuple() const;

  friend bool operator==(const GroupElement& a, const GroupElement& b);
  friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
  /// Total order: variant kind, then lexicographic on the canonical form
  /// (shortlex for free words). Used for all deterministic orderings.
  friend bool operator<(const GroupElement& a, const GroupElement& b);

 private:
  Data data_;
};

struct GroupSpec {
  GroupKind kind = GroupKind::FreeAbelian;
  int degree = 0;                                 // finite_perm
  std::vector<std::vector<int>> perm_generators;  // finite_perm
  long long modulus = 0;                          // finite_cyclic
  int rank = 1;                                   // free_abelian / free
  std::vector<GroupSpec> factors;                 // product
  std::vector<std::string> generator_labels;      // normalized by Group::make

  static GroupSpec finite_perm(int degree, std::vector<std::vector<int>> generators,
                               std::vector<std::string> labels = {});
  static GroupSpec finite_cyclic(long long n, std::string label = "t");
  static GroupSpec free_abelian(int rank, std::vector<std::string> labels = {});
  static GroupSpec free_group(int rank, std::vector<std::string> labels = {});
  static GroupSpec heisenberg();
  static GroupSpec product(std::vector<GroupSpec> factors);
};

struct BallEntry {
  GroupElement element;
  int length = 0;
};

/// A catalog group with exact canonical forms. Construction validates the
/// spec; all operations afterwards are pure. Memoized BFS data fills
/// idempotently under a lock, so concurrent readers are safe.
class Group {
 public:
  static std::shared_ptr<const Group> make(GroupSpec spec);

  const GroupSpec& spec() const { return spec_; }
  GroupKind kind() const { return spec_.kind; }
  int generator_count() const { return static_cast<int>(spec_.generator_labels.size()); }
  const std::vector<std::string>& generator_labels() const { return spec_.generator_labels; }
  int generator_index(const std::string& label) const;

  GroupElement identity() const;
  GroupElement generator(int i) const;  // 0-based
  bool is_identity(const GroupElement& a) const;

  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inv(const GroupElement& a) const;
  /// Product of signed generator letters (+k / -k, 1-based).
  GroupElement word_element(std::span<const int> letters) const;

  /// A fixed word in the generators evaluating to g. For kinds with
  /// closed canonical forms the word is the normal form; for permutation
  /// groups it is the first BFS word (shortlex in discovery order).
  std::vector<int> canonical_word(const GroupElement& a) const;

  /// Shortest word length over the symmetrized generating set.
  int word_length(const GroupElement& a, int radius_cap = limits::radius_cap) const;

  /// All elements with |g| <= radius, lexicographically sorted canonical
  /// forms, each with its exact length.
  std::vector<BallEntry> cayley_ball(int radius, std::size_t limit = limits::ball_limit) const;

  /// Relator words (empty for free; by-exhaustion kinds store none).
  const std::vector<std::vector<int>>& relators() const { return relators_; }
  bool relators_by_exhaustion() const;

  bool finite() const;
  /// Full sorted enumeration; finite kinds only.
  std::vector<GroupElement> elements(std::size_t limit = limits::ball_limit) const;

  /// Validates that the element's canonical form matches this group.
  void check_element(const GroupElement& a) const;

  // Product structure (kind() == Product only).
  int factor_count() const { return static_cast<int>(factors_.size()); }
  const std::shared_ptr<const Group>& factor(int j) const;
  /// Maps a global generator index to (factor, local index).
  std::pair<int, int> factor_of_generator(int i) const;
  /// First global generator index of factor j.
  int generator_offset(int j) const;

 private:
  explicit Group(GroupSpec spec);
  void build_relators();
  void ensure_bfs_radius(int radius, std::size_t limit) const;

  GroupSpec spec_;
  std::vector<std::shared_ptr<const Group>> factors_;
  std::vector<int> factor_offsets_;
  std::vector<std::vector<int>> relators_;

  mutable std::mutex cache_mutex_;
  mutable std::map<GroupElement, int> bfs_length_;
  mutable std::map<GroupElement, std::vector<int>> bfs_word_;
  mutable std::vector<GroupElement> bfs_frontier_;
  mutable int bfs_radius_ = -1;
  mutable bool bfs_exhausted_ = false;
};

using GroupPtr = std::shared_ptr<const Group>;

}  // namespace harmonics
