#pragma once

// Shared helpers for the test suites: a deterministic RNG (fixed streams, so
// frozen expected values stay frozen), independent brute-force oracles, and
// small random-object builders.

#include <cstdint>
#include <map>
#include <vector>

#include "harmonics/common.hpp"
#include "harmonics/group.hpp"

namespace testkit {

/// Deterministic RNG with hand-rolled distributions so the stream does not
/// depend on the standard library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next_u64();
  double uniform();                     // [0,1)
  double uniform(double a, double b);   // [a,b)
  long long uniform_int(long long a, long long b);  // inclusive
  double normal();                      // Box-Muller, one value per call
  harmonics::Complex normal_complex();

 private:
  std::uint64_t state_;
};

/// Word lengths up to `radius` by plain breadth-first search using only
/// mul/inv/generator. Independent of Group's internal length computation.
std::map<harmonics::GroupElement, int> bfs_length_oracle(const harmonics::Group& g, int radius);

/// Integer 3x3 matrix model of the integer Heisenberg group, used as an
/// independent oracle for the Heis canonical-form arithmetic.
struct HeisMatrix {
  long long m[3][3];
  static HeisMatrix identity();
  static HeisMatrix generator(int i);  // 0=x, 1=y, 2=z
  HeisMatrix operator*(const HeisMatrix& o) const;
  HeisMatrix inverse() const;
  bool operator==(const HeisMatrix& o) const;
};

HeisMatrix heis_matrix_of_word(const std::vector<int>& letters);

/// Random element of the radius-r ball (uniform over the sorted ball).
harmonics::GroupElement random_ball_element(Rng& rng, const harmonics::Group& g, int radius);

harmonics::Vector random_vector(Rng& rng, int dim, bool complex_field);
harmonics::Matrix random_unitary(Rng& rng, int dim, bool complex_field);

}  // namespace testkit
