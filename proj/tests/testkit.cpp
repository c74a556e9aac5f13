#include "testkit.hpp"

#include <cmath>

#include <Eigen/QR>

namespace testkit {

using namespace harmonics;

std::uint64_t Rng::next_u64() {
  // splitmix64
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::uniform(double a, double b) { return a + (b - a) * uniform(); }

long long Rng::uniform_int(long long a, long long b) {
  return a + static_cast<long long>(next_u64() % static_cast<std::uint64_t>(b - a + 1));
}

double Rng::normal() {
  double u1 = uniform();
  double u2 = uniform();
  if (u1 < 1e-300) u1 = 1e-300;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

Complex Rng::normal_complex() {
  double re = normal();
  double im = normal();
  return Complex(re, im) / std::sqrt(2.0);
}

std::map<GroupElement, int> bfs_length_oracle(const Group& g, int radius) {
  std::map<GroupElement, int> dist;
  std::vector<GroupElement> frontier{g.identity()};
  dist[g.identity()] = 0;
  for (int r = 1; r <= radius; ++r) {
    std::vector<GroupElement> next;
    for (const auto& e : frontier) {
      for (int i = 0; i < g.generator_count(); ++i) {
        for (int sign : {+1, -1}) {
          GroupElement s = g.generator(i);
          GroupElement h = g.mul(e, sign > 0 ? s : g.inv(s));
          if (!dist.count(h)) {
            dist[h] = r;
            next.push_back(h);
          }
        }
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return dist;
}

HeisMatrix HeisMatrix::identity() {
  return HeisMatrix{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
}

HeisMatrix HeisMatrix::generator(int i) {
  HeisMatrix m = identity();
  if (i == 0) m.m[0][1] = 1;       // x
  else if (i == 1) m.m[1][2] = 1;  // y
  else m.m[0][2] = 1;              // z
  return m;
}

HeisMatrix HeisMatrix::operator*(const HeisMatrix& o) const {
  HeisMatrix r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      long long s = 0;
      for (int k = 0; k < 3; ++k) s += m[i][k] * o.m[k][j];
      r.m[i][j] = s;
    }
  return r;
}

HeisMatrix HeisMatrix::inverse() const {
  // [[1,a,c],[0,1,b],[0,0,1]]^-1 = [[1,-a,ab-c],[0,1,-b],[0,0,1]]
  HeisMatrix r = identity();
  r.m[0][1] = -m[0][1];
  r.m[1][2] = -m[1][2];
  r.m[0][2] = m[0][1] * m[1][2] - m[0][2];
  return r;
}

bool HeisMatrix::operator==(const HeisMatrix& o) const {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (m[i][j] != o.m[i][j]) return false;
  return true;
}

HeisMatrix heis_matrix_of_word(const std::vector<int>& letters) {
  HeisMatrix r = HeisMatrix::identity();
  for (int l : letters) {
    HeisMatrix g = HeisMatrix::generator(std::abs(l) - 1);
    r = r * (l > 0 ? g : g.inverse());
  }
  return r;
}

GroupElement random_ball_element(Rng& rng, const Group& g, int radius) {
  auto ball = g.cayley_ball(radius);
  return ball[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long long>(ball.size()) - 1))]
      .element;
}

Vector random_vector(Rng& rng, int dim, bool complex_field) {
  Vector v(dim);
  for (int i = 0; i < dim; ++i)
    v(i) = complex_field ? rng.normal_complex() : Complex(rng.normal(), 0.0);
  return v;
}

Matrix random_unitary(Rng& rng, int dim, bool complex_field) {
  Matrix a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      a(i, j) = complex_field ? rng.normal_complex() : Complex(rng.normal(), 0.0);
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // fix phases so the factorization is unique given the input
  for (int i = 0; i < dim; ++i) {
    Complex d = r(i, i);
    double ad = std::abs(d);
    q.col(i) *= ad > 0 ? d / ad : Complex(1, 0);
  }
  return q;
}

}  // namespace testkit
