#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "harmonics/group.hpp"
#include "testkit.hpp"

using namespace harmonics;
using testkit::Rng;

namespace {

GroupPtr z_group() { return Group::make(GroupSpec::free_abelian(1, {"t"})); }
GroupPtr z2_group() { return Group::make(GroupSpec::free_abelian(2, {"s", "t"})); }
GroupPtr f2_group() { return Group::make(GroupSpec::free_group(2, {"x", "y"})); }
GroupPtr s3_group() {
  // a = (01), b = (012)
  return Group::make(GroupSpec::finite_perm(3, {{1, 0, 2}, {1, 2, 0}}, {"a", "b"}));
}
GroupPtr heis_group() { return Group::make(GroupSpec::heisenberg()); }

GroupElement zn(long long n) { return GroupElement(IntVec{{n}}); }
GroupElement z2v(long long a, long long b) { return GroupElement(IntVec{{a, b}}); }

}  // namespace

TEST_CASE("multiplication: cancellation in Z") {
  auto g = z_group();
  CHECK(g->mul(zn(2), zn(-1)) == zn(1));
}

TEST_CASE("multiplication: free reduction in F2") {
  auto g = f2_group();
  GroupElement xy(Word{{1, 2}});
  GroupElement yix(Word{{-2, 1}});
  CHECK(g->mul(xy, yix) == GroupElement(Word{{1, 1}}));
}

TEST_CASE("multiplication: Heisenberg commutator against the matrix model") {
  auto g = heis_group();
  GroupElement x = g->generator(0);
  GroupElement y = g->generator(1);
  GroupElement z = g->generator(2);
  GroupElement xy = g->mul(x, y);
  GroupElement yx = g->mul(y, x);
  CHECK(xy != yx);
  GroupElement comm = g->mul(xy, g->inv(yx));
  CHECK((comm == z || comm == g->inv(z)));

  // oracle: random words evaluated in both models agree
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> letters;
    int len = static_cast<int>(rng.uniform_int(0, 8));
    for (int i = 0; i < len; ++i) {
      int l = static_cast<int>(rng.uniform_int(1, 3));
      letters.push_back(rng.uniform() < 0.5 ? l : -l);
    }
    GroupElement e = g->word_element(letters);
    testkit::HeisMatrix m = testkit::heis_matrix_of_word(letters);
    CHECK(e.heis().a == m.m[0][1]);
    CHECK(e.heis().b == m.m[1][2]);
    CHECK(e.heis().c == m.m[0][2]);
  }
}

TEST_CASE("inverse: abelian negation in Z^2") {
  auto g = z2_group();
  CHECK(g->inv(z2v(2, -1)) == z2v(-2, 1));
}

TEST_CASE("inverse: 3-cycle in S3") {
  auto g = s3_group();
  GroupElement b = g->generator(1);  // (012)
  GroupElement binv = g->inv(b);
  CHECK(binv == g->mul(b, b));  // oracle: composing (012) with itself gives (021)
  CHECK(g->is_identity(g->mul(b, binv)));
}

TEST_CASE("inverse: word reversal in F2") {
  auto g = f2_group();
  GroupElement w(Word{{1, 2, -1}});  // x y x^-1
  CHECK(g->inv(w) == GroupElement(Word{{1, -2, -1}}));
}

TEST_CASE("word length: line, lattice, identity") {
  auto z = z_group();
  CHECK(z->word_length(zn(3)) == 3);
  CHECK(z->word_length(z->identity()) == 0);

  auto z2 = z2_group();
  auto oracle = testkit::bfs_length_oracle(*z2, 4);
  CHECK(z2->word_length(z2v(2, -1)) == oracle.at(z2v(2, -1)));
  CHECK(z2->word_length(z2v(2, -1)) == 3);

  auto s3 = s3_group();
  CHECK(s3->word_length(s3->identity()) == 0);
  auto s3_oracle = testkit::bfs_length_oracle(*s3, 6);
  for (const auto& [e, len] : s3_oracle) CHECK(s3->word_length(e) == len);
}

TEST_CASE("cayley ball: Z radius 2") {
  auto g = z_group();
  auto ball = g->cayley_ball(2);
  REQUIRE(ball.size() == 5);
  std::vector<long long> values;
  std::vector<int> lengths;
  for (const auto& [e, l] : ball) {
    values.push_back(e.int_vec().c[0]);
    lengths.push_back(l);
  }
  CHECK(values == std::vector<long long>{-2, -1, 0, 1, 2});
  CHECK(lengths == std::vector<int>{2, 1, 0, 1, 2});
}

TEST_CASE("cayley ball: Z^2 radius 1 has 5 elements") {
  auto g = z2_group();
  CHECK(g->cayley_ball(1).size() == 5);  // 1 + 4 lattice points at l1 distance 1
}

TEST_CASE("cayley ball: S3 closure reaches all 6 elements") {
  auto g = s3_group();
  auto ball = g->cayley_ball(10);
  CHECK(ball.size() == 6);
  CHECK(g->elements().size() == 6);
}

TEST_CASE("group laws on random triples per catalog kind") {
  Rng rng(11);
  std::vector<GroupPtr> groups = {
      z_group(), z2_group(), f2_group(), s3_group(), heis_group(),
      Group::make(GroupSpec::finite_cyclic(6)),
      Group::make(GroupSpec::product(
          {GroupSpec::free_abelian(1, {"t"}), GroupSpec::finite_cyclic(3)})),
  };
  for (const auto& g : groups) {
    for (int trial = 0; trial < 1000; ++trial) {
      GroupElement a = testkit::random_ball_element(rng, *g, 3);
      GroupElement b = testkit::random_ball_element(rng, *g, 3);
      GroupElement c = testkit::random_ball_element(rng, *g, 3);
      CHECK(g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c)));
      CHECK(g->mul(a, g->identity()) == a);
      CHECK(g->mul(g->identity(), a) == a);
      CHECK(g->is_identity(g->mul(a, g->inv(a))));
    }
  }
}

TEST_CASE("word metric: triangle inequality and symmetry") {
  Rng rng(13);
  std::vector<GroupPtr> groups = {z_group(), z2_group(), f2_group(), s3_group(), heis_group()};
  for (const auto& g : groups) {
    for (int trial = 0; trial < 200; ++trial) {
      GroupElement a = testkit::random_ball_element(rng, *g, 3);
      GroupElement b = testkit::random_ball_element(rng, *g, 3);
      int la = g->word_length(a);
      int lb = g->word_length(b);
      CHECK(g->word_length(g->mul(a, b)) <= la + lb);
      CHECK(g->word_length(g->inv(a)) == la);
    }
  }
}

TEST_CASE("balls nest and lengths are consistent across radii") {
  for (const auto& g : {z2_group(), heis_group()}) {
    auto small = g->cayley_ball(2);
    auto big = g->cayley_ball(3);
    REQUIRE(small.size() < big.size());
    std::map<GroupElement, int> big_len;
    for (const auto& [e, l] : big) big_len[e] = l;
    for (const auto& [e, l] : small) {
      REQUIRE(big_len.count(e) == 1);
      CHECK(big_len[e] == l);
    }
  }
}

TEST_CASE("canonical words evaluate back to their elements") {
  Rng rng(17);
  std::vector<GroupPtr> groups = {
      z2_group(), f2_group(), s3_group(), heis_group(),
      Group::make(GroupSpec::finite_cyclic(5)),
      Group::make(GroupSpec::product(
          {GroupSpec::free_abelian(1, {"t"}), GroupSpec::finite_cyclic(3)})),
  };
  for (const auto& g : groups) {
    for (int trial = 0; trial < 100; ++trial) {
      GroupElement a = testkit::random_ball_element(rng, *g, 4);
      auto w = g->canonical_word(a);
      CHECK(g->word_element(w) == a);
    }
  }
}

TEST_CASE("product group structure") {
  auto g = Group::make(
      GroupSpec::product({GroupSpec::free_abelian(1, {"t"}), GroupSpec::finite_cyclic(3)}));
  CHECK(g->generator_count() == 2);
  CHECK(g->generator_labels() == std::vector<std::string>{"1.t", "2.t"});
  CHECK(g->factor_count() == 2);
  CHECK_FALSE(g->finite());

  GroupElement s = g->generator(0);
  GroupElement t = g->generator(1);
  GroupElement st = g->mul(s, t);
  CHECK(st == g->mul(t, s));
  CHECK(g->word_length(st) == 2);

  auto both_finite = Group::make(
      GroupSpec::product({GroupSpec::finite_cyclic(2), GroupSpec::finite_cyclic(3)}));
  CHECK(both_finite->finite());
  CHECK(both_finite->elements().size() == 6);
}

TEST_CASE("errors: kind mismatch, radius cap, ball limit") {
  auto z = z_group();
  CHECK_THROWS_AS(z->mul(zn(1), GroupElement(Word{{1}})), Error);
  CHECK_THROWS_AS(z->word_length(zn(25), 20), Error);
  CHECK_THROWS_AS(z->cayley_ball(10, 5), Error);

  bool radius_kind_ok = false;
  try {
    z->word_length(zn(25), 20);
  } catch (const Error& e) {
    radius_kind_ok = e.kind() == ErrorKind::RadiusExceeded;
  }
  CHECK(radius_kind_ok);

  auto s3 = s3_group();
  // a 4-point permutation cannot live in a degree-3 group
  CHECK_THROWS_AS(s3->check_element(GroupElement(Perm{{1, 0, 3, 2}})), Error);
  // (01) and (012) generate all of S3, so any degree-3 permutation is fine,
  // but the subgroup generated by (01) alone is smaller:
  auto c2 = Group::make(GroupSpec::finite_perm(3, {{1, 0, 2}}, {"a"}));
  CHECK(c2->elements().size() == 2);
  CHECK_THROWS_AS(c2->word_length(GroupElement(Perm{{1, 2, 0}})), Error);
}
