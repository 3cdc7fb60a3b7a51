#include "helpers.hpp"
#include "oracles.hpp"

#include "votemap/compass.hpp"
#include "votemap/core.hpp"
#include "votemap/error.hpp"
#include "votemap/gs_tree.hpp"

#include <doctest.h>

#include <set>

using namespace votemap;
using testing::letters;

namespace {

Election example_one() {
  Election e(5);
  for (auto v : {"abcde", "cbdae", "decba", "bcade"}) e.add(letters(v));
  return e;
}

}  // namespace

TEST_CASE("ranking validation") {
  CHECK_THROWS_AS(Ranking({0, 0, 1}), DomainError);
  CHECK_THROWS_AS(Ranking({0, 2}), DomainError);
  CHECK_NOTHROW(Ranking({2, 0, 1}));
  CHECK(Ranking::identity(3) == letters("abc"));
}

TEST_CASE("position_of") {
  const auto v = letters("abc");
  CHECK(position_of(v, 0) == 0);
  CHECK(position_of(v, 2) == 2);
  CHECK(position_of(letters("cbdae"), 0) == 3);
}

TEST_CASE("reverse") {
  CHECK(reverse(letters("abc")) == letters("cba"));
  CHECK(reverse(Ranking::identity(1)) == Ranking::identity(1));
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const auto v = testing::random_ranking(7, rng);
    CHECK(reverse(reverse(v)) == v);
  }
}

TEST_CASE("swap distance") {
  CHECK(swap_distance(letters("abc"), letters("abc")) == 0);
  CHECK(swap_distance(letters("abc"), letters("cba")) == 3);
  CHECK(swap_distance(letters("abc"), letters("bac")) == 1);
  CHECK_THROWS_AS(swap_distance(letters("abc"), letters("ab")), DimensionError);

  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto u = testing::random_ranking(6, rng), v = testing::random_ranking(6, rng),
               w = testing::random_ranking(6, rng);
    const auto uv = swap_distance(u, v);
    CHECK(uv == swap_distance(v, u));
    CHECK(uv <= 15);
    CHECK((uv == 0) == (u == v));
    CHECK(swap_distance(u, w) <= uv + swap_distance(v, w));
    const auto ou = std::vector<std::size_t>(u.order().begin(), u.order().end());
    const auto ov = std::vector<std::size_t>(v.order().begin(), v.order().end());
    CHECK(uv == oracle::inversions(ou, ov));
  }
}

TEST_CASE("election bookkeeping") {
  Election e(3);
  e.add(letters("abc"), 2);
  e.add(letters("abc"));
  e.add(letters("cba"));
  CHECK(e.voters() == 4);
  CHECK(e.votes().size() == 2);
  CHECK_THROWS_AS(e.add(letters("ab")), DimensionError);
  CHECK_THROWS_AS(e.add(letters("abc"), 0), DomainError);
}

TEST_CASE("frequency matrix of the worked five-candidate example") {
  const auto exact = frequency_matrix_exact(example_one());
  const Rational q(1, 4), h(1, 2), t(3, 4), z(0);
  const std::vector<std::vector<Rational>> expected = {
      {q, q, q, q, z}, {z, h, q, z, q}, {q, z, h, q, z}, {q, q, z, h, z}, {q, z, z, z, t}};
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) CHECK(exact(i, j) == expected[i][j]);
  CHECK(is_bistochastic(exact));
  const auto f = frequency_matrix(example_one());
  CHECK(f(1, 1) == 0.5);
  CHECK(f(4, 4) == 0.75);
}

TEST_CASE("frequency matrix basics") {
  CHECK_THROWS_AS(frequency_matrix(Election(3)), DomainError);
  Election one(4);
  one.add(letters("cadb"));
  const auto p = frequency_matrix(one);
  for (std::size_t i = 0; i < 4; ++i) CHECK(p(i, letters("cadb")[i]) == 1.0);
  CHECK(is_bistochastic(p, 1e-12));

  Election pair(4);
  pair.add(letters("abcd"));
  pair.add(letters("dcba"));
  CHECK(frequency_matrix(pair) == compass_matrix<double>(CompassKind::Antagonism, 4));
}

TEST_CASE("single-peakedness") {
  CHECK(is_single_peaked_wrt(letters("cbdae"), letters("abcde")));
  CHECK_FALSE(is_single_peaked_wrt(letters("acb"), letters("abc")));
  CHECK(is_single_peaked_wrt(letters("ba"), letters("ab")));
  CHECK(is_single_peaked_wrt(letters("ab"), letters("ab")));
  // Against the direct definition for every ranking of 6 candidates.
  for (const auto& p : oracle::permutations(6)) CHECK(is_single_peaked_wrt(Ranking(p), Ranking::identity(6)) == oracle::single_peaked(p));
}

TEST_CASE("tree consistency") {
  const GSTree t2 = GSTree::parse("((1 2) (3 4))");
  const GSTree t3 = GSTree::caterpillar(4);
  CHECK(is_consistent_with_tree(letters("abcd"), t2));
  CHECK(is_consistent_with_tree(letters("abcd"), t3));
  CHECK(is_consistent_with_tree(letters("cdba"), t2));
  CHECK_FALSE(is_consistent_with_tree(letters("bdca"), t2));
  CHECK(is_consistent_with_tree(letters("bdca"), t3));
  CHECK(is_consistent_with_tree(GSTree::parse("(1 (2 3 4) 5)").frontier(), GSTree::parse("(1 (2 3 4) 5)")));
}

TEST_CASE("caterpillar support and the map to single-peaked votes") {
  for (std::size_t m = 2; m <= 6; ++m) {
    const GSTree cp = GSTree::caterpillar(m);
    std::set<Ranking> images;
    std::size_t support = 0;
    for (const auto& p : oracle::permutations(m)) {
      const Ranking v(p);
      if (!is_consistent_with_tree(v, cp)) continue;
      ++support;
      const Ranking sp = gs_to_sp(v);
      CHECK(is_single_peaked_wrt(sp, Ranking::identity(m)));
      images.insert(sp);
    }
    CHECK(support == (std::size_t{1} << (m - 1)));
    CHECK(images.size() == support);  // injective onto the 2^(m-1) SP votes
  }
}

TEST_CASE("tree validation and notation") {
  CHECK_THROWS_AS(GSTree::parse("((1) 2)"), StructureError);
  CHECK_THROWS_AS(GSTree::parse("(1 1 2)"), StructureError);
  CHECK_THROWS_AS(GSTree::parse("(1 3)"), StructureError);
  CHECK_THROWS_AS(GSTree::balanced(6), StructureError);
  const GSTree t = GSTree::parse("(1 (2 3) (4 5 6))");
  CHECK(t.candidates() == 6);
  CHECK(GSTree::parse(t.to_string()).to_string() == t.to_string());
}
