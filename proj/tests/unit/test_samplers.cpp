#include "oracles.hpp"

#include "votemap/core.hpp"
#include "votemap/error.hpp"
#include "votemap/metric.hpp"
#include "votemap/samplers.hpp"

#include <doctest.h>

#include <map>

using namespace votemap;

namespace {

ModelSpec mallows(std::size_t m, double phi) {
  return ModelSpec::mallows(m, Dispersion::phi(parse_rational(std::to_string(phi))));
}

}  // namespace

TEST_CASE("rng streams are reproducible") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a() == b());
  Rng s0 = Rng::stream(42, 0), s1 = Rng::stream(42, 1);
  CHECK(s0() != s1());
  Rng r(1);
  for (int i = 0; i < 1000; ++i) {
    CHECK(r.below(7) < 7);
    const double u = r.uniform();
    CHECK((u >= 0.0 && u < 1.0));
  }
}

TEST_CASE("degenerate dispersion returns the central vote") {
  ModelSpec spec = mallows(6, 0.0);
  spec.central = Ranking({3, 1, 0, 5, 2, 4});
  const Election e = sample_election({spec, 50, 9});
  REQUIRE(e.votes().size() == 1);
  CHECK(e.votes()[0].ranking == *spec.central);
  CHECK(e.voters() == 50);
  CHECK(empirical_matrix_distance(spec, 20, 5, 1).mean == 0.0);
}

TEST_CASE("structured samplers stay in their domains") {
  const Election con = sample_election({ModelSpec::conitzer(5), 10000, 3});
  for (const auto& w : con.votes()) CHECK(is_single_peaked_wrt(w.ranking, Ranking::identity(5)));
  const Election wal = sample_election({ModelSpec::walsh(7), 10000, 4});
  for (const auto& w : wal.votes()) CHECK(is_single_peaked_wrt(w.ranking, Ranking::identity(7)));
  const GSTree cp = GSTree::caterpillar(4);
  const Election gs = sample_election({ModelSpec::gs_tree(cp), 10000, 5});
  for (const auto& w : gs.votes()) CHECK(is_consistent_with_tree(w.ranking, cp));

  ModelSpec axis = ModelSpec::conitzer(5);
  axis.central = Ranking({4, 2, 0, 1, 3});
  const Election around = sample_election({axis, 2000, 6});
  for (const auto& w : around.votes()) CHECK(is_single_peaked_wrt(w.ranking, *axis.central));
}

TEST_CASE("same seed, same election") {
  const auto spec = ModelSpec::reversal_mixture(6, Dispersion::norm(Rational(1, 2)), Dispersion::norm(Rational(1, 5)), Rational(3, 10));
  const Election a = sample_election({spec, 300, 77});
  const Election b = sample_election({spec, 300, 77});
  REQUIRE(a.votes().size() == b.votes().size());
  for (std::size_t k = 0; k < a.votes().size(); ++k) {
    CHECK(a.votes()[k].ranking == b.votes()[k].ranking);
    CHECK(a.votes()[k].multiplicity == b.votes()[k].multiplicity);
  }
  const auto s1 = empirical_matrix_distance(spec, 50, 40, 8, 1);
  const auto s4 = empirical_matrix_distance(spec, 50, 40, 8, 4);
  CHECK(s1.mean == s4.mean);
  CHECK(s1.q10 == s4.q10);
  CHECK(s1.q90 == s4.q90);
}

TEST_CASE("Mallows sampler follows phi^kappa exactly for m = 3") {
  const double phi = 0.5;
  const Election e = sample_election({mallows(3, phi), 1000000, 2024});
  std::map<Ranking, double> freq;
  for (const auto& w : e.votes()) freq[w.ranking] += static_cast<double>(w.multiplicity) / 1e6;
  double z = 0;
  for (int k = 0; k <= 3; ++k) z += static_cast<double>(mahonian(3)(3, k).convert_to<double>()) * std::pow(phi, k);
  for (const auto& p : oracle::permutations(3)) {
    const Ranking v(p);
    CHECK(std::abs(freq[v] - std::pow(phi, static_cast<double>(swap_distance(v, Ranking::identity(3)))) / z) <= 3e-3);
  }
}

TEST_CASE("samplers reproduce their matrices") {
  const std::size_t n = 1000000;
  CHECK(election_distance(sample_election({mallows(5, 0.5), n, 1}), model_matrix(mallows(5, 0.5))).normalized <= 0.005);
  CHECK(election_distance(sample_election({ModelSpec::conitzer(10), n, 2}), model_matrix(ModelSpec::conitzer(10))).normalized <= 0.005);
  CHECK(election_distance(sample_election({ModelSpec::walsh(8), 200000, 3}), model_matrix(ModelSpec::walsh(8))).normalized <= 0.005);
  const auto filtered = ModelSpec::mallows_filtered(ModelSpec::conitzer(4), Dispersion::norm(Rational(1, 2)));
  CHECK(election_distance(sample_election({filtered, n, 4}), model_matrix(filtered)).normalized <= 0.005);
  const auto mix = ModelSpec::reversal_mixture(6, Dispersion::phi(Rational(1, 2)), Dispersion::phi(Rational(4, 5)), Rational(3, 10));
  CHECK(election_distance(sample_election({mix, 200000, 5}), model_matrix(mix)).normalized <= 0.005);
  const auto tree = ModelSpec::gs_tree(GSTree::parse("((1 2 3) (4 (5 6)) 7)"));
  CHECK(election_distance(sample_election({tree, 200000, 6}), model_matrix(tree)).normalized <= 0.005);
}

TEST_CASE("variance summaries") {
  const auto ic = empirical_matrix_distance(ModelSpec::ic(10), 100, 600, 12345);
  CHECK(std::abs(ic.mean - 0.09) <= 0.01);
  CHECK(ic.q10 <= ic.mean);
  CHECK(ic.mean <= ic.q90);
  double prev = 1e9;
  for (std::uint64_t n : {10u, 100u, 1000u}) {
    const double mean = empirical_matrix_distance(ModelSpec::conitzer(8), n, 100, 5).mean;
    CHECK(mean < prev);
    prev = mean;
  }
  CHECK(quantile({1, 2, 3, 4}, 0.5) == 2.5);
  CHECK_THROWS_AS(empirical_matrix_distance(ModelSpec::ic(4), 10, 0, 1), DomainError);
  CHECK_THROWS_AS(sample_election({ModelSpec::ic(4), 0, 1}), DomainError);
}
