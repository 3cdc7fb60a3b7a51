#pragma once

#include "votemap/models.hpp"
#include "votemap/ranking.hpp"
#include "votemap/rng.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace votemap {

struct SampleRequest {
  ModelSpec spec;
  std::uint64_t n = 1;
  std::uint64_t seed = 0;
};

// Draws single votes from a model. Dispersions are resolved once at
// construction, so reuse one sampler for many votes.
class VoteSampler {
 public:
  explicit VoteSampler(const ModelSpec& spec);
  ~VoteSampler();
  VoteSampler(VoteSampler&&) noexcept;
  VoteSampler& operator=(VoteSampler&&) noexcept;

  Ranking operator()(Rng& rng) const;
  std::size_t candidates() const noexcept { return m_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::size_t m_;
};

// Mallows vote by repeated insertion: the t-th candidate of the central vote
// goes to position p in [1, t] with weight phi^(t-p).
Ranking sample_mallows(const Ranking& central, double phi, Rng& rng);

// n i.i.d. votes; deterministic given the seed.
Election sample_election(const SampleRequest& req);

struct VarianceSummary {
  double mean = 0.0;
  double q10 = 0.0;  // linear-interpolation quantiles
  double q90 = 0.0;
  std::size_t trials = 0;
};

// Normalized positionwise distance between sampled n-voter elections and the
// model's own frequency matrix. Trial t draws from stream t of `seed`, so the
// result is the same for every thread count.
VarianceSummary empirical_matrix_distance(const ModelSpec& spec, std::uint64_t n, std::size_t trials,
                                          std::uint64_t seed, unsigned threads = 1);

// Type-7 (linear interpolation) quantile of unsorted data.
double quantile(std::vector<double> values, double q);

}  // namespace votemap
