#include "votemap/fitting.hpp"

#include "votemap/core.hpp"
#include "votemap/error.hpp"
#include "votemap/metric.hpp"
#include "votemap/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace votemap {

std::string fit_family_name(FitFamily f) {
  switch (f) {
    case FitFamily::Mallows: return "mallows";
    case FitFamily::PhiConitzer: return "phi-conitzer";
    case FitFamily::PhiWalsh: return "phi-walsh";
    case FitFamily::MallowsMixture: return "mallows-mixture";
  }
  return "unknown";
}

FitFamily parse_fit_family(const std::string& name) {
  for (auto f : {FitFamily::Mallows, FitFamily::PhiConitzer, FitFamily::PhiWalsh, FitFamily::MallowsMixture})
    if (fit_family_name(f) == name) return f;
  throw DomainError("unsupported fit family '" + name + "'");
}

namespace {

// Improvements smaller than this are treated as ties so that rounding noise
// cannot override the smaller-phi, smaller-p preference.
constexpr double kTieTolerance = 1e-12;

}  // namespace

FitGrid::FitGrid(FitFamily family, std::size_t m, double grid_step, unsigned threads)
    : family_(family), m_(m), step_(grid_step) {
  if (m == 0) throw DimensionError("fit grid needs at least one candidate");
  if (!(grid_step > 0.0 && grid_step <= 1.0)) throw DomainError("grid step must lie in (0, 1]");
  const auto count = static_cast<std::size_t>(std::floor(1.0 / grid_step + 1e-9)) + 1;
  for (std::size_t k = 0; k < count; ++k) norm_phis_.push_back(std::min(1.0, static_cast<double>(k) * grid_step));
  if (family == FitFamily::MallowsMixture) {
    for (int l = 0; l <= 10; ++l) ps_.push_back(l / 20.0);
  } else {
    ps_.push_back(0.0);
  }

  FrequencyMatrix base;
  if (family == FitFamily::PhiConitzer) base = conitzer_matrix(m);
  if (family == FitFamily::PhiWalsh) base = walsh_matrix(m);

  phis_.resize(count);
  matrices_.resize(count);
  parallel_for(count, threads, [&](std::size_t k) {
    phis_[k] = norm_phi_to_phi(m, norm_phis_[k]);
    FrequencyMatrix mal = mallows_matrix({m, phis_[k], std::nullopt});
    matrices_[k] = base.size() ? multiply(mal, base) : std::move(mal);
  });
}

FrequencyMatrix FitGrid::matrix(std::size_t k, std::size_t l) const {
  const FrequencyMatrix& forward = matrices_.at(k);
  const double p = ps_.at(l);
  if (p == 0.0) return forward;
  // Mallows around the reversed vote is the same matrix with columns reversed.
  FrequencyMatrix out(m_);
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t j = 0; j < m_; ++j) out(i, j) = (1.0 - p) * forward(i, j) + p * forward(i, m_ - 1 - j);
  return out;
}

FitResult FitGrid::fit(const FrequencyMatrix& target, unsigned threads) const {
  if (target.size() != m_)
    throw DimensionError("election has " + std::to_string(target.size()) + " candidates, grid has " +
                         std::to_string(m_));
  const std::size_t np = ps_.size();
  std::vector<double> dist(norm_phis_.size() * np);
  parallel_for(dist.size(), threads, [&](std::size_t idx) {
    dist[idx] = positionwise_distance(target, matrix(idx / np, idx % np)).normalized;
  });
  std::size_t best = 0;
  for (std::size_t idx = 1; idx < dist.size(); ++idx)
    if (dist[idx] < dist[best] - kTieTolerance) best = idx;

  FitResult r;
  r.family = family_;
  r.norm_phi = norm_phis_[best / np];
  r.phi = phis_[best / np];
  if (family_ == FitFamily::MallowsMixture) r.p = ps_[best % np];
  r.distance = std::max(0.0, dist[best]);
  r.grid_step = step_;
  return r;
}

namespace {

std::shared_ptr<const FitGrid> cached_grid(FitFamily family, std::size_t m, double step, unsigned threads) {
  using Key = std::tuple<int, std::size_t, double>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const FitGrid>> cache;
  const Key key{static_cast<int>(family), m, step};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto grid = std::make_shared<const FitGrid>(family, m, step, threads);
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(grid)).first->second;
}

}  // namespace

FitResult fit_model(const FrequencyMatrix& target, FitFamily family, double grid_step, unsigned threads) {
  return cached_grid(family, target.size(), grid_step, threads)->fit(target, threads);
}

FitResult fit_model(const Election& e, FitFamily family, double grid_step, unsigned threads) {
  return fit_model(frequency_matrix(e), family, grid_step, threads);
}

Ranking kemeny_consensus(const Election& e) {
  const std::size_t m = e.candidates();
  if (e.voters() == 0) throw DomainError("kemeny consensus of an empty election");
  if (m > kKemenyMaxCandidates)
    throw ResourceError("kemeny consensus is exact only up to " + std::to_string(kKemenyMaxCandidates) +
                        " candidates, got " + std::to_string(m));
  if (m == 0) return Ranking{};

  // prefer[a][b]: voters ranking a above b.
  std::vector<std::uint64_t> prefer(m * m, 0);
  for (const auto& w : e.votes()) {
    const auto pos = w.ranking.positions();
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (pos[a] < pos[b]) prefer[a * m + b] += w.multiplicity;
  }

  // rest[S]: least disagreement for ordering the candidates outside S, given
  // that S already fills the top positions.
  const std::size_t full = (std::size_t{1} << m) - 1;
  const auto cost_next = [&](std::size_t placed, std::size_t c) {
    std::uint64_t cost = 0;
    for (std::size_t d = 0; d < m; ++d)
      if (d != c && !(placed >> d & 1)) cost += prefer[d * m + c];
    return cost;
  };
  std::vector<std::uint64_t> rest(full + 1, 0);
  for (std::size_t s = full; s-- > 0;) {
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t c = 0; c < m; ++c)
      if (!(s >> c & 1)) best = std::min(best, cost_next(s, c) + rest[s | std::size_t{1} << c]);
    rest[s] = best;
  }

  std::vector<Candidate> order;
  std::size_t s = 0;
  while (s != full) {
    for (std::size_t c = 0; c < m; ++c) {
      if (s >> c & 1) continue;
      const std::size_t next = s | std::size_t{1} << c;
      if (cost_next(s, c) + rest[next] == rest[s]) {
        order.push_back(c);
        s = next;
        break;
      }
    }
  }
  return Ranking(std::move(order));
}

KemenyEstimate kemeny_mle_phi(const Election& e) {
  KemenyEstimate out;
  out.consensus = kemeny_consensus(e);
  for (const auto& w : e.votes()) out.total_distance += w.multiplicity * swap_distance(w.ranking, out.consensus);
  const std::size_t m = e.candidates();
  if (m <= 1) return out;
  const double mean = static_cast<double>(out.total_distance) / static_cast<double>(e.voters());
  // E_phi[kappa] = mean  <=>  norm-phi = 4 mean / (m(m-1)).
  out.norm_phi_hat = std::clamp(4.0 * mean / static_cast<double>(m * (m - 1)), 0.0, 1.0);
  out.phi_hat = norm_phi_to_phi(m, out.norm_phi_hat);
  return out;
}

}  // namespace votemap
