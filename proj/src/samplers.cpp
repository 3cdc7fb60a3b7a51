#include "votemap/samplers.hpp"

#include "votemap/core.hpp"
#include "votemap/error.hpp"
#include "votemap/metric.hpp"
#include "votemap/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace votemap {

namespace {

// Cumulative insertion weights for every t: row t holds sum_{q<=p} phi^(t-q).
struct InsertionTable {
  std::vector<std::vector<double>> cumulative;

  InsertionTable(std::size_t m, double phi) : cumulative(m + 1) {
    for (std::size_t t = 1; t <= m; ++t) {
      auto& row = cumulative[t];
      row.resize(t);
      double acc = 0.0;
      for (std::size_t p = 1; p <= t; ++p) {
        acc += std::pow(phi, static_cast<double>(t - p));
        row[p - 1] = acc;
      }
    }
  }

  std::size_t draw(std::size_t t, Rng& rng) const {
    const auto& row = cumulative[t];
    const double u = rng.uniform() * row.back();
    const auto it = std::upper_bound(row.begin(), row.end(), u);
    return std::min<std::size_t>(static_cast<std::size_t>(it - row.begin()), t - 1);
  }
};

Ranking mallows_with_table(const Ranking& central, const InsertionTable& table, Rng& rng) {
  std::vector<Candidate> order;
  order.reserve(central.size());
  for (std::size_t t = 1; t <= central.size(); ++t) {
    const std::size_t p = table.draw(t, rng);
    order.insert(order.begin() + static_cast<std::ptrdiff_t>(p), central[t - 1]);
  }
  return Ranking(std::move(order));
}

Ranking relabel(const Ranking& v, const std::optional<Ranking>& axis) {
  if (!axis) return v;
  std::vector<Candidate> order(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) order[i] = (*axis)[v[i]];
  return Ranking(std::move(order));
}

Ranking uniform_permutation(std::size_t m, Rng& rng) {
  std::vector<Candidate> order(m);
  std::iota(order.begin(), order.end(), Candidate{0});
  for (std::size_t i = m; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  return Ranking(std::move(order));
}

Ranking tree_frontier(const GSTree& tree, Rng& rng) {
  std::vector<Candidate> order;
  order.reserve(tree.candidates());
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const std::size_t id = stack.back();
    stack.pop_back();
    const auto& node = tree.node(id);
    if (node.leaf) {
      order.push_back(node.candidate);
      continue;
    }
    // Stack pops in reverse push order.
    if (rng.coin())
      for (auto c : node.children) stack.push_back(c);
    else
      for (auto it = node.children.rbegin(); it != node.children.rend(); ++it) stack.push_back(*it);
  }
  return Ranking(std::move(order));
}

Ranking random_peak(std::size_t m, Rng& rng) {
  std::vector<Candidate> order;
  order.reserve(m);
  std::size_t lo = rng.below(m);
  std::size_t hi = lo;
  order.push_back(lo);
  while (order.size() < m) {
    const bool can_left = lo > 0;
    const bool can_right = hi + 1 < m;
    if (can_left && (!can_right || rng.coin()))
      order.push_back(--lo);
    else
      order.push_back(++hi);
  }
  return Ranking(std::move(order));
}

}  // namespace

struct VoteSampler::Impl {
  ModelFamily family;
  std::size_t m;
  Ranking central;
  std::optional<Ranking> axis;
  double p = 1.0;
  std::optional<InsertionTable> forward;
  std::optional<InsertionTable> backward;
  std::optional<GSTree> tree;
  std::unique_ptr<VoteSampler> base;
};

VoteSampler::VoteSampler(const ModelSpec& spec) : impl_(std::make_unique<Impl>()), m_(spec.m) {
  spec.validate();
  Impl& s = *impl_;
  s.family = spec.family;
  s.m = spec.m;
  s.central = spec.central ? *spec.central : Ranking::identity(spec.m);
  s.axis = spec.central;
  switch (spec.family) {
    case ModelFamily::Mallows:
    case ModelFamily::MallowsFiltered:
      s.forward.emplace(s.m, spec.dispersion->resolve(s.m));
      break;
    case ModelFamily::MallowsReversalMixture: {
      const double phi = spec.dispersion->resolve(s.m);
      s.forward.emplace(s.m, phi);
      s.backward.emplace(s.m, spec.reversed_dispersion ? spec.reversed_dispersion->resolve(s.m) : phi);
      s.p = to_double(spec.p);
      break;
    }
    case ModelFamily::GSTreeUniform:
      s.tree = spec.tree;
      break;
    case ModelFamily::Walsh:
      s.tree = GSTree::caterpillar(s.m);
      break;
    default:
      break;
  }
  if (spec.family == ModelFamily::MallowsFiltered) s.base = std::make_unique<VoteSampler>(*spec.base);
}

VoteSampler::~VoteSampler() = default;
VoteSampler::VoteSampler(VoteSampler&&) noexcept = default;
VoteSampler& VoteSampler::operator=(VoteSampler&&) noexcept = default;

Ranking VoteSampler::operator()(Rng& rng) const {
  const Impl& s = *impl_;
  switch (s.family) {
    case ModelFamily::IC:
      return uniform_permutation(s.m, rng);
    case ModelFamily::Mallows:
      return mallows_with_table(s.central, *s.forward, rng);
    case ModelFamily::MallowsReversalMixture:
      if (rng.uniform() < s.p) return mallows_with_table(s.central, *s.forward, rng);
      return mallows_with_table(reverse(s.central), *s.backward, rng);
    case ModelFamily::Conitzer:
      return relabel(random_peak(s.m, rng), s.axis);
    case ModelFamily::Walsh:
      // Caterpillar coin flips mapped through the GS -> SP bijection.
      return relabel(gs_to_sp(tree_frontier(*s.tree, rng)), s.axis);
    case ModelFamily::GSTreeUniform:
      return tree_frontier(*s.tree, rng);
    case ModelFamily::MallowsFiltered: {
      const Ranking center = (*s.base)(rng);
      return mallows_with_table(center, *s.forward, rng);
    }
  }
  throw DomainError("unknown model family");
}

Ranking sample_mallows(const Ranking& central, double phi, Rng& rng) {
  if (!(phi >= 0.0 && phi <= 1.0)) throw DomainError("dispersion phi must lie in [0,1]");
  return mallows_with_table(central, InsertionTable(central.size(), phi), rng);
}

namespace {

Election draw(const VoteSampler& sampler, std::uint64_t n, Rng& rng) {
  Election e(sampler.candidates());
  for (std::uint64_t k = 0; k < n; ++k) e.add(sampler(rng));
  return e;
}

}  // namespace

Election sample_election(const SampleRequest& req) {
  if (req.n == 0) throw DomainError("an election needs at least one voter");
  const VoteSampler sampler(req.spec);
  Rng rng(req.seed);
  return draw(sampler, req.n, rng);
}

double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw DomainError("quantile of an empty sample");
  std::sort(values.begin(), values.end());
  const double h = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (h - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

VarianceSummary empirical_matrix_distance(const ModelSpec& spec, std::uint64_t n, std::size_t trials,
                                          std::uint64_t seed, unsigned threads) {
  if (trials == 0) throw DomainError("need at least one trial");
  if (n == 0) throw DomainError("an election needs at least one voter");
  const FrequencyMatrix target = model_matrix(spec);
  const VoteSampler sampler(spec);
  std::vector<double> distances(trials);
  parallel_for(trials, threads, [&](std::size_t t) {
    Rng rng = Rng::stream(seed, t);
    distances[t] = election_distance(draw(sampler, n, rng), target).normalized;
  });
  VarianceSummary out;
  out.trials = trials;
  double sum = 0.0;
  for (double d : distances) sum += d;
  out.mean = sum / static_cast<double>(trials);
  out.q10 = quantile(distances, 0.1);
  out.q90 = quantile(distances, 0.9);
  return out;
}

}  // namespace votemap
