#pragma once

#include "votemap/matrix.hpp"
#include "votemap/ranking.hpp"
#include "votemap/rng.hpp"

#include <string>
#include <vector>

namespace testing {

// "cbdae" -> ranking over a..e.
inline votemap::Ranking letters(const std::string& s) {
  std::vector<std::size_t> order;
  for (char ch : s) order.push_back(static_cast<std::size_t>(ch - 'a'));
  return votemap::Ranking(order);
}

inline votemap::Ranking random_ranking(std::size_t m, votemap::Rng& rng) {
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  for (std::size_t i = m; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  return votemap::Ranking(order);
}

// Random bistochastic matrix as a convex mix of a few permutation matrices.
inline votemap::FrequencyMatrix random_bistochastic(std::size_t m, votemap::Rng& rng, int terms = 4) {
  votemap::FrequencyMatrix a(m);
  std::vector<double> w(terms);
  double total = 0;
  for (auto& x : w) total += (x = rng.uniform() + 0.05);
  for (int t = 0; t < terms; ++t) {
    const auto v = random_ranking(m, rng);
    for (std::size_t i = 0; i < m; ++i) a(i, v[i]) += w[t] / total;
  }
  return a;
}

}  // namespace testing
