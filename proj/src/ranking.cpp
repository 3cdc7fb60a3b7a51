#include "votemap/ranking.hpp"

#include "votemap/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace votemap {

Ranking::Ranking(std::vector<Candidate> order) : order_(std::move(order)) {
  std::vector<bool> seen(order_.size(), false);
  for (Candidate c : order_) {
    if (c >= order_.size())
      throw DomainError("candidate " + std::to_string(c) + " out of range for m=" +
                        std::to_string(order_.size()));
    if (seen[c]) throw DomainError("candidate " + std::to_string(c) + " ranked twice");
    seen[c] = true;
  }
}

Ranking Ranking::identity(std::size_t m) {
  std::vector<Candidate> order(m);
  std::iota(order.begin(), order.end(), Candidate{0});
  return Ranking(std::move(order));
}

std::vector<Position> Ranking::positions() const {
  std::vector<Position> pos(order_.size());
  for (Position i = 0; i < order_.size(); ++i) pos[order_[i]] = i;
  return pos;
}

Position position_of(const Ranking& v, Candidate c) {
  if (c >= v.size()) throw DomainError("candidate out of range");
  const auto order = v.order();
  return static_cast<Position>(std::find(order.begin(), order.end(), c) - order.begin());
}

Ranking reverse(const Ranking& v) {
  std::vector<Candidate> order(v.order().rbegin(), v.order().rend());
  return Ranking(std::move(order));
}

std::size_t swap_distance(const Ranking& u, const Ranking& v) {
  if (u.size() != v.size())
    throw DimensionError("swap distance between rankings of length " + std::to_string(u.size()) +
                         " and " + std::to_string(v.size()));
  // Relabel u through v's positions and count inversions.
  const auto pos_v = v.positions();
  const std::size_t m = u.size();
  std::vector<std::size_t> seq(m);
  for (std::size_t i = 0; i < m; ++i) seq[i] = pos_v[u[i]];
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (seq[i] > seq[j]) ++inversions;
  return inversions;
}

Election::Election(std::size_t m, std::vector<WeightedVote> votes) : m_(m) {
  for (auto& wv : votes) add(std::move(wv.ranking), wv.multiplicity);
}

void Election::add(Ranking v, std::uint64_t multiplicity) {
  if (v.size() != m_)
    throw DimensionError("vote over " + std::to_string(v.size()) + " candidates in an election with " +
                         std::to_string(m_));
  if (multiplicity == 0) throw DomainError("vote multiplicity must be positive");
  n_ += multiplicity;
  if (!votes_.empty() && votes_.back().ranking == v) {
    votes_.back().multiplicity += multiplicity;
    return;
  }
  votes_.push_back({std::move(v), multiplicity});
}

Election Election::compacted() const {
  std::map<Ranking, std::uint64_t> counts;
  for (const auto& wv : votes_) counts[wv.ranking] += wv.multiplicity;
  Election out(m_);
  for (auto& [v, k] : counts) out.add(v, k);
  return out;
}

}  // namespace votemap
