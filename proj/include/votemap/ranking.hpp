#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace votemap {

using Candidate = std::size_t;
using Position = std::size_t;

// A strict total order over candidates {0, ..., m-1}; order()[i] is the
// candidate ranked at (0-based) position i. Always a permutation.
class Ranking {
 public:
  Ranking() = default;
  // Throws DomainError unless `order` is a permutation of 0..m-1.
  explicit Ranking(std::vector<Candidate> order);

  static Ranking identity(std::size_t m);

  std::size_t size() const noexcept { return order_.size(); }
  Candidate operator[](Position i) const { return order_[i]; }
  std::span<const Candidate> order() const noexcept { return order_; }

  // positions()[c] is the position of candidate c.
  std::vector<Position> positions() const;

  friend auto operator<=>(const Ranking&, const Ranking&) = default;

 private:
  std::vector<Candidate> order_;
};

Position position_of(const Ranking& v, Candidate c);
Ranking reverse(const Ranking& v);

// Number of candidate pairs ordered differently by u and v (Kendall tau).
std::size_t swap_distance(const Ranking& u, const Ranking& v);

struct WeightedVote {
  Ranking ranking;
  std::uint64_t multiplicity = 1;
};

// Candidate count plus a multiset of rankings stored as (ranking, multiplicity).
class Election {
 public:
  Election() = default;
  explicit Election(std::size_t m) : m_(m) {}
  Election(std::size_t m, std::vector<WeightedVote> votes);

  // Merges with an existing identical ranking when it is the last one added.
  void add(Ranking v, std::uint64_t multiplicity = 1);

  std::size_t candidates() const noexcept { return m_; }
  std::uint64_t voters() const noexcept { return n_; }
  std::span<const WeightedVote> votes() const noexcept { return votes_; }

  // Votes grouped so that every distinct ranking appears once, sorted.
  Election compacted() const;

 private:
  std::size_t m_ = 0;
  std::uint64_t n_ = 0;
  std::vector<WeightedVote> votes_;
};

}  // namespace votemap
