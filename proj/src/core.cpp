#include "votemap/core.hpp"

#include "votemap/error.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace votemap {

namespace {

std::vector<std::uint64_t> position_counts(const Election& e) {
  const std::size_t m = e.candidates();
  if (e.voters() == 0) throw DomainError("frequency matrix of an empty election");
  std::vector<std::uint64_t> counts(m * m, 0);
  for (const auto& wv : e.votes())
    for (Position i = 0; i < m; ++i) counts[i * m + wv.ranking[i]] += wv.multiplicity;
  return counts;
}

}  // namespace

FrequencyMatrix frequency_matrix(const Election& e) {
  const auto counts = position_counts(e);
  const double n = static_cast<double>(e.voters());
  FrequencyMatrix out(e.candidates());
  for (std::size_t k = 0; k < counts.size(); ++k) out.data()[k] = static_cast<double>(counts[k]) / n;
  return out;
}

RationalMatrix frequency_matrix_exact(const Election& e) {
  const auto counts = position_counts(e);
  const BigInt n = e.voters();
  RationalMatrix out(e.candidates());
  for (std::size_t k = 0; k < counts.size(); ++k) out.data()[k] = Rational(BigInt(counts[k]), n);
  return out;
}

bool is_single_peaked_wrt(const Ranking& v, const Ranking& axis) {
  if (v.size() != axis.size()) throw DimensionError("vote and axis sizes differ");
  const auto where = axis.positions();
  if (v.size() == 0) return true;
  std::size_t lo = where[v[0]];
  std::size_t hi = lo;
  for (std::size_t t = 1; t < v.size(); ++t) {
    const std::size_t p = where[v[t]];
    if (lo > 0 && p == lo - 1) {
      lo = p;
    } else if (p == hi + 1) {
      hi = p;
    } else {
      return false;
    }
  }
  return true;
}

bool is_consistent_with_tree(const Ranking& v, const GSTree& t) {
  if (v.size() != t.candidates()) throw DimensionError("vote and tree candidate counts differ");
  const auto pos = v.positions();
  struct Block {
    std::size_t lo, hi;
  };
  // Returns the position block occupied by the subtree, or nullopt when the
  // subtree's leaves are not arranged as a reversal of the tree.
  std::function<std::optional<Block>(std::size_t)> visit = [&](std::size_t id) -> std::optional<Block> {
    const auto& node = t.node(id);
    if (node.leaf) return Block{pos[node.candidate], pos[node.candidate]};
    std::vector<Block> blocks;
    blocks.reserve(node.children.size());
    for (auto c : node.children) {
      auto b = visit(c);
      if (!b) return std::nullopt;
      blocks.push_back(*b);
    }
    bool forward = true;
    bool backward = true;
    for (std::size_t k = 0; k + 1 < blocks.size(); ++k) {
      forward = forward && blocks[k + 1].lo == blocks[k].hi + 1;
      backward = backward && blocks[k].lo == blocks[k + 1].hi + 1;
    }
    if (!forward && !backward) return std::nullopt;
    return forward ? Block{blocks.front().lo, blocks.back().hi} : Block{blocks.back().lo, blocks.front().hi};
  };
  return visit(0).has_value();
}

Ranking gs_to_sp(const Ranking& v) {
  const std::size_t m = v.size();
  std::vector<Candidate> order(m);
  for (Position i = 0; i < m; ++i) order[m - 1 - v[i]] = i;
  return Ranking(std::move(order));
}

}  // namespace votemap
