#pragma once

// Brute-force references. Deliberately naive and independent of the library
// code paths they check: enumerate everything, weight it, add it up.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

namespace oracle {

using Perm = std::vector<std::size_t>;
using Dense = std::vector<std::vector<double>>;  // [position][candidate]

inline std::vector<Perm> permutations(std::size_t m) {
  Perm p(m);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::size_t inversions(const Perm& p, const Perm& ref) {
  std::vector<std::size_t> pos(ref.size());
  for (std::size_t i = 0; i < ref.size(); ++i) pos[ref[i]] = i;
  std::size_t n = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) n += pos[p[i]] > pos[p[j]];
  return n;
}

inline Dense zeros(std::size_t m) { return Dense(m, std::vector<double>(m, 0.0)); }

// E over the Mallows law around the identity: P(v) proportional to phi^kappa.
inline Dense mallows(std::size_t m, double phi) {
  Perm id(m);
  std::iota(id.begin(), id.end(), 0);
  Dense f = zeros(m);
  double z = 0.0;
  for (const auto& v : permutations(m)) {
    const double w = std::pow(phi, static_cast<double>(inversions(v, id)));  // pow(0,0) = 1
    z += w;
    for (std::size_t i = 0; i < m; ++i) f[i][v[i]] += w;
  }
  for (auto& row : f)
    for (auto& x : row) x /= z;
  return f;
}

// Direct definition of single-peakedness on the axis 0 < 1 < ... < m-1: every
// top segment is a set of consecutive integers.
inline bool single_peaked(const Perm& v) {
  std::size_t lo = v[0], hi = v[0];
  for (std::size_t t = 1; t < v.size(); ++t) {
    lo = std::min(lo, v[t]);
    hi = std::max(hi, v[t]);
    if (hi - lo != t) return false;
  }
  return true;
}

inline Dense walsh(std::size_t m) {
  Dense f = zeros(m);
  double count = 0;
  for (const auto& v : permutations(m)) {
    if (!single_peaked(v)) continue;
    ++count;
    for (std::size_t i = 0; i < m; ++i) f[i][v[i]] += 1.0;
  }
  for (auto& row : f)
    for (auto& x : row) x /= count;
  return f;
}

// Random-peak process, enumerated as a probability tree.
inline Dense conitzer(std::size_t m) {
  Dense f = zeros(m);
  std::function<void(std::size_t, std::size_t, std::size_t, double)> walk = [&](std::size_t lo, std::size_t hi,
                                                                                std::size_t pos, double pr) {
    if (pos == m) return;
    const bool left = lo > 0, right = hi + 1 < m;
    const double share = (left && right) ? 0.5 : 1.0;
    if (left) {
      f[pos][lo - 1] += pr * share;
      walk(lo - 1, hi, pos + 1, pr * share);
    }
    if (right) {
      f[pos][hi + 1] += pr * share;
      walk(lo, hi + 1, pos + 1, pr * share);
    }
  };
  for (std::size_t c = 0; c < m; ++c) {
    f[0][c] += 1.0 / m;
    walk(c, c, 1, 1.0 / m);
  }
  return f;
}

// Ordered tree: children[x] lists child node ids, leaves carry a candidate.
struct Tree {
  std::vector<std::vector<std::size_t>> children;
  std::vector<long> leaf;  // candidate or -1
};

// Each internal node reverses its children with probability 1/2, all choices
// enumerated.
inline Dense gs_tree(const Tree& t, std::size_t m) {
  std::vector<std::size_t> internal;
  for (std::size_t x = 0; x < t.children.size(); ++x)
    if (t.leaf[x] < 0) internal.push_back(x);
  Dense f = zeros(m);
  const std::size_t total = std::size_t{1} << internal.size();
  for (std::size_t mask = 0; mask < total; ++mask) {
    std::vector<bool> flip(t.children.size(), false);
    for (std::size_t k = 0; k < internal.size(); ++k) flip[internal[k]] = mask >> k & 1;
    Perm v;
    std::function<void(std::size_t)> visit = [&](std::size_t x) {
      if (t.leaf[x] >= 0) {
        v.push_back(static_cast<std::size_t>(t.leaf[x]));
        return;
      }
      auto ch = t.children[x];
      if (flip[x]) std::reverse(ch.begin(), ch.end());
      for (auto c : ch) visit(c);
    };
    visit(0);
    for (std::size_t i = 0; i < m; ++i) f[i][v[i]] += 1.0 / static_cast<double>(total);
  }
  return f;
}

// Caterpillar: spine node j has leaf j on the left and the rest on the right;
// the last spine node holds the final two leaves.
inline Tree caterpillar(std::size_t m) {
  Tree t;
  std::size_t spine = 0;
  t.children.push_back({});
  t.leaf.push_back(-1);
  for (std::size_t j = 0; j < m; ++j) {
    const bool last_pair = j + 2 == m;
    const std::size_t leaf = t.children.size();
    t.children.push_back({});
    t.leaf.push_back(static_cast<long>(j));
    t.children[spine].push_back(leaf);
    if (last_pair) {
      const std::size_t other = t.children.size();
      t.children.push_back({});
      t.leaf.push_back(static_cast<long>(j + 1));
      t.children[spine].push_back(other);
      break;
    }
    const std::size_t next = t.children.size();
    t.children.push_back({});
    t.leaf.push_back(-1);
    t.children[spine].push_back(next);
    spine = next;
  }
  return t;
}

// Earth mover's distance by literally moving dirt left to right.
inline double greedy_emd(std::vector<double> x, const std::vector<double>& y) {
  double work = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double surplus = x[i] - y[i];
    x[i] -= surplus;
    x[i + 1] += surplus;
    work += std::abs(surplus);
  }
  return work;
}

inline std::vector<double> column(const Dense& a, std::size_t j) {
  std::vector<double> c;
  for (const auto& row : a) c.push_back(row[j]);
  return c;
}

// min over all column matchings of summed column EMDs.
inline double positionwise_raw(const Dense& a, const Dense& b) {
  const std::size_t m = a.size();
  double best = std::numeric_limits<double>::infinity();
  for (const auto& sigma : permutations(m)) {
    double s = 0.0;
    for (std::size_t j = 0; j < m; ++j) s += greedy_emd(column(a, j), column(b, sigma[j]));
    best = std::min(best, s);
  }
  return best;
}

// Kemeny by enumeration; the first optimum in lexicographic order wins.
inline Perm kemeny(std::size_t m, const std::vector<Perm>& votes) {
  Perm best;
  std::size_t best_cost = std::numeric_limits<std::size_t>::max();
  for (const auto& p : permutations(m)) {
    std::size_t c = 0;
    for (const auto& v : votes) c += inversions(v, p);
    if (c < best_cost) best_cost = c, best = p;
  }
  return best;
}

inline double max_diff(const Dense& a, const Dense& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
  return d;
}

template <class Matrix>
Dense dense(const Matrix& a) {
  Dense out = zeros(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out[i][j] = static_cast<double>(a(i, j));
  return out;
}

}  // namespace oracle
