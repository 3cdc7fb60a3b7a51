#include "votemap/metric.hpp"

#include "votemap/core.hpp"
#include "votemap/error.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace votemap {

namespace {

constexpr double kSumTolerance = 1e-9;

void check_distribution(std::span<const double> x, const char* name) {
  double s = 0.0;
  for (double v : x) {
    if (!(v >= 0.0)) throw DomainError(std::string("EMD input ") + name + " has a negative or NaN entry");
    s += v;
  }
  if (std::abs(s - 1.0) > kSumTolerance)
    throw DomainError(std::string("EMD input ") + name + " sums to " + std::to_string(s) + ", not 1");
}

// Columns of a frequency matrix, renormalized to sum to exactly one.
std::vector<std::vector<double>> normalized_columns(const FrequencyMatrix& a, const char* name) {
  const std::size_t m = a.size();
  std::vector<std::vector<double>> cols(m, std::vector<double>(m));
  for (std::size_t j = 0; j < m; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      double v = a(i, j);
      if (!(v >= -1e-12))
        throw DomainError(std::string("matrix ") + name + " has a negative entry in column " + std::to_string(j + 1));
      v = std::max(v, 0.0);
      cols[j][i] = v;
      s += v;
    }
    if (std::abs(s - 1.0) > kSumTolerance)
      throw DomainError(std::string("column ") + std::to_string(j + 1) + " of matrix " + name + " sums to " +
                        std::to_string(s));
    for (double& v : cols[j]) v /= s;
  }
  return cols;
}

}  // namespace

double emd_unchecked(std::span<const double> x, std::span<const double> y) {
  double carried = 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    carried += x[i] - y[i];
    total += std::abs(carried);
  }
  return total;
}

double emd(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DimensionError("EMD between vectors of different length");
  check_distribution(x, "x");
  check_distribution(y, "y");
  return emd_unchecked(x, y);
}

Assignment solve_assignment(std::span<const double> cost, std::size_t n) {
  if (cost.size() != n * n) throw DimensionError("assignment cost matrix is not n x n");
  Assignment result;
  if (n == 0) return result;
  const double inf = std::numeric_limits<double>::infinity();
  // 1-based potentials formulation; way[] tracks augmenting paths.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  result.match.assign(n, 0);
  for (std::size_t j = 1; j <= n; ++j) result.match[p[j] - 1] = j - 1;
  for (std::size_t i = 0; i < n; ++i) result.cost += cost[i * n + result.match[i]];
  return result;
}

double positionwise_normalizer(std::size_t m) {
  return (static_cast<double>(m) * static_cast<double>(m) - 1.0) / 3.0;
}

DistanceReport positionwise_distance(const FrequencyMatrix& a, const FrequencyMatrix& b) {
  if (a.size() != b.size())
    throw DimensionError("positionwise distance between " + std::to_string(a.size()) + "x" +
                         std::to_string(a.size()) + " and " + std::to_string(b.size()) + "x" +
                         std::to_string(b.size()) + " matrices");
  const std::size_t m = a.size();
  if (m == 0) throw DimensionError("empty matrices");
  const auto ca = normalized_columns(a, "a");
  const auto cb = normalized_columns(b, "b");
  std::vector<double> cost(m * m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k) cost[j * m + k] = emd_unchecked(ca[j], cb[k]);
  Assignment best = solve_assignment(cost, m);
  DistanceReport report;
  report.m = m;
  report.raw = best.cost;
  report.normalized = m > 1 ? best.cost / positionwise_normalizer(m) : 0.0;
  report.assignment = std::move(best.match);
  return report;
}

DistanceReport election_distance(const Election& e, const Election& f) {
  if (e.candidates() != f.candidates()) throw DimensionError("elections have different candidate counts");
  return positionwise_distance(frequency_matrix(e), frequency_matrix(f));
}

DistanceReport election_distance(const Election& e, const FrequencyMatrix& f) {
  if (e.candidates() != f.size()) throw DimensionError("election and matrix have different candidate counts");
  return positionwise_distance(frequency_matrix(e), f);
}

}  // namespace votemap
