#pragma once

#include "votemap/matrix.hpp"
#include "votemap/ranking.hpp"

#include <span>
#include <vector>

namespace votemap {

// Earth mover's distance between two distributions over positions 0..n-1 with
// ground cost |i - j|. Inputs must be nonnegative and sum to 1 within 1e-9.
double emd(std::span<const double> x, std::span<const double> y);

// Same identity without input validation: sum_i |sum_{t<=i} (x_t - y_t)|.
double emd_unchecked(std::span<const double> x, std::span<const double> y);

struct Assignment {
  std::vector<std::size_t> match;  // match[row] = column
  double cost = 0.0;
};

// Minimum-cost perfect matching on a square row-major cost matrix (Hungarian
// method with potentials, O(n^3)). Ties resolve by scan order.
Assignment solve_assignment(std::span<const double> cost, std::size_t n);

struct DistanceReport {
  double raw = 0.0;
  double normalized = 0.0;
  // assignment[j] = column of b matched with column j of a. One minimizer
  // among possibly several.
  std::vector<std::size_t> assignment;
  std::size_t m = 0;
};

// (m^2 - 1) / 3: the distance between ID_m and UN_m and the largest possible.
double positionwise_normalizer(std::size_t m);

// rawPOS and nPOS between two frequency matrices. Columns within 1e-9 of
// summing to one are renormalized; others are rejected.
DistanceReport positionwise_distance(const FrequencyMatrix& a, const FrequencyMatrix& b);

DistanceReport election_distance(const Election& e, const Election& f);
DistanceReport election_distance(const Election& e, const FrequencyMatrix& f);

}  // namespace votemap
