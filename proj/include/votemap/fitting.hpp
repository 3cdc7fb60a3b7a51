#pragma once

#include "votemap/matrix.hpp"
#include "votemap/models.hpp"
#include "votemap/ranking.hpp"

#include <optional>
#include <string>
#include <vector>

namespace votemap {

enum class FitFamily { Mallows, PhiConitzer, PhiWalsh, MallowsMixture };

std::string fit_family_name(FitFamily f);
// Accepts "mallows", "phi-conitzer", "phi-walsh", "mallows-mixture".
FitFamily parse_fit_family(const std::string& name);

struct FitResult {
  FitFamily family = FitFamily::Mallows;
  double norm_phi = 0.0;
  double phi = 0.0;          // raw dispersion for norm_phi at this m
  std::optional<double> p;   // mixtures: weight of the reversed component, in [0, 1/2]
  double distance = 0.0;     // normalized positionwise distance at the optimum
  double grid_step = 0.001;
};

// Model matrices for every grid point of one family at one m. Building is
// the expensive part; reuse a grid across elections with the same m.
class FitGrid {
 public:
  // Mixture weights step through {0, 0.05, ..., 0.5}.
  static constexpr double kMixtureStep = 0.05;

  FitGrid(FitFamily family, std::size_t m, double grid_step = 0.001, unsigned threads = 1);

  FitFamily family() const noexcept { return family_; }
  std::size_t candidates() const noexcept { return m_; }
  double grid_step() const noexcept { return step_; }
  std::size_t phi_points() const noexcept { return norm_phis_.size(); }
  std::size_t p_points() const noexcept { return ps_.size(); }
  double norm_phi(std::size_t k) const { return norm_phis_[k]; }
  double p(std::size_t l) const { return ps_[l]; }
  // Matrix for phi index k and mixture index l (l = 0 for other families).
  FrequencyMatrix matrix(std::size_t k, std::size_t l = 0) const;

  FitResult fit(const FrequencyMatrix& target, unsigned threads = 1) const;

 private:
  FitFamily family_;
  std::size_t m_;
  double step_;
  std::vector<double> norm_phis_;
  std::vector<double> phis_;
  std::vector<double> ps_;
  std::vector<FrequencyMatrix> matrices_;  // one per phi; mixtures mix columns on demand
};

// Grid search minimizing the normalized positionwise distance. Ties go to the
// smaller phi, then the smaller p. Grids are cached per (family, m, step).
FitResult fit_model(const Election& e, FitFamily family, double grid_step = 0.001, unsigned threads = 1);
FitResult fit_model(const FrequencyMatrix& target, FitFamily family, double grid_step = 0.001,
                    unsigned threads = 1);

// Largest candidate count for the exact subset DP.
inline constexpr std::size_t kKemenyMaxCandidates = 16;

struct KemenyEstimate {
  Ranking consensus;
  std::uint64_t total_distance = 0;
  double phi_hat = 0.0;
  double norm_phi_hat = 0.0;
};

// A ranking minimizing the total swap distance to the votes. Among optimal
// rankings the lexicographically smallest candidate sequence is returned.
Ranking kemeny_consensus(const Election& e);
// Mallows maximum-likelihood dispersion around the Kemeny consensus: phi
// solves E_phi[kappa] = mean distance, clamped to [0, 1].
KemenyEstimate kemeny_mle_phi(const Election& e);

}  // namespace votemap
