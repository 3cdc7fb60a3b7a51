#pragma once

#include "votemap/matrix.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace votemap {

struct CatalogPoint {
  std::string label;
  std::string group;  // compass, path, mallows, rev-mix, mallows-mix, phi-conitzer, phi-walsh, structured
  FrequencyMatrix matrix;
};

struct MapCatalog {
  std::size_t m = 0;
  std::vector<CatalogPoint> points;

  std::size_t index_of(const std::string& label) const;  // throws DomainError
  std::vector<std::string> labels() const;
};

// Compass matrices, the 19 interior points of each compass-pair path, five
// Mallows-based families over norm-phi in {0, 0.05, ..., 1}, and CON, WAL, CAT.
// m must be even.
MapCatalog build_catalog(std::size_t m);

// Label of the convex combination (1-alpha) X + alpha Y, e.g. "ID_UN_0.05".
// ID_AN_0.5 is labeled MID.
std::string path_label(const std::string& x, const std::string& y, double alpha);
// Two-decimal grid label such as "mallows_0.35".
std::string grid_label(const std::string& prefix, double value);

// Symmetric row-major matrix of normalized positionwise distances.
std::vector<double> distance_matrix(const MapCatalog& catalog, unsigned threads = 1);

struct EmbeddingOptions {
  std::uint64_t seed = 0;
  std::size_t max_iter = 300;
  double eps = 1e-6;
};

struct EmbeddingLayout {
  std::vector<std::string> labels;
  std::vector<std::array<double, 2>> coords;
  // Normalized stress: sum (d_ij - delta_ij)^2 / sum delta_ij^2 over pairs.
  double stress = 0.0;
  std::vector<double> stress_history;  // initial value first, one entry per iteration
  std::vector<double> distances;       // input, row-major
  bool random_init = false;

  std::size_t index_of(const std::string& label) const;
  double euclidean(std::size_t a, std::size_t b) const;
};

// SMACOF stress majorization from a classical-MDS start (seeded random start
// if the double-centered matrix is degenerate), then canonicalized: centroid
// at the origin, principal axis along x, and the reference point (ID when
// present, else the first point) in the closed third quadrant.
EmbeddingLayout embed(const std::vector<std::string>& labels, const std::vector<double>& distances,
                      const EmbeddingOptions& options = {});
EmbeddingLayout embed(const MapCatalog& catalog, const EmbeddingOptions& options = {}, unsigned threads = 1);

// (Euc(x,y) / Euc(ID,UN)) / nPOS(x,y). Throws DomainError when nPOS is zero.
double misrepresentation(const EmbeddingLayout& layout, const std::string& x, const std::string& y);

struct RatioEntry {
  std::string x;
  std::string y;
  double distance = 0.0;
  double ratio = 0.0;
};

// Ratios for every pair with positive distance, in label order.
std::vector<RatioEntry> misrepresentation_ratios(const EmbeddingLayout& layout);

}  // namespace votemap
