#include "votemap/embedding.hpp"

#include "votemap/compass.hpp"
#include "votemap/error.hpp"
#include "votemap/metric.hpp"
#include "votemap/models.hpp"
#include "votemap/parallel.hpp"
#include "votemap/rng.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace votemap {

namespace {

constexpr int kGridSteps = 20;  // Phi and alpha step 0.05

double grid_value(int k) { return static_cast<double>(k) / kGridSteps; }

std::string two_decimals(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string path_label(const std::string& x, const std::string& y, double alpha) {
  if (x == "ID" && y == "AN" && std::abs(alpha - 0.5) < 1e-12) return "MID";
  return x + "_" + y + "_" + two_decimals(alpha);
}

std::string grid_label(const std::string& prefix, double value) { return prefix + "_" + two_decimals(value); }

std::size_t MapCatalog::index_of(const std::string& label) const {
  for (std::size_t k = 0; k < points.size(); ++k)
    if (points[k].label == label) return k;
  throw DomainError("no catalog point labeled '" + label + "'");
}

std::vector<std::string> MapCatalog::labels() const {
  std::vector<std::string> out;
  for (const auto& p : points) out.push_back(p.label);
  return out;
}

MapCatalog build_catalog(std::size_t m) {
  if (m < 2 || m % 2 != 0)
    throw UnsupportedDimensionError("the catalog needs an even number of candidates, got " + std::to_string(m));
  MapCatalog cat;
  cat.m = m;
  auto add = [&](std::string label, std::string group, FrequencyMatrix a) {
    cat.points.push_back({std::move(label), std::move(group), std::move(a)});
  };

  const CompassKind kinds[] = {CompassKind::Identity, CompassKind::Uniformity, CompassKind::Stratification,
                               CompassKind::Antagonism};
  std::vector<FrequencyMatrix> compass;
  for (auto k : kinds) {
    compass.push_back(compass_matrix<double>(k, m));
    add(compass_label(k), "compass", compass.back());
  }
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b)
      for (int k = 1; k < kGridSteps; ++k) {
        const double alpha = grid_value(k);
        add(path_label(compass_label(kinds[a]), compass_label(kinds[b]), alpha), "path",
            affine_combination(compass[b], compass[a], alpha));
      }

  const FrequencyMatrix con = conitzer_matrix(m);
  const FrequencyMatrix wal = walsh_matrix(m);
  for (int k = 0; k <= kGridSteps; ++k) {
    const double norm = grid_value(k);
    const double phi = norm_phi_to_phi(m, norm);
    const FrequencyMatrix mal = mallows_matrix({m, phi, std::nullopt});
    add(grid_label("mallows", norm), "mallows", mal);
    add(grid_label("rev-mix", norm), "rev-mix", reversal_mixture_matrix(m, phi, phi, 0.5));
    // Equal mix of plain Mallows and the half/half reversal mixture.
    add(grid_label("mallows-mix", norm), "mallows-mix", reversal_mixture_matrix(m, phi, phi, 0.75));
    add(grid_label("phi-conitzer", norm), "phi-conitzer", multiply(mal, con));
    add(grid_label("phi-walsh", norm), "phi-walsh", multiply(mal, wal));
  }
  add("CON", "structured", con);
  add("WAL", "structured", wal);
  add("CAT", "structured", caterpillar_matrix(m));
  return cat;
}

std::vector<double> distance_matrix(const MapCatalog& catalog, unsigned threads) {
  const std::size_t n = catalog.points.size();
  std::vector<double> d(n * n, 0.0);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  parallel_for(pairs.size(), threads, [&](std::size_t k) {
    const auto [a, b] = pairs[k];
    const double v = positionwise_distance(catalog.points[a].matrix, catalog.points[b].matrix).normalized;
    d[a * n + b] = v;
    d[b * n + a] = v;
  });
  return d;
}

std::size_t EmbeddingLayout::index_of(const std::string& label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw DomainError("no layout point labeled '" + label + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

double EmbeddingLayout::euclidean(std::size_t a, std::size_t b) const {
  return std::hypot(coords[a][0] - coords[b][0], coords[a][1] - coords[b][1]);
}

namespace {

using Points = Eigen::Matrix<double, Eigen::Dynamic, 2>;

double stress_of(const Points& x, const Eigen::MatrixXd& delta, double denom) {
  double s = 0.0;
  const auto n = x.rows();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double r = (x.row(i) - x.row(j)).norm() - delta(i, j);
      s += r * r;
    }
  return denom > 0.0 ? s / denom : 0.0;
}

// Returns false when the top eigenvalues carry no usable configuration.
bool classical_mds(const Eigen::MatrixXd& delta, Points& x) {
  const auto n = delta.rows();
  const Eigen::MatrixXd sq = delta.array().square().matrix();
  const Eigen::MatrixXd j = Eigen::MatrixXd::Identity(n, n) - Eigen::MatrixXd::Constant(n, n, 1.0 / n);
  const Eigen::MatrixXd b = -0.5 * j * sq * j;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b);
  if (solver.info() != Eigen::Success) return false;
  // Eigenvalues come in increasing order.
  const double l1 = solver.eigenvalues()(n - 1);
  const double l2 = solver.eigenvalues()(n - 2);
  if (!(l1 > 1e-12) || !std::isfinite(l1)) return false;
  x.resize(n, 2);
  x.col(0) = solver.eigenvectors().col(n - 1) * std::sqrt(l1);
  x.col(1) = solver.eigenvectors().col(n - 2) * std::sqrt(std::max(l2, 0.0));
  // A rank-one start is fine for collinear inputs; SMACOF keeps it there.
  return true;
}

void canonicalize(Points& x, std::size_t reference) {
  const Eigen::RowVector2d centroid = x.colwise().mean();
  x.rowwise() -= centroid;
  const Eigen::Matrix2d cov = x.transpose() * x;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(cov);
  Eigen::Matrix2d rot;
  rot.col(0) = solver.eigenvectors().col(1);
  rot.col(1) = solver.eigenvectors().col(0);
  x = x * rot;
  if (x(reference, 0) > 1e-12) x.col(0) *= -1.0;
  if (x(reference, 1) > 1e-12) x.col(1) *= -1.0;
  // Avoid printing negative zeros.
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (std::abs(x.data()[i]) < 1e-15) x.data()[i] = 0.0;
}

}  // namespace

EmbeddingLayout embed(const std::vector<std::string>& labels, const std::vector<double>& distances,
                      const EmbeddingOptions& options) {
  const std::size_t n = labels.size();
  if (n < 3) throw DomainError("embedding needs at least 3 points, got " + std::to_string(n));
  if (distances.size() != n * n) throw DimensionError("distance matrix does not match the label count");
  Eigen::MatrixXd delta(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double v = distances[i * n + j];
      if (!(v >= 0.0) || !std::isfinite(v)) throw DomainError("distances must be finite and nonnegative");
      delta(i, j) = 0.5 * (v + distances[j * n + i]);
    }
  double denom = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) denom += delta(i, j) * delta(i, j);

  EmbeddingLayout out;
  out.labels = labels;
  out.distances = distances;

  Points x;
  if (!classical_mds(delta, x)) {
    out.random_init = true;
    Rng rng(options.seed);
    x.resize(n, 2);
    for (std::size_t i = 0; i < n; ++i) x(i, 0) = rng.uniform() - 0.5, x(i, 1) = rng.uniform() - 0.5;
  }

  double stress = stress_of(x, delta, denom);
  out.stress_history.push_back(stress);
  const auto nn = static_cast<Eigen::Index>(n);
  for (std::size_t it = 0; it < options.max_iter && stress > 0.0; ++it) {
    // Guttman transform with unit weights: X <- B(X) X / n.
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(nn, nn);
    for (Eigen::Index i = 0; i < nn; ++i) {
      for (Eigen::Index j = 0; j < nn; ++j) {
        if (i == j) continue;
        const double d = (x.row(i) - x.row(j)).norm();
        if (d > 1e-300) b(i, j) = -delta(i, j) / d;
      }
      b(i, i) = -b.row(i).sum();
    }
    Points next = (b * x) / static_cast<double>(n);
    const double s = stress_of(next, delta, denom);
    x = std::move(next);
    const double previous = stress;
    stress = s;
    out.stress_history.push_back(stress);
    if (previous - stress < options.eps * previous) break;
  }

  std::size_t reference = 0;
  if (auto it = std::find(labels.begin(), labels.end(), "ID"); it != labels.end())
    reference = static_cast<std::size_t>(it - labels.begin());
  canonicalize(x, reference);

  out.stress = stress;
  out.coords.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.coords[i] = {x(i, 0), x(i, 1)};
  return out;
}

EmbeddingLayout embed(const MapCatalog& catalog, const EmbeddingOptions& options, unsigned threads) {
  return embed(catalog.labels(), distance_matrix(catalog, threads), options);
}

double misrepresentation(const EmbeddingLayout& layout, const std::string& x, const std::string& y) {
  const std::size_t n = layout.labels.size();
  const std::size_t a = layout.index_of(x);
  const std::size_t b = layout.index_of(y);
  const double npos = layout.distances[a * n + b];
  if (!(npos > 0.0))
    throw DomainError("misrepresentation ratio undefined: " + x + " and " + y + " are at distance zero");
  const double scale = layout.euclidean(layout.index_of("ID"), layout.index_of("UN"));
  if (!(scale > 0.0)) throw DomainError("ID and UN coincide in the layout");
  return layout.euclidean(a, b) / scale / npos;
}

std::vector<RatioEntry> misrepresentation_ratios(const EmbeddingLayout& layout) {
  const std::size_t n = layout.labels.size();
  std::vector<RatioEntry> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const double d = layout.distances[a * n + b];
      if (d > 0.0)
        out.push_back({layout.labels[a], layout.labels[b], d, misrepresentation(layout, layout.labels[a], layout.labels[b])});
    }
  return out;
}

}  // namespace votemap
