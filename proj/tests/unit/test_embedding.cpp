#include "votemap/compass.hpp"
#include "votemap/embedding.hpp"
#include "votemap/error.hpp"
#include "votemap/metric.hpp"

#include <doctest.h>

#include <cmath>
#include <set>

using namespace votemap;

TEST_CASE("catalog contents") {
  const MapCatalog cat = build_catalog(10);
  CHECK(cat.points.size() == 4 + 6 * 19 + 5 * 21 + 3);
  std::set<std::string> labels;
  for (const auto& p : cat.points) {
    CHECK(p.matrix.size() == 10);
    CHECK(is_bistochastic(p.matrix, 1e-9));
    labels.insert(p.label);
  }
  CHECK(labels.size() == cat.points.size());
  for (auto l : {"ID", "UN", "ST", "AN", "CON", "WAL", "CAT", "MID", "mallows_0.50", "phi-walsh_1.00", "ID_UN_0.05"})
    CHECK(labels.count(l) == 1);
  CHECK(positionwise_distance(cat.points[cat.index_of("mallows_1.00")].matrix, cat.points[cat.index_of("UN")].matrix).normalized <= 1e-12);
  CHECK_THROWS_AS(build_catalog(7), UnsupportedDimensionError);
  CHECK_THROWS_AS(cat.index_of("nope"), DomainError);
}

TEST_CASE("small embeddings") {
  // 3-4-5 triangle embeds exactly.
  const std::vector<double> tri{0, 3, 4, 3, 0, 5, 4, 5, 0};
  const auto t = embed({"A", "B", "C"}, tri);
  CHECK(t.stress <= 1e-9);
  CHECK(std::abs(t.euclidean(0, 1) - 3) <= 1e-6);
  CHECK(std::abs(t.euclidean(1, 2) - 5) <= 1e-6);

  const auto id = compass_matrix<double>(CompassKind::Identity, 6);
  const auto un = compass_matrix<double>(CompassKind::Uniformity, 6);
  MapCatalog line;
  line.m = 6;
  line.points = {{"ID", "compass", id}, {"UN", "compass", un}, {"mid", "path", affine_combination(id, un, 0.5)}};
  const auto l = embed(line);
  CHECK(std::abs(l.euclidean(0, 2) - 0.5 * l.euclidean(0, 1)) <= 1e-6);
  CHECK(std::abs(misrepresentation(l, "ID", "UN") - 1.0) <= 1e-12);
  CHECK(l.coords[0][0] <= 0.0);
  CHECK(l.coords[0][1] <= 0.0);

  CHECK_THROWS_AS(embed({"A", "B"}, {0, 1, 1, 0}), DomainError);

  MapCatalog dup = line;
  dup.points.push_back({"UN2", "compass", un});
  const auto d = embed(dup);
  CHECK(d.euclidean(1, 3) <= 1e-6);
  CHECK_THROWS_AS(misrepresentation(d, "UN", "UN2"), DomainError);
}

TEST_CASE("full catalog map") {
  const MapCatalog cat = build_catalog(10);
  const auto layout = embed(cat, {}, 2);
  for (std::size_t k = 1; k < layout.stress_history.size(); ++k)
    CHECK(layout.stress_history[k] <= layout.stress_history[k - 1] * (1 + 1e-12));
  CHECK(layout.stress >= 0.0);
  const auto ratios = misrepresentation_ratios(layout);
  std::size_t inside = 0;
  for (const auto& r : ratios) inside += r.ratio >= 0.8 && r.ratio <= 1.15;
  MESSAGE("share of ratios in [0.8, 1.15]: " << static_cast<double>(inside) / ratios.size());
  CHECK(std::abs(misrepresentation(layout, "ID", "UN") - 1.0) <= 1e-12);

  // Different seeds only matter for degenerate starts; layouts agree.
  EmbeddingOptions other;
  other.seed = 99;
  const auto again = embed(layout.labels, layout.distances, other);
  double rms = 0;
  for (std::size_t k = 0; k < layout.coords.size(); ++k)
    rms += std::pow(layout.coords[k][0] - again.coords[k][0], 2) + std::pow(layout.coords[k][1] - again.coords[k][1], 2);
  CHECK(std::sqrt(rms / layout.coords.size()) <= 1e-3);

  // Points at distance zero coincide.
  CHECK(layout.euclidean(layout.index_of("mallows_1.00"), layout.index_of("UN")) <= 1e-6);
}
