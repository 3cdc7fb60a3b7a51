#pragma once

#include "votemap/gs_tree.hpp"
#include "votemap/matrix.hpp"
#include "votemap/ranking.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace votemap {

// ---------------------------------------------------------------------------
// Mahonian numbers and Mallows position counts
// ---------------------------------------------------------------------------

// S(m', k): number of permutations of m' elements with exactly k inversions,
// for every m' <= m. Exact; entries outside the table read as zero.
class MahonianTable {
 public:
  explicit MahonianTable(std::size_t m);

  std::size_t max_candidates() const noexcept { return rows_.size() - 1; }
  static std::size_t max_distance(std::size_t m) noexcept { return m * (m - 1) / 2; }

  const BigInt& operator()(std::size_t m, long k) const;
  std::span<const BigInt> row(std::size_t m) const { return rows_.at(m); }

 private:
  std::vector<std::vector<BigInt>> rows_;
};

MahonianTable mahonian(std::size_t m);

// Shared, lazily built table covering at least m candidates.
std::shared_ptr<const MahonianTable> mahonian_shared(std::size_t m);

// Default largest m for which the full T(m,k,j,i) table is materialized.
inline constexpr std::size_t kDefaultMallowsCountCap = 50;

// T(m,k,j,i): rankings at swap distance k from c1 > ... > cm that place c_j at
// position i. All indices 1-based as in the counting argument; out of range
// gives 0.
BigInt mallows_position_counts(std::size_t m, long k, std::size_t j, std::size_t i);

// All counts for a fixed central rank j (1-based): result[(i-1)*(K+1) + k]
// with K = m(m-1)/2.
std::vector<BigInt> mallows_count_slice(std::size_t m, std::size_t j);

// T(m,k,j,i) for all (k,j,i) converted to doubles, evaluated as polynomials in
// phi. Construction costs O(m^5) big-integer additions; m is capped.
class MallowsPolynomials {
 public:
  explicit MallowsPolynomials(std::size_t m, std::size_t cap = kDefaultMallowsCountCap);

  std::size_t candidates() const noexcept { return m_; }
  // Matrix for the identity central vote: (i, j) = f_m(phi, j, i).
  FrequencyMatrix evaluate(double phi) const;

 private:
  std::size_t m_;
  std::size_t degree_;
  std::vector<double> counts_;  // [(j*m + i)*(degree+1) + k], 0-based j, i
  std::vector<double> normalizer_;
};

// ---------------------------------------------------------------------------
// Mallows
// ---------------------------------------------------------------------------

struct MallowsParams {
  std::size_t m = 0;
  double phi = 0.0;
  std::optional<Ranking> central;  // identity when empty
};

// Frequency matrix of the Mallows distribution. Uses the count tables for
// m <= kDefaultMallowsCountCap and the same insertion recurrence evaluated at
// phi beyond that.
FrequencyMatrix mallows_matrix(const MallowsParams& params);

// Insertion recurrence evaluated directly at phi; O(m^3), any m.
FrequencyMatrix mallows_matrix_by_insertion(std::size_t m, double phi);

// Exact matrix for rational phi (counts evaluated in integer arithmetic).
RationalMatrix mallows_matrix_exact(std::size_t m, const Rational& phi, const std::optional<Ranking>& central = {});

// E_phi[swap distance to the central vote] from the Mahonian numbers.
double expected_swap_distance(std::size_t m, double phi);

// The phi whose expected swap distance is norm_phi/2 of m(m-1)/2. Bisection
// to 1e-10 in expected-distance units.
double norm_phi_to_phi(std::size_t m, double norm_phi);

// Inverse: 4 E_phi[kappa] / (m(m-1)).
double phi_to_norm_phi(std::size_t m, double phi);

// p * Mallows(phi, central) + (1-p) * Mallows(psi, rev(central)).
FrequencyMatrix reversal_mixture_matrix(std::size_t m, double phi, double psi, double p,
                                        const std::optional<Ranking>& central = {});

// Mallows(identity, phi) * base: draw a vote from base, then perturb it by Mallows.
FrequencyMatrix mallows_filter_matrix(const FrequencyMatrix& base, double phi);

// ---------------------------------------------------------------------------
// Structured domains
// ---------------------------------------------------------------------------

// Uniform over votes consistent with the tree (fair coin per internal node).
template <class T = double>
BasicMatrix<T> gs_tree_matrix(const GSTree& tree);

// Closed form for CP(c1..cm), evaluated through halved binomial rows.
template <class T = double>
BasicMatrix<T> caterpillar_matrix(std::size_t m);

// Uniform over votes single-peaked on c1 < ... < cm.
template <class T = double>
BasicMatrix<T> walsh_matrix(std::size_t m);

// Random-peak process on c1 < ... < cm.
template <class T = double>
BasicMatrix<T> conitzer_matrix(std::size_t m);

// ---------------------------------------------------------------------------
// Model specification
// ---------------------------------------------------------------------------

enum class ModelFamily { IC, Mallows, MallowsReversalMixture, Conitzer, Walsh, GSTreeUniform, MallowsFiltered };

std::string family_name(ModelFamily f);

// A dispersion given either directly as phi or as normalized phi.
struct Dispersion {
  Rational value = 0;
  bool normalized = false;

  static Dispersion phi(const Rational& v) { return {v, false}; }
  static Dispersion norm(const Rational& v) { return {v, true}; }
  double resolve(std::size_t m) const;
};

struct ModelSpec {
  ModelFamily family = ModelFamily::IC;
  std::size_t m = 0;
  std::optional<Dispersion> dispersion;           // phi for Mallows-like families
  std::optional<Dispersion> reversed_dispersion;  // psi; defaults to dispersion
  Rational p = 1;                                 // weight of the central-vote component
  std::optional<Ranking> central;
  std::shared_ptr<const ModelSpec> base;          // MallowsFiltered
  std::optional<GSTree> tree;                     // GSTreeUniform

  static ModelSpec ic(std::size_t m);
  static ModelSpec mallows(std::size_t m, Dispersion d);
  static ModelSpec reversal_mixture(std::size_t m, Dispersion phi, Dispersion psi, const Rational& p);
  static ModelSpec conitzer(std::size_t m);
  static ModelSpec walsh(std::size_t m);
  static ModelSpec gs_tree(GSTree t);
  static ModelSpec mallows_filtered(ModelSpec base, Dispersion d);

  // Throws DomainError/StructureError when parameters do not match the family.
  void validate() const;
};

FrequencyMatrix model_matrix(const ModelSpec& spec);

// Exact version; only for specs without normalized dispersions.
RationalMatrix model_matrix_exact(const ModelSpec& spec);

}  // namespace votemap
