#include "votemap/error.hpp"
#include "votemap/models.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace votemap {

namespace {

void require_phi(double phi) {
  if (!(phi >= 0.0 && phi <= 1.0)) throw DomainError("dispersion phi must lie in [0,1], got " + std::to_string(phi));
}

void require_cap(std::size_t m, std::size_t cap) {
  if (m > cap)
    throw ResourceError("Mallows count table limited to m <= " + std::to_string(cap) + " (requested m=" +
                        std::to_string(m) + "); raise the cap explicitly to go further");
}

// Column c of the result is column t of `identity_central`, where c is the
// candidate ranked t-th in the central vote.
template <class T>
BasicMatrix<T> permute_columns(const BasicMatrix<T>& identity_central, const std::optional<Ranking>& central) {
  if (!central) return identity_central;
  const std::size_t m = identity_central.size();
  if (central->size() != m) throw DimensionError("central vote has the wrong number of candidates");
  BasicMatrix<T> out(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t t = 0; t < m; ++t) out(i, (*central)[t]) = identity_central(i, t);
  return out;
}

std::shared_ptr<const MallowsPolynomials> polynomials_for(std::size_t m) {
  static std::mutex mutex;
  static std::map<std::size_t, std::shared_ptr<const MallowsPolynomials>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[m];
  if (!slot) slot = std::make_shared<const MallowsPolynomials>(m);
  return slot;
}

const std::vector<long double>& mahonian_row_ld(std::size_t m) {
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<long double>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  const auto table = mahonian_shared(m);
  std::vector<long double> row;
  for (const auto& s : table->row(m)) row.push_back(s.convert_to<long double>());
  return cache.emplace(m, std::move(row)).first->second;
}

}  // namespace

std::vector<BigInt> mallows_count_slice(std::size_t m, std::size_t j) {
  if (m == 0 || j == 0 || j > m) throw DomainError("mallows_count_slice needs 1 <= j <= m");
  const auto mahonian_table = mahonian_shared(m);
  const MahonianTable& S = *mahonian_table;

  // Layer L = j: T(j,k,j,i) = S(j-1, k-(j-i)).
  std::size_t L = j;
  std::size_t K = MahonianTable::max_distance(L);
  std::vector<BigInt> layer(L * (K + 1));
  for (std::size_t i = 1; i <= L; ++i)
    for (std::size_t k = 0; k <= K; ++k)
      layer[(i - 1) * (K + 1) + k] = S(j - 1, static_cast<long>(k) - static_cast<long>(j - i));

  std::vector<BigInt> prefix;
  for (++L; L <= m; ++L) {
    const std::size_t Kp = K;
    K = MahonianTable::max_distance(L);
    // prefix[(i-1)*(Kp+1) + k] = sum_{k' <= k} T(L-1, k', j, i)
    prefix.assign(layer.size(), BigInt(0));
    for (std::size_t i = 1; i < L; ++i) {
      BigInt run = 0;
      for (std::size_t k = 0; k <= Kp; ++k) {
        run += layer[(i - 1) * (Kp + 1) + k];
        prefix[(i - 1) * (Kp + 1) + k] = run;
      }
    }
    // Sum of T(L-1, k-d, j, i) over d in [lo, hi].
    auto window = [&](std::size_t i, long k, long lo, long hi) -> BigInt {
      if (lo > hi) return BigInt(0);
      auto P = [&](long x) -> BigInt {
        if (x < 0) return BigInt(0);
        if (x > static_cast<long>(Kp)) x = static_cast<long>(Kp);
        return prefix[(i - 1) * (Kp + 1) + static_cast<std::size_t>(x)];
      };
      return P(k - lo) - P(k - hi - 1);
    };
    std::vector<BigInt> next(L * (K + 1));
    for (std::size_t i = 1; i <= L; ++i)
      for (std::size_t k = 0; k <= K; ++k) {
        const long kk = static_cast<long>(k);
        BigInt v = 0;
        // c_L inserted behind c_j: shifts by d = L - l for l in [i+1, L].
        if (i <= L - 1) v += window(i, kk, 0, static_cast<long>(L - i - 1));
        // c_L inserted ahead of c_j: l in [1, i-1].
        if (i >= 2) v += window(i - 1, kk, static_cast<long>(L - i + 1), static_cast<long>(L - 1));
        next[(i - 1) * (K + 1) + k] = std::move(v);
      }
    layer = std::move(next);
  }
  return layer;
}

BigInt mallows_position_counts(std::size_t m, long k, std::size_t j, std::size_t i) {
  if (m == 0 || j == 0 || j > m || i == 0 || i > m || k < 0) return BigInt(0);
  const std::size_t K = MahonianTable::max_distance(m);
  if (static_cast<std::size_t>(k) > K) return BigInt(0);
  const auto slice = mallows_count_slice(m, j);
  return slice[(i - 1) * (K + 1) + static_cast<std::size_t>(k)];
}

MallowsPolynomials::MallowsPolynomials(std::size_t m, std::size_t cap) : m_(m), degree_(MahonianTable::max_distance(m)) {
  if (m == 0) throw DomainError("Mallows model needs m >= 1");
  require_cap(m, cap);
  const std::size_t stride = degree_ + 1;
  counts_.resize(m * m * stride);
  for (std::size_t j = 1; j <= m; ++j) {
    const auto slice = mallows_count_slice(m, j);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < stride; ++k)
        counts_[((j - 1) * m + i) * stride + k] = slice[i * stride + k].convert_to<double>();
  }
  const auto table = mahonian_shared(m);
  for (const auto& s : table->row(m)) normalizer_.push_back(s.convert_to<double>());
}

FrequencyMatrix MallowsPolynomials::evaluate(double phi) const {
  require_phi(phi);
  const std::size_t stride = degree_ + 1;
  auto horner = [&](const double* c) {
    double acc = 0.0;
    for (std::size_t k = stride; k-- > 0;) acc = acc * phi + c[k];
    return acc;
  };
  const double Z = horner(normalizer_.data());
  FrequencyMatrix out(m_);
  for (std::size_t j = 0; j < m_; ++j)
    for (std::size_t i = 0; i < m_; ++i) out(i, j) = horner(&counts_[(j * m_ + i) * stride]) / Z;
  return out;
}

FrequencyMatrix mallows_matrix_by_insertion(std::size_t m, double phi) {
  if (m == 0) throw DomainError("Mallows model needs m >= 1");
  require_phi(phi);
  // powers[d] = phi^d, cumulative[d] = sum_{e < d} phi^e
  std::vector<double> powers(m + 1, 1.0);
  for (std::size_t d = 1; d <= m; ++d) powers[d] = powers[d - 1] * phi;
  std::vector<double> cumulative(m + 1, 0.0);
  for (std::size_t d = 0; d < m; ++d) cumulative[d + 1] = cumulative[d] + powers[d];

  FrequencyMatrix out(m);
  std::vector<double> dist(m), next(m);
  for (std::size_t j = 1; j <= m; ++j) {
    // c_j inserted among j candidates at position p (1-based) with weight phi^(j-p).
    std::fill(dist.begin(), dist.end(), 0.0);
    for (std::size_t p = 1; p <= j; ++p) dist[p - 1] = powers[j - p] / cumulative[j];
    for (std::size_t t = j + 1; t <= m; ++t) {
      std::fill(next.begin(), next.end(), 0.0);
      for (std::size_t s = 1; s < t; ++s) {
        // c_t lands ahead of c_j (position <= s) with weight sum_{d=t-s}^{t-1} phi^d.
        const double ahead = (cumulative[t] - cumulative[t - s]) / cumulative[t];
        next[s] += dist[s - 1] * ahead;
        next[s - 1] += dist[s - 1] * (1.0 - ahead);
      }
      std::swap(dist, next);
    }
    for (std::size_t i = 0; i < m; ++i) out(i, j - 1) = dist[i];
  }
  return out;
}

FrequencyMatrix mallows_matrix(const MallowsParams& params) {
  if (params.m == 0) throw DomainError("Mallows model needs m >= 1");
  require_phi(params.phi);
  FrequencyMatrix base = params.m <= kDefaultMallowsCountCap ? polynomials_for(params.m)->evaluate(params.phi)
                                                             : mallows_matrix_by_insertion(params.m, params.phi);
  return permute_columns(base, params.central);
}

RationalMatrix mallows_matrix_exact(std::size_t m, const Rational& phi, const std::optional<Ranking>& central) {
  if (m == 0) throw DomainError("Mallows model needs m >= 1");
  if (phi < 0 || phi > 1) throw DomainError("dispersion phi must lie in [0,1]");
  require_cap(m, kDefaultMallowsCountCap);
  const std::size_t K = MahonianTable::max_distance(m);
  // phi = a/b; evaluate sum_k c_k a^k b^(K-k) in integers.
  const BigInt a = boost::multiprecision::numerator(phi);
  const BigInt b = boost::multiprecision::denominator(phi);
  std::vector<BigInt> weight(K + 1);
  {
    std::vector<BigInt> apow(K + 1), bpow(K + 1);
    apow[0] = 1;
    bpow[0] = 1;
    for (std::size_t k = 1; k <= K; ++k) {
      apow[k] = apow[k - 1] * a;
      bpow[k] = bpow[k - 1] * b;
    }
    for (std::size_t k = 0; k <= K; ++k) weight[k] = apow[k] * bpow[K - k];
  }
  const auto table = mahonian_shared(m);
  BigInt Z = 0;
  for (std::size_t k = 0; k <= K; ++k) Z += table->row(m)[k] * weight[k];
  RationalMatrix out(m);
  for (std::size_t j = 1; j <= m; ++j) {
    const auto slice = mallows_count_slice(m, j);
    for (std::size_t i = 0; i < m; ++i) {
      BigInt num = 0;
      for (std::size_t k = 0; k <= K; ++k) num += slice[i * (K + 1) + k] * weight[k];
      out(i, j - 1) = Rational(num, Z);
    }
  }
  return permute_columns(out, central);
}

double expected_swap_distance(std::size_t m, double phi) {
  require_phi(phi);
  if (m <= 1) return 0.0;
  const auto& row = mahonian_row_ld(m);
  const long double x = phi;
  long double z = 0.0L;
  long double moment = 0.0L;
  for (std::size_t k = row.size(); k-- > 0;) {
    z = z * x + row[k];
    moment = moment * x + static_cast<long double>(k) * row[k];
  }
  return static_cast<double>(moment / z);
}

double norm_phi_to_phi(std::size_t m, double norm_phi) {
  if (!(norm_phi >= 0.0 && norm_phi <= 1.0))
    throw DomainError("normalized dispersion must lie in [0,1], got " + std::to_string(norm_phi));
  if (m <= 1 || norm_phi == 0.0 || norm_phi == 1.0) return norm_phi;
  const double target = norm_phi / 2.0 * static_cast<double>(MahonianTable::max_distance(m));
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-17; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double e = expected_swap_distance(m, mid);
    if (std::abs(e - target) <= 1e-12) return mid;
    (e < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double phi_to_norm_phi(std::size_t m, double phi) {
  if (m <= 1) return phi;
  return 2.0 * expected_swap_distance(m, phi) / static_cast<double>(MahonianTable::max_distance(m));
}

FrequencyMatrix reversal_mixture_matrix(std::size_t m, double phi, double psi, double p,
                                        const std::optional<Ranking>& central) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("mixture weight p must lie in [0,1]");
  const Ranking v = central ? *central : Ranking::identity(m);
  const FrequencyMatrix forward = mallows_matrix({m, phi, v});
  const FrequencyMatrix backward = mallows_matrix({m, psi, reverse(v)});
  FrequencyMatrix out(m);
  for (std::size_t k = 0; k < out.data().size(); ++k)
    out.data()[k] = p * forward.data()[k] + (1.0 - p) * backward.data()[k];
  return out;
}

FrequencyMatrix mallows_filter_matrix(const FrequencyMatrix& base, double phi) {
  const std::size_t m = base.size();
  if (m == 0) throw DimensionError("empty base matrix");
  return multiply(mallows_matrix({m, phi, std::nullopt}), base);
}

}  // namespace votemap
