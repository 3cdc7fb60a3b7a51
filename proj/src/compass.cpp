#include "votemap/compass.hpp"

#include "votemap/error.hpp"

namespace votemap {

std::string compass_label(CompassKind kind) {
  switch (kind) {
    case CompassKind::Identity: return "ID";
    case CompassKind::Uniformity: return "UN";
    case CompassKind::Stratification: return "ST";
    case CompassKind::Antagonism: return "AN";
  }
  return "?";
}

template <class T>
BasicMatrix<T> compass_matrix(CompassKind kind, std::size_t m) {
  if (m == 0) throw DomainError("compass matrix needs m >= 1");
  const bool needs_even = kind == CompassKind::Stratification || kind == CompassKind::Antagonism;
  if (needs_even && m % 2 != 0)
    throw UnsupportedDimensionError(compass_label(kind) + " is only defined for even m, got " + std::to_string(m));
  BasicMatrix<T> out(m);
  const std::size_t half = m / 2;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      switch (kind) {
        case CompassKind::Identity:
          out(i, j) = T(i == j ? 1 : 0);
          break;
        case CompassKind::Uniformity:
          out(i, j) = T(1) / T(static_cast<long>(m));
          break;
        case CompassKind::Stratification:
          out(i, j) = (i < half) == (j < half) ? T(2) / T(static_cast<long>(m)) : T(0);
          break;
        case CompassKind::Antagonism:
          out(i, j) = (i == j || i + j == m - 1) ? T(1) / T(2) : T(0);
          break;
      }
    }
  return out;
}

template <class T>
BasicMatrix<T> affine_combination(const BasicMatrix<T>& x, const BasicMatrix<T>& y, const T& alpha) {
  if (x.size() != y.size()) throw DimensionError("affine combination of matrices of different sizes");
  if (!(alpha >= 0 && alpha <= 1)) throw DomainError("alpha must lie in [0,1]");
  BasicMatrix<T> out(x.size());
  const T beta = T(1) - alpha;
  for (std::size_t k = 0; k < x.data().size(); ++k) out.data()[k] = alpha * x.data()[k] + beta * y.data()[k];
  return out;
}

template FrequencyMatrix compass_matrix<double>(CompassKind, std::size_t);
template RationalMatrix compass_matrix<Rational>(CompassKind, std::size_t);
template FrequencyMatrix affine_combination(const FrequencyMatrix&, const FrequencyMatrix&, const double&);
template RationalMatrix affine_combination(const RationalMatrix&, const RationalMatrix&, const Rational&);

}  // namespace votemap
