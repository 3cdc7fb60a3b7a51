#include "votemap/matrix.hpp"

#include "votemap/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace votemap {

FrequencyMatrix to_double(const RationalMatrix& a) {
  FrequencyMatrix out(a.size());
  auto src = a.data();
  auto dst = out.data();
  for (std::size_t k = 0; k < src.size(); ++k) dst[k] = to_double(src[k]);
  return out;
}

double bistochastic_defect(const FrequencyMatrix& a) {
  const std::size_t m = a.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double row = 0.0;
    double col = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const double x = a(i, j);
      if (!(x >= 0.0 && x <= 1.0 + 1e-12)) return std::numeric_limits<double>::infinity();
      row += x;
      col += a(j, i);
    }
    worst = std::max({worst, std::abs(row - 1.0), std::abs(col - 1.0)});
  }
  return worst;
}

bool is_bistochastic(const FrequencyMatrix& a, double tol) {
  return a.size() > 0 && bistochastic_defect(a) <= tol;
}

bool is_bistochastic(const RationalMatrix& a) {
  const std::size_t m = a.size();
  if (m == 0) return false;
  for (std::size_t i = 0; i < m; ++i) {
    Rational row = 0;
    Rational col = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (a(i, j) < 0 || a(i, j) > 1) return false;
      row += a(i, j);
      col += a(j, i);
    }
    if (row != 1 || col != 1) return false;
  }
  return true;
}

void require_bistochastic(const FrequencyMatrix& a, double tol) {
  const std::size_t m = a.size();
  if (m == 0) throw DomainError("empty matrix");
  for (std::size_t i = 0; i < m; ++i) {
    double row = 0.0;
    double col = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      if (!(a(i, j) >= -tol && a(i, j) <= 1.0 + tol))
        throw DomainError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                          ") outside [0,1]");
      row += a(i, j);
      col += a(j, i);
    }
    if (std::abs(row - 1.0) > tol)
      throw DomainError("row " + std::to_string(i + 1) + " sums to " + std::to_string(row));
    if (std::abs(col - 1.0) > tol)
      throw DomainError("column " + std::to_string(i + 1) + " sums to " + std::to_string(col));
  }
}

double max_abs_difference(const FrequencyMatrix& a, const FrequencyMatrix& b) {
  if (a.size() != b.size()) throw DimensionError("matrix sizes differ");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k)
    worst = std::max(worst, std::abs(a.data()[k] - b.data()[k]));
  return worst;
}

template <class T>
BasicMatrix<T> multiply(const BasicMatrix<T>& a, const BasicMatrix<T>& b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw DimensionError("matrix sizes differ in product");
  BasicMatrix<T> out(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t t = 0; t < m; ++t) {
      if (a(i, t) == 0) continue;
      const T w = a(i, t);
      for (std::size_t j = 0; j < m; ++j) out(i, j) += w * b(t, j);
    }
  return out;
}

template <class T>
BasicMatrix<T> permutation_matrix(std::span<const std::size_t> order) {
  BasicMatrix<T> out(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) out(i, order[i]) = T(1);
  return out;
}

template FrequencyMatrix multiply(const FrequencyMatrix&, const FrequencyMatrix&);
template RationalMatrix multiply(const RationalMatrix&, const RationalMatrix&);
template FrequencyMatrix permutation_matrix<double>(std::span<const std::size_t>);
template RationalMatrix permutation_matrix<Rational>(std::span<const std::size_t>);

}  // namespace votemap
