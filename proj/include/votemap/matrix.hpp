#pragma once

#include "votemap/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace votemap {

// Square m x m matrix stored row-major. For frequency matrices rows are
// positions and columns are candidates: (i, j) is the frequency of candidate j
// at position i, both 0-based.
template <class T>
class BasicMatrix {
 public:
  BasicMatrix() = default;
  explicit BasicMatrix(std::size_t m, const T& fill = T(0)) : m_(m), data_(m * m, fill) {}

  std::size_t size() const noexcept { return m_; }

  T& operator()(std::size_t row, std::size_t col) { return data_[row * m_ + col]; }
  const T& operator()(std::size_t row, std::size_t col) const { return data_[row * m_ + col]; }

  std::span<const T> row(std::size_t i) const { return {data_.data() + i * m_, m_}; }
  std::vector<T> column(std::size_t j) const;

  std::span<const T> data() const noexcept { return data_; }
  std::span<T> data() noexcept { return data_; }

  BasicMatrix transposed() const;

  friend bool operator==(const BasicMatrix&, const BasicMatrix&) = default;

 private:
  std::size_t m_ = 0;
  std::vector<T> data_;
};

using FrequencyMatrix = BasicMatrix<double>;
using RationalMatrix = BasicMatrix<Rational>;

template <class T>
std::vector<T> BasicMatrix<T>::column(std::size_t j) const {
  std::vector<T> out;
  out.reserve(m_);
  for (std::size_t i = 0; i < m_; ++i) out.push_back((*this)(i, j));
  return out;
}

template <class T>
BasicMatrix<T> BasicMatrix<T>::transposed() const {
  BasicMatrix out(m_);
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t j = 0; j < m_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

FrequencyMatrix to_double(const RationalMatrix& a);

// Largest deviation of any row or column sum from 1, or +inf if some entry is
// negative or above 1.
double bistochastic_defect(const FrequencyMatrix& a);
bool is_bistochastic(const FrequencyMatrix& a, double tol = 1e-9);
bool is_bistochastic(const RationalMatrix& a);

// Throws DomainError naming the first offending row/column.
void require_bistochastic(const FrequencyMatrix& a, double tol);

double max_abs_difference(const FrequencyMatrix& a, const FrequencyMatrix& b);

// Product a * b (both m x m).
template <class T>
BasicMatrix<T> multiply(const BasicMatrix<T>& a, const BasicMatrix<T>& b);

// Permutation matrix of a vote: entry (i, order[i]) is one.
template <class T>
BasicMatrix<T> permutation_matrix(std::span<const std::size_t> order);

}  // namespace votemap
