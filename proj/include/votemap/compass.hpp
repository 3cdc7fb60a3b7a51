#pragma once

#include "votemap/matrix.hpp"

#include <string>

namespace votemap {

enum class CompassKind { Identity, Uniformity, Stratification, Antagonism };

std::string compass_label(CompassKind kind);  // "ID", "UN", "ST", "AN"

// ID, UN for any m >= 1; ST and AN only for even m (UnsupportedDimensionError otherwise).
template <class T = double>
BasicMatrix<T> compass_matrix(CompassKind kind, std::size_t m);

// alpha * x + (1 - alpha) * y, alpha in [0, 1].
template <class T>
BasicMatrix<T> affine_combination(const BasicMatrix<T>& x, const BasicMatrix<T>& y, const T& alpha);

}  // namespace votemap
