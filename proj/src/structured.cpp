#include "votemap/error.hpp"
#include "votemap/models.hpp"

namespace votemap {

namespace {

// rows[n][k] = C(n, k) / 2^n for n < count, built by halving Pascal's rule so
// nothing overflows for large n.
template <class T>
std::vector<std::vector<T>> halved_binomials(std::size_t count) {
  std::vector<std::vector<T>> rows(count);
  if (count == 0) return rows;
  rows[0] = {T(1)};
  const T half = T(1) / T(2);
  for (std::size_t n = 1; n < count; ++n) {
    rows[n].assign(n + 1, T(0));
    for (std::size_t k = 0; k <= n; ++k) {
      T v = T(0);
      if (k < n) v += rows[n - 1][k];
      if (k > 0) v += rows[n - 1][k - 1];
      rows[n][k] = v * half;
    }
  }
  return rows;
}

template <class T>
T binom_at(const std::vector<std::vector<T>>& rows, long n, long k) {
  if (n < 0 || k < 0 || k > n) return T(0);
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace

template <class T>
BasicMatrix<T> gs_tree_matrix(const GSTree& tree) {
  const std::size_t m = tree.candidates();
  // before[id][t]: probability that t candidates precede node id's block.
  std::vector<std::vector<T>> before(tree.nodes().size());
  before[0].assign(m, T(0));
  before[0][0] = T(1);
  const T half = T(1) / T(2);
  BasicMatrix<T> out(m);
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const std::size_t id = stack.back();
    stack.pop_back();
    const auto& node = tree.node(id);
    if (node.leaf) {
      for (std::size_t t = 0; t < m; ++t) out(t, node.candidate) = before[id][t];
      before[id].clear();
      continue;
    }
    const std::size_t total = tree.leaf_count(id);
    std::size_t left = 0;
    for (auto child : node.children) {
      const std::size_t own = tree.leaf_count(child);
      const std::size_t right = total - left - own;
      auto& f = before[child];
      f.assign(m, T(0));
      // f(x,t) = 1/2 f(p, t - left) + 1/2 f(p, t - right)
      for (std::size_t t = 0; t < m; ++t) {
        if (t >= left) f[t] += half * before[id][t - left];
        if (t >= right) f[t] += half * before[id][t - right];
      }
      left += own;
      stack.push_back(child);
    }
    before[id].clear();
  }
  return out;
}

template <class T>
BasicMatrix<T> caterpillar_matrix(std::size_t m) {
  if (m == 0) throw DomainError("caterpillar matrix needs m >= 1");
  const auto b = halved_binomials<T>(m);
  const T half = T(1) / T(2);
  BasicMatrix<T> out(m);
  const long M = static_cast<long>(m);
  for (long i = 0; i < M; ++i)
    for (long j = 0; j < M; ++j)
      // (1/2^j) C(j-1, i-1) + (1/2^j) C(j-1, (i-1)-(m-j)), 1-based i, j
      out(i, j) = half * (binom_at(b, j, i) + binom_at(b, j, i - (M - j - 1)));
  return out;
}

template <class T>
BasicMatrix<T> walsh_matrix(std::size_t m) {
  if (m == 0) throw DomainError("Walsh matrix needs m >= 1");
  const auto b = halved_binomials<T>(m);
  const T half = T(1) / T(2);
  BasicMatrix<T> out(m);
  const long M = static_cast<long>(m);
  for (long i = 0; i < M; ++i)
    for (long j = 0; j < M; ++j)
      // (1/2^(m-i+1)) [C(m-i, j-1) + C(m-i, j-i)], 1-based i, j
      out(i, j) = half * (binom_at(b, M - 1 - i, j) + binom_at(b, M - 1 - i, j - i));
  return out;
}

template <class T>
BasicMatrix<T> conitzer_matrix(std::size_t m) {
  if (m == 0) throw DomainError("Conitzer matrix needs m >= 1");
  const long M = static_cast<long>(m);
  const T one_over_m = T(1) / T(M);
  // Probability that c_a..c_b (1-based) take the top b-a+1 positions.
  auto interval = [&](long a, long b) -> T {
    if (a == 1 && b == M) return T(1);
    if (a == 1) return T(b + 1) / T(2 * M);
    if (b == M) return T(M - a + 2) / T(2 * M);
    return one_over_m;
  };
  // Probability that the process extends [a,b] by the given side.
  auto extend = [&](long a, long b) -> T { return (a == 1 || b == M) ? T(1) : T(1) / T(2); };

  BasicMatrix<T> out(m);
  for (long j = 1; j <= M; ++j)
    for (long i = 1; i <= M; ++i) {
      T p = T(0);
      if (i == 1) {
        p = one_over_m;
      } else {
        if (j + i - 1 <= M) p += interval(j + 1, j + i - 1) * extend(j + 1, j + i - 1);
        if (j - i + 1 >= 1) p += interval(j - i + 1, j - 1) * extend(j - i + 1, j - 1);
      }
      out(i - 1, j - 1) = p;
    }
  return out;
}

template FrequencyMatrix gs_tree_matrix<double>(const GSTree&);
template RationalMatrix gs_tree_matrix<Rational>(const GSTree&);
template FrequencyMatrix caterpillar_matrix<double>(std::size_t);
template RationalMatrix caterpillar_matrix<Rational>(std::size_t);
template FrequencyMatrix walsh_matrix<double>(std::size_t);
template RationalMatrix walsh_matrix<Rational>(std::size_t);
template FrequencyMatrix conitzer_matrix<double>(std::size_t);
template RationalMatrix conitzer_matrix<Rational>(std::size_t);

}  // namespace votemap
