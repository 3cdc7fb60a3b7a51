#include "votemap/error.hpp"
#include "votemap/models.hpp"

#include <map>
#include <mutex>

namespace votemap {

MahonianTable::MahonianTable(std::size_t m) {
  rows_.resize(m + 1);
  rows_[0] = {BigInt(1)};
  for (std::size_t mm = 1; mm <= m; ++mm) {
    const std::size_t kmax = max_distance(mm);
    auto& row = rows_[mm];
    const auto& prev = rows_[mm - 1];
    row.assign(kmax + 1, BigInt(0));
    // S(m',k) = S(m',k-1) + S(m'-1,k) - S(m'-1,k-m')
    for (std::size_t k = 0; k <= kmax; ++k) {
      BigInt v = k > 0 ? row[k - 1] : BigInt(0);
      if (k < prev.size()) v += prev[k];
      if (k >= mm && k - mm < prev.size()) v -= prev[k - mm];
      row[k] = std::move(v);
    }
  }
}

const BigInt& MahonianTable::operator()(std::size_t m, long k) const {
  static const BigInt zero(0);
  if (m >= rows_.size() || k < 0 || static_cast<std::size_t>(k) >= rows_[m].size()) return zero;
  return rows_[m][static_cast<std::size_t>(k)];
}

MahonianTable mahonian(std::size_t m) {
  if (m == 0) throw DomainError("Mahonian table needs m >= 1");
  return MahonianTable(m);
}

std::shared_ptr<const MahonianTable> mahonian_shared(std::size_t m) {
  static std::mutex mutex;
  static std::shared_ptr<const MahonianTable> table;
  std::lock_guard lock(mutex);
  if (!table || table->max_candidates() < m) {
    table = std::make_shared<const MahonianTable>(std::max<std::size_t>(m, 16));
  }
  return table;
}

}  // namespace votemap
