#include "zetaq/harmonic.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace zetaq {

HarmonicTable::HarmonicTable(int max_index, int max_order)
    : max_index_(max_index), max_order_(max_order) {
  if (max_index < 0 || max_order < 1) {
    throw std::invalid_argument("HarmonicTable: need max_index >= 0 and max_order >= 1");
  }
  const auto width = static_cast<std::size_t>(max_index) + 1;
  values_.resize(width * static_cast<std::size_t>(max_order));
  for (int m = 1; m <= max_order; ++m) {
    const std::size_t base = static_cast<std::size_t>(m - 1) * width;
    values_[base] = Rat(0);
    for (int k = 1; k <= max_index; ++k) {
      values_[base + static_cast<std::size_t>(k)] = values_[base + static_cast<std::size_t>(k) - 1] + inv_pow(k, m);
    }
  }
}

const Rat& HarmonicTable::at(int k, int m) const {
  if (k < 0 || k > max_index_ || m < 1 || m > max_order_) {
    throw std::out_of_range("HarmonicTable: H_" + std::to_string(k) + "^(" + std::to_string(m) +
                            ") outside table");
  }
  const auto width = static_cast<std::size_t>(max_index_) + 1;
  return values_[static_cast<std::size_t>(m - 1) * width + static_cast<std::size_t>(k)];
}

Rat harmonic(int k, int m) {
  if (k < 0 || m < 1) {
    throw std::invalid_argument("harmonic: need k >= 0 and m >= 1");
  }
  static std::mutex mu;
  static std::shared_ptr<const HarmonicTable> table;
  std::shared_ptr<const HarmonicTable> snapshot;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (!table || table->max_index() < k || table->max_order() < m) {
      const int n = table ? std::max(table->max_index(), k) : std::max(k, 32);
      const int o = table ? std::max(table->max_order(), m) : std::max(m, 3);
      table = std::make_shared<const HarmonicTable>(n, o);
    }
    snapshot = table;
  }
  return snapshot->at(k, m);
}

}  // namespace zetaq
