#pragma once

#include <vector>

#include "zetaq/rat.hpp"

namespace zetaq {

/// Immutable table of generalized harmonic numbers H_k^(m) = sum_{j=1..k} 1/j^m
/// for 0 <= k <= max_index and 1 <= m <= max_order. H_0^(m) = 0.
/// Safe for concurrent reads once constructed.
class HarmonicTable {
 public:
  HarmonicTable(int max_index, int max_order);

  int max_index() const { return max_index_; }
  int max_order() const { return max_order_; }

  /// Throws std::out_of_range outside the table.
  const Rat& at(int k, int m) const;

  /// Shorthand for H_k = at(k, 1).
  const Rat& h(int k) const { return at(k, 1); }

 private:
  int max_index_;
  int max_order_;
  std::vector<Rat> values_;  // row-major: (m-1) * (max_index+1) + k
};

/// H_k^(m), memoized in a process-wide table that grows on demand.
Rat harmonic(int k, int m);

}  // namespace zetaq
