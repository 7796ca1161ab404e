#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "zetaq/interval.hpp"
#include "zetaq/rat.hpp"

namespace zetaq {

/// Exact value constant + sum_p coeff[p] * zeta(p), p >= 2, kept sparse:
/// zero coefficients are never stored.
class ZetaCombination {
 public:
  ZetaCombination() = default;

  /// The combination 1 * zeta(p).
  static ZetaCombination zeta(int p);

  const Rat& constant() const { return constant_; }
  const std::map<int, Rat>& terms() const { return terms_; }
  /// Coefficient of zeta(p); zero when absent.
  Rat coeff(int p) const;
  /// Highest order with a nonzero coefficient, or 0 when there is none.
  int max_order() const;

  void add_constant(const Rat& v);
  /// Throws std::invalid_argument for p <= 1.
  void add_term(int p, const Rat& v);
  /// this += w * other.
  void add_scaled(const ZetaCombination& other, const Rat& w);

  /// Key of the first differing term: 0 for the constant, p for zeta(p).
  std::optional<int> first_difference(const ZetaCombination& other) const;

  /// Certified enclosure of the real value using reference zeta values
  /// accurate to `digits` decimal places each.
  Interval enclose(int digits) const;

  std::string str() const;

  friend bool operator==(const ZetaCombination&, const ZetaCombination&) = default;
  friend std::ostream& operator<<(std::ostream& os, const ZetaCombination& z);

 private:
  Rat constant_;
  std::map<int, Rat> terms_;
};

}  // namespace zetaq
