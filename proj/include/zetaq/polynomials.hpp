#pragma once

#include <string_view>
#include <vector>

#include "zetaq/rat.hpp"

namespace zetaq {

enum class PolyFamily { ShiftedLegendre, Binomial, Explicit };

const char* to_string(PolyFamily f);

/// Degree-n polynomial sum_r coeffs[r] x^r with its family tag and
/// c* = max_r |coeffs[r]|.
class PolySpec {
 public:
  PolySpec(std::vector<Rat> coeffs, PolyFamily family);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  const Rat& operator[](int r) const { return coeffs_.at(static_cast<std::size_t>(r)); }
  PolyFamily family() const { return family_; }
  const Rat& cstar() const { return cstar_; }

  /// Sum of |coeffs[r]|.
  Rat abs_sum() const;

  /// Copy with zero coefficients appended up to degree n (family unchanged
  /// for Explicit; structured families cannot be padded).
  PolySpec padded(int n) const;

  friend bool operator==(const PolySpec&, const PolySpec&) = default;

 private:
  std::vector<Rat> coeffs_;
  PolyFamily family_;
  Rat cstar_;
};

/// P_n(x) = (1/n!) d^n/dx^n (x^n (1-x)^n), coefficients (-1)^r (n+r)!/((r!)^2 (n-r)!).
PolySpec shifted_legendre(int n);

/// Q_n(x) = (1-x)^n.
PolySpec binomial_poly(int n);

/// Arbitrary coefficients, lowest degree first. Throws on an empty list.
PolySpec explicit_poly(std::vector<Rat> coeffs);

/// Horner evaluation.
Rat eval_poly(const PolySpec& p, const Rat& x);

/// Parses "1,-3/2,0" into rationals. Throws std::invalid_argument on bad input.
std::vector<Rat> parse_coeff_list(std::string_view text);

/// Brings three polynomials to a common degree. Explicit polynomials are
/// zero-padded; if two structured (Legendre/Binomial) degrees differ or a
/// structured polynomial would need padding, throws DimensionMismatch.
void align_degrees(PolySpec& p, PolySpec& q, PolySpec& t);

}  // namespace zetaq
