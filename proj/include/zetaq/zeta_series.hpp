#pragma once

#include <cstdint>

#include "zetaq/interval.hpp"
#include "zetaq/polynomials.hpp"
#include "zetaq/rat.hpp"
#include "zetaq/zeta_combination.hpp"

namespace zetaq {

/// sum_{m>=1} 1 / ((m+r1)(m+r2)(m+r3) m^(s-3)) as an exact zeta combination.
///
/// The summand is split into partial fractions over the poles m = 0 and
/// m = -r_i (merged when indices coincide); residues come from the Taylor
/// expansion of the cofactor. Then
///   sum 1/(m+r)^q = zeta(q) - H_r^(q)   (q >= 2)
/// and the simple poles, whose coefficients must cancel, sum to -c H_r.
/// Throws DivergentSeries if they do not cancel.
ZetaCombination partial_fraction_sum(int r1, int r2, int r3, int s);

/// I_s = sum_{r1,r2,r3} a_r1 b_r2 c_r3 * partial_fraction_sum(r1, r2, r3, s).
ZetaCombination decompose_integral(const PolySpec& p, const PolySpec& q, const PolySpec& t, int s);

/// Partial sum over k < K of A(k) B(k) C(k) / (k+1)^(s-3), with
/// A(k) = sum_r a_r/(k+1+r), widened by a certified tail bound that never
/// exceeds prod(sum |coeffs|) / ((s-1) K^(s-1)).
///
/// The tail also tries the moment expansion 1/(k+1+r) = sum_j (-r)^j x^(j+1) + R,
/// x = 1/(k+1), which decays faster when low moments of a polynomial vanish.
/// Intervals are nested in K.
Interval eval_truncated(const PolySpec& p, const PolySpec& q, const PolySpec& t, int s, std::int64_t K);

/// I_s for P = shifted_legendre(n), Q = binomial_poly(n):
///   (-1)^n sum_{k>=n} C(k,n) B(k+1,n+1)^2 T(k,n) / (k+1)^(s-3),
///   T(k,n) = sum_i c_i / (k+1+i),
/// summing K terms. The tail after k0 = n+K uses C(k,n) B(k+1,n+1) <= 1/(k+n+1)
/// and sum_{k>=k0} B(k+1,n+1) = B(k0+1,n). Intervals are nested in K.
Interval eval_special_series(int n, const PolySpec& t, int s, std::int64_t K);

/// Euler beta function at positive integers: (a-1)! (b-1)! / (a+b-1)!.
Rat beta_rat(int a, int b);

/// eval_special_series with K doubled until the width is <= max_width.
/// Throws PrecisionBudgetExceeded past max_terms.
Interval special_series_enclosure(int n, const PolySpec& t, int s, const Rat& max_width,
                                  std::int64_t max_terms = 1 << 20);

/// eval_truncated with K doubled until the width is <= max_width.
Interval truncated_enclosure(const PolySpec& p, const PolySpec& q, const PolySpec& t, int s,
                             const Rat& max_width, std::int64_t max_terms = 1 << 16);

enum class Lemma2Identity { Simple, Double, Triple };

/// Left and right sides of the telescoping identities for
/// 1 / ((r+k+1)^e (k+1)^s), e = 1, 2, 3, each evaluated exactly.
struct Lemma2Sides {
  Rat lhs;
  Rat rhs;
};
Lemma2Sides lemma2_sides(Lemma2Identity id, int r, int k, int s);

struct Lemma2Report {
  std::int64_t checked = 0;
  std::int64_t failed = 0;
  /// First failing instance, if any.
  Lemma2Identity first_id = Lemma2Identity::Simple;
  int first_r = 0;
  int first_k = 0;
  int first_s = 0;
  bool ok() const { return failed == 0; }
};

/// All three identities over 1 <= r <= max_r, 0 <= k <= max_k, 1 <= s <= max_s.
Lemma2Report lemma2_sweep(int max_r, int max_k, int max_s);

}  // namespace zetaq
