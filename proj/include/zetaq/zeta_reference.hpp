#pragma once

#include <string>

#include "zetaq/interval.hpp"
#include "zetaq/rat.hpp"

namespace zetaq {

/// Ceiling on working decimal digits for reference constants and rendering.
inline constexpr int kDefaultDigitBudget = 10000;

/// Certified enclosure of zeta(p), p >= 2, with width < 10^-digits.
///
/// Partial sum of k^-p for k < N, then the Euler-Maclaurin tail
///   N^(1-p)/(p-1) + N^-p/2 + sum_{j<=M} B_2j/(2j)! * (p)_(2j-1) * N^(1-p-2j)
/// with remainder |R| <= 4 (p)_2M / ((2 pi)^2M (p+2M-1) N^(p+2M-1)), 2 pi
/// replaced by 6. The partial sum is accumulated in fixed point with directed
/// rounding. Endpoints are multiples of 10^-digits / 8, and the enclosure for
/// more digits always lies inside the one for fewer.
///
/// Throws PrecisionBudgetExceeded when digits > budget.
Interval zeta_reference(int p, int digits, int budget = kDefaultDigitBudget);

/// Exact Bernoulli number B_k (B_1 = -1/2); cached.
Rat bernoulli(int k);

/// alpha * zeta(2) + beta rendered to `digits` places after the decimal
/// point, correctly rounded (ties to even). alpha = 0 renders beta exactly.
std::string render_decimal(const Rat& alpha, const Rat& beta, int digits,
                           int budget = kDefaultDigitBudget);

/// Exact rational rounded to `digits` decimal places, ties to even.
std::string render_rational(const Rat& x, int digits);

/// Upward-rounded scientific rendering of |x| (e.g. "2.31e-24"), for reports.
std::string render_scientific_upper(const Rat& x, int significant = 3);

}  // namespace zetaq
