#pragma once

#include <vector>

#include "zetaq/polynomials.hpp"
#include "zetaq/rat.hpp"
#include "zetaq/theorem_coeffs.hpp"

namespace zetaq {

/// Upper-triangular system in the unknowns zeta(s), ..., zeta(3). Row v
/// (0-based) decomposes I_{s-v}:
///   sum_{j>=3} A[v][j] zeta(j) = theta_{s-v} + A2[v] zeta(2) + A0[v],
/// where A2 and A0 are the negated stored zeta(2) coefficient and constant.
struct TriangularSystem {
  int s = 0;
  int n = 0;
  std::vector<CoefficientRow> rows;
  /// Leading coefficients A[v][s-v].
  std::vector<Rat> diag;
  /// Product of diag.
  Rat delta;
  /// Cofactors of the first column.
  std::vector<Rat> complements;

  int size() const { return static_cast<int>(rows.size()); }
  /// Matrix entry: coefficient of zeta(s - col) in row `row`.
  Rat entry(int row, int col) const;
  /// Coefficient of zeta(2) on the right-hand side of row v.
  Rat rhs_zeta2(int row) const;
  /// Rational constant on the right-hand side of row v.
  Rat rhs_constant(int row) const;
};

/// zeta(s) ~ alpha zeta(2) + beta with
/// |alpha zeta(2) + beta - zeta(s)| <= theta_bound.
struct ApproxResult {
  int s = 0;
  int n = 0;
  Rat alpha;
  Rat beta;
  Rat theta_bound;
  Rat cstar;
  /// Weight of theta_{s-v} in zeta(s), per row.
  std::vector<Rat> weights;
  /// The per-row bounds on |theta| that were used.
  std::vector<Rat> row_bounds;
};

/// Rows for orders s down to 3 from the theorem formulas. Throws
/// SingularSystem if a leading coefficient vanishes.
TriangularSystem build_system(const PolySpec& p, const PolySpec& q, const PolySpec& t, int s,
                              const RowConventions& conv = {});

/// Back-substitution. theta_bounds[v] bounds |I_{s-v}|; throws
/// DimensionMismatch if the count differs from the row count.
ApproxResult solve_zeta(const TriangularSystem& sys, const std::vector<Rat>& theta_bounds);

/// alpha, beta and weights through the ratio of determinants (Cramer's rule
/// with cofactors of the first column).
struct DeterminantSolution {
  Rat alpha;
  Rat beta;
  std::vector<Rat> weights;
};
DeterminantSolution solve_by_determinants(const TriangularSystem& sys);

/// Exact determinant by Gaussian elimination with nonzero pivot search.
Rat determinant(std::vector<std::vector<Rat>> m);

/// c* 2^(-2n).
Rat theta_bound(int n, const Rat& cstar, int s);

/// Same, after checking that P is shifted Legendre and Q binomial.
/// Throws std::invalid_argument otherwise.
Rat theta_bound(const PolySpec& p, const PolySpec& q, const PolySpec& t, int s);

/// Certified bound on |I_r| for each row order r = s..3. Shifted-Legendre x
/// binomial inputs use the special series, capped by c* 2^(-2n); anything
/// else uses the truncated series. Bounds are rounded up to short dyadics.
std::vector<Rat> certified_theta_bounds(const PolySpec& p, const PolySpec& q, const PolySpec& t, int s);

/// P = shifted_legendre(n), Q = binomial_poly(n), the given T padded to
/// degree n; build, bound and solve.
ApproxResult approximate_zeta(int s, int n, const PolySpec& t, const RowConventions& conv = {});

}  // namespace zetaq
