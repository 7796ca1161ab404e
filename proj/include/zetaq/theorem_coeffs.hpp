#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "zetaq/polynomials.hpp"
#include "zetaq/rat.hpp"
#include "zetaq/zeta_combination.hpp"

namespace zetaq {

/// Reading of the intermediate zeta(s-j) coefficients of the general row.
/// RegroupedWithH keeps harmonic factors in the triple sum; RegroupedNoH uses
/// plain reciprocal powers.
enum class TranscriptionVariant { RegroupedWithH, RegroupedNoH };

/// How the zeta(3) and zeta(2) coefficients of a general row are formed.
/// SeparateBlocks adds the dedicated low-order blocks to the generic sum;
/// GenericFormula uses the generic coefficient alone.
enum class LowOrderRoute { SeparateBlocks, GenericFormula };

struct RowConventions {
  TranscriptionVariant variant = TranscriptionVariant::RegroupedNoH;
  LowOrderRoute low_order = LowOrderRoute::SeparateBlocks;
  friend bool operator==(const RowConventions&, const RowConventions&) = default;
};

const char* to_string(TranscriptionVariant v);
const char* to_string(LowOrderRoute r);
std::string to_string(const RowConventions& c);

/// All four convention combinations, the pinned default first.
std::vector<RowConventions> all_conventions();

/// I_order = combo. The zeta(2) coefficient and the constant are stored with
/// the minus signs of the decomposition already applied.
struct CoefficientRow {
  int order = 0;
  ZetaCombination combo;
};

/// a_mu b_nu c_lam + b_mu c_nu a_lam + c_mu a_nu b_lam.
/// Throws std::out_of_range for an index past any list.
Rat s_sym(const std::vector<Rat>& a, const std::vector<Rat>& b, const std::vector<Rat>& c,
          int mu, int nu, int lam);

/// Rows of I_3, I_4 and I_r (r >= 5). All three polynomials must share one
/// degree, otherwise DimensionMismatch.
CoefficientRow row_zeta3(const PolySpec& p, const PolySpec& q, const PolySpec& t);
CoefficientRow row_zeta4(const PolySpec& p, const PolySpec& q, const PolySpec& t);
CoefficientRow row_general(const PolySpec& p, const PolySpec& q, const PolySpec& t, int r,
                           const RowConventions& conv = {});

/// Dispatches to the row for any order r >= 3.
CoefficientRow theorem_row(const PolySpec& p, const PolySpec& q, const PolySpec& t, int r,
                           const RowConventions& conv = {});

using RowSource = std::function<CoefficientRow(const PolySpec&, const PolySpec&, const PolySpec&, int,
                                               const RowConventions&)>;

struct RowCheck {
  int order = 0;
  RowConventions conv;
  /// False for orders 3 and 4, whose rows do not depend on the conventions.
  bool convention_sensitive = false;
  bool equal = false;
  /// 0 for the constant, p for zeta(p).
  std::optional<int> first_difference;
  Rat got;
  Rat expected;
};

struct ValidationReport {
  std::vector<RowCheck> rows;

  bool all_equal() const;
  /// Every row that applies under `conv` is equal.
  bool all_equal(const RowConventions& conv) const;
  /// Accumulates another report's rows.
  void merge(const ValidationReport& other);
};

/// Compares each row r = 3..s_max against decompose_integral, once per
/// convention for r >= 5. `source` replaces theorem_row when set.
ValidationReport validate_rows(const PolySpec& p, const PolySpec& q, const PolySpec& t, int s_max,
                               const std::vector<RowConventions>& convs = {RowConventions{}},
                               const RowSource& source = {});

struct PolyTriple {
  PolySpec p;
  PolySpec q;
  PolySpec t;
};

/// Three explicit polynomials of one random degree in 0..max_degree with
/// integer coefficients in [-bound, bound].
PolyTriple random_triple(std::mt19937_64& rng, int max_degree, int bound = 3);

/// Conventions under which every applicable row of the report is equal.
std::vector<RowConventions> adjudicate(const ValidationReport& report,
                                       const std::vector<RowConventions>& candidates);

}  // namespace zetaq
