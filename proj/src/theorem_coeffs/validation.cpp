#include <algorithm>
#include <cstdint>

#include "zetaq/theorem_coeffs.hpp"
#include "zetaq/zeta_series.hpp"

namespace zetaq {

bool ValidationReport::all_equal() const {
  return std::all_of(rows.begin(), rows.end(), [](const RowCheck& r) { return r.equal; });
}

bool ValidationReport::all_equal(const RowConventions& conv) const {
  return std::all_of(rows.begin(), rows.end(), [&](const RowCheck& r) {
    return r.equal || (r.convention_sensitive && !(r.conv == conv));
  });
}

void ValidationReport::merge(const ValidationReport& other) {
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
}

ValidationReport validate_rows(const PolySpec& p, const PolySpec& q, const PolySpec& t, int s_max,
                               const std::vector<RowConventions>& convs, const RowSource& source) {
  ValidationReport rep;
  const std::vector<RowConventions> fallback{RowConventions{}};
  const auto& use = convs.empty() ? fallback : convs;
  for (int r = 3; r <= s_max; ++r) {
    const ZetaCombination expected = decompose_integral(p, q, t, r);
    const bool sensitive = r >= 5;
    const std::size_t count = sensitive ? use.size() : 1;
    for (std::size_t ci = 0; ci < count; ++ci) {
      const RowConventions& conv = use[ci];
      const CoefficientRow row = source ? source(p, q, t, r, conv) : theorem_row(p, q, t, r, conv);
      RowCheck chk;
      chk.order = r;
      chk.conv = conv;
      chk.convention_sensitive = sensitive;
      chk.first_difference = row.combo.first_difference(expected);
      chk.equal = !chk.first_difference.has_value();
      if (chk.first_difference) {
        const int key = *chk.first_difference;
        chk.got = key == 0 ? row.combo.constant() : row.combo.coeff(key);
        chk.expected = key == 0 ? expected.constant() : expected.coeff(key);
      }
      rep.rows.push_back(std::move(chk));
    }
  }
  return rep;
}

PolyTriple random_triple(std::mt19937_64& rng, int max_degree, int bound) {
  const auto width = static_cast<std::uint64_t>(2 * bound + 1);
  const int n = static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree + 1));
  auto draw = [&] {
    std::vector<Rat> c;
    for (int i = 0; i <= n; ++i) {
      c.emplace_back(static_cast<long>(rng() % width) - bound);
    }
    return explicit_poly(std::move(c));
  };
  PolySpec p = draw();
  PolySpec q = draw();
  PolySpec t = draw();
  return {std::move(p), std::move(q), std::move(t)};
}

std::vector<RowConventions> adjudicate(const ValidationReport& report,
                                       const std::vector<RowConventions>& candidates) {
  std::vector<RowConventions> out;
  for (const RowConventions& c : candidates) {
    if (report.all_equal(c)) {
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace zetaq
