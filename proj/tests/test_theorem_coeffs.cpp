#include <doctest.h>

#include <random>

#include "zetaq/errors.hpp"
#include "zetaq/theorem_coeffs.hpp"
#include "zetaq/zeta_series.hpp"

using namespace zetaq;

namespace {

std::vector<Rat> ints(std::initializer_list<long> v) {
  std::vector<Rat> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

PolySpec poly(std::initializer_list<long> v) { return explicit_poly(ints(v)); }

PolySpec unit(int n, int k) {
  std::vector<Rat> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(k)] = Rat(1);
  return explicit_poly(std::move(c));
}

}  // namespace

TEST_SUITE("theorem_coeffs") {
  TEST_CASE("S symbol") {
    const auto ones = ints({1, 1});
    CHECK(s_sym(ones, ones, ones, 0, 1, 1) == Rat(3));
    const auto a = ints({2, 5});
    const auto b = ints({3, 1});
    const auto c = ints({7, 1});
    CHECK(s_sym(a, b, c, 0, 0, 0) == Rat(3 * 2 * 3 * 7));
    CHECK(s_sym(ints({1, 2, 3}), ints({1, 1, 1}), ints({0, 0, 1}), 0, 1, 2) == Rat(1));
    CHECK_THROWS_AS(s_sym(a, b, c, 0, 2, 0), std::out_of_range);
  }

  TEST_CASE("constant polynomials give pure zeta values") {
    const PolySpec one = poly({1});
    for (int r = 3; r <= 8; ++r) {
      const CoefficientRow row = theorem_row(one, one, one, r);
      CHECK(row.order == r);
      CHECK(row.combo == ZetaCombination::zeta(r));
    }
  }

  TEST_CASE("row examples") {
    const CoefficientRow r3 = row_zeta3(poly({1, 1}), poly({1, 0}), poly({1, 0}));
    CHECK(r3.combo.coeff(3) == Rat(1));
    CHECK(r3.combo == decompose_integral(poly({1, 1}), poly({1, 0}), poly({1, 0}), 3));

    const CoefficientRow r4 = row_zeta4(poly({0, 1}), poly({1, 0}), poly({1, 0}));
    CHECK(r4.combo.coeff(4) == Rat(0));
    CHECK(r4.combo == decompose_integral(poly({0, 1}), poly({1}), poly({1}), 4));

    const CoefficientRow r5 = row_general(shifted_legendre(1), binomial_poly(1), poly({1, 0}), 5);
    CHECK(r5.combo.coeff(5) == Rat(1));
    CHECK(r5.combo.max_order() == 5);
  }

  TEST_CASE("every monomial triple matches the oracle") {
    const int n = 3;
    for (int x = 0; x <= n; ++x) {
      for (int y = 0; y <= n; ++y) {
        for (int z = 0; z <= n; ++z) {
          const ValidationReport rep = validate_rows(unit(n, x), unit(n, y), unit(n, z), 9);
          CHECK_MESSAGE(rep.all_equal(), "monomials " << x << "," << y << "," << z);
        }
      }
    }
  }

  TEST_CASE("seeded random triples match the oracle") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
      const auto [p, q, t] = random_triple(rng, 3);
      CHECK(validate_rows(p, q, t, 7).all_equal());
    }
  }

  TEST_CASE("degree-0 third polynomial") {
    for (long c0 : {-3L, 2L}) {
      const PolySpec t = poly({c0}).padded(2);
      CHECK(validate_rows(poly({1, -2, 3}), poly({2, 0, -1}), t, 7).all_equal());
    }
  }

  TEST_CASE("adjudication keeps exactly the pinned conventions") {
    std::mt19937_64 rng(5);
    ValidationReport all;
    for (int trial = 0; trial < 20; ++trial) {
      const auto [p, q, t] = random_triple(rng, 3);
      all.merge(validate_rows(p, q, t, 7, all_conventions()));
    }
    const auto passing = adjudicate(all, all_conventions());
    REQUIRE(passing.size() == 1);
    CHECK(passing[0] == RowConventions{});
    CHECK(to_string(passing[0]) == "no-h/separate");
  }

  TEST_CASE("a corrupted row is flagged alone") {
    RowSource corrupt = [](const PolySpec& p, const PolySpec& q, const PolySpec& t, int r,
                           const RowConventions& conv) {
      CoefficientRow row = theorem_row(p, q, t, r, conv);
      if (r == 5) row.combo.add_term(3, Rat(1, 7));
      return row;
    };
    const ValidationReport rep =
        validate_rows(poly({1, 2}), poly({-1, 1}), poly({3, 1}), 7, {RowConventions{}}, corrupt);
    REQUIRE(rep.rows.size() == 5);
    for (const RowCheck& r : rep.rows) {
      CHECK(r.equal == (r.order != 5));
    }
    CHECK(rep.rows[2].first_difference == 3);
    CHECK(rep.rows[2].got - rep.rows[2].expected == Rat(1, 7));
  }

  TEST_CASE("invalid inputs") {
    CHECK_THROWS_AS(row_zeta3(poly({1, 2}), poly({1}), poly({1, 0})), DimensionMismatch);
    CHECK_THROWS_AS(row_general(poly({1}), poly({1}), poly({1}), 4), std::invalid_argument);
    CHECK_THROWS_AS(theorem_row(poly({1}), poly({1}), poly({1}), 2), std::invalid_argument);
  }
}
