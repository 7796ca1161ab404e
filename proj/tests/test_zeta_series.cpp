#include <doctest.h>

#include <algorithm>
#include <array>
#include <random>

#include "zetaq/errors.hpp"
#include "zetaq/theorem_coeffs.hpp"
#include "zetaq/zeta_reference.hpp"
#include "zetaq/zeta_series.hpp"

using namespace zetaq;

namespace {

PolySpec poly(std::initializer_list<long> v) {
  std::vector<Rat> c;
  for (long x : v) c.emplace_back(x);
  return explicit_poly(std::move(c));
}

ZetaCombination combo(const Rat& constant, std::initializer_list<std::pair<int, Rat>> terms) {
  ZetaCombination z;
  z.add_constant(constant);
  for (const auto& [p, v] : terms) z.add_term(p, v);
  return z;
}

Rat pow2_neg(int e) { return Rat(BigInt(1), BigInt(1) << e); }

}  // namespace

TEST_SUITE("zeta_series") {
  TEST_CASE("ZetaCombination stays sparse") {
    ZetaCombination z;
    z.add_term(3, Rat(2));
    z.add_term(3, Rat(-2));
    CHECK(z.terms().empty());
    CHECK_THROWS_AS(z.add_term(1, Rat(1)), std::invalid_argument);
    z.add_term(5, Rat(0));
    CHECK(z.terms().empty());
    CHECK(z == ZetaCombination());
    const ZetaCombination a = combo(Rat(1), {{2, Rat(3)}, {4, Rat(1)}});
    const ZetaCombination b = combo(Rat(1), {{2, Rat(3)}, {5, Rat(1)}});
    CHECK(a.first_difference(b) == 4);
    CHECK(a.first_difference(a) == std::nullopt);
    CHECK(combo(Rat(2), {}).first_difference(ZetaCombination()) == 0);
    CHECK(a.max_order() == 4);
  }

  TEST_CASE("partial fraction sum examples") {
    CHECK(partial_fraction_sum(0, 0, 0, 3) == ZetaCombination::zeta(3));
    CHECK(partial_fraction_sum(1, 1, 1, 3) == combo(Rat(-1), {{3, Rat(1)}}));
    CHECK(partial_fraction_sum(1, 0, 0, 3) == combo(Rat(-1), {{2, Rat(1)}}));
    // 1/((m+1)(m+2)(m+3)) telescopes to 1/12.
    CHECK(partial_fraction_sum(1, 2, 3, 3) == combo(Rat(1, 12), {}));
    // 1/(m(m+1)) = 1/m - 1/(m+1) with an extra 1/m: zeta(2) - 1.
    CHECK(partial_fraction_sum(0, 0, 1, 3) == combo(Rat(-1), {{2, Rat(1)}}));
    // 1/(m^2 (m+1)) summed with one more power of m.
    CHECK(partial_fraction_sum(1, 0, 0, 4) == combo(Rat(1), {{3, Rat(1)}, {2, Rat(-1)}}));
  }

  TEST_CASE("partial fraction sum is symmetric and converges") {
    for (int s = 3; s <= 8; ++s) {
      for (int a = 0; a <= 4; ++a) {
        for (int b = 0; b <= 4; ++b) {
          for (int c = 0; c <= 4; ++c) {
            std::array<int, 3> r{a, b, c};
            const ZetaCombination base = partial_fraction_sum(a, b, c, s);
            std::sort(r.begin(), r.end());
            do {
              CHECK(partial_fraction_sum(r[0], r[1], r[2], s) == base);
            } while (std::next_permutation(r.begin(), r.end()));
          }
        }
      }
    }
  }

  TEST_CASE("partial fraction sums agree with direct summation") {
    for (int s = 3; s <= 6; ++s) {
      for (auto [a, b, c] : {std::array<int, 3>{0, 0, 0}, {0, 2, 2}, {1, 3, 3}, {2, 2, 2}, {1, 2, 4}, {0, 1, 3}}) {
        const PolySpec pa = explicit_poly([&] {
          std::vector<Rat> v(static_cast<std::size_t>(a) + 1);
          v.back() = Rat(1);
          return v;
        }());
        const PolySpec pb = explicit_poly([&] {
          std::vector<Rat> v(static_cast<std::size_t>(b) + 1);
          v.back() = Rat(1);
          return v;
        }());
        const PolySpec pc = explicit_poly([&] {
          std::vector<Rat> v(static_cast<std::size_t>(c) + 1);
          v.back() = Rat(1);
          return v;
        }());
        const Interval direct = eval_truncated(pa, pb, pc, s, 400);
        CHECK(direct.contains(partial_fraction_sum(a, b, c, s).enclose(40)));
      }
    }
  }

  TEST_CASE("decompose_integral examples") {
    const PolySpec one = poly({1});
    for (int s = 3; s <= 6; ++s) {
      CHECK(decompose_integral(one, one, one, s) == ZetaCombination::zeta(s));
    }
    CHECK(decompose_integral(poly({0, 1}), one, one, 3) == combo(Rat(-1), {{2, Rat(1)}}));

    const PolySpec p = shifted_legendre(1);
    const PolySpec q = binomial_poly(1);
    ZetaCombination manual;
    for (int r1 = 0; r1 <= 1; ++r1) {
      for (int r2 = 0; r2 <= 1; ++r2) {
        manual.add_scaled(partial_fraction_sum(r1, r2, 0, 3), p[r1] * q[r2]);
      }
    }
    const ZetaCombination z = decompose_integral(p, q, one, 3);
    CHECK(z == manual);
    CHECK(eval_truncated(p, q, one, 3, 200).contains(z.enclose(40)));
  }

  TEST_CASE("oracle values lie inside truncated enclosures") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
      const auto [p, q, t] = random_triple(rng, 3);
      for (int s = 3; s <= 6; ++s) {
        const Interval trunc = eval_truncated(p, q, t, s, 64);
        CHECK(trunc.contains(decompose_integral(p, q, t, s).enclose(40)));
      }
    }
  }

  TEST_CASE("truncated evaluation contracts") {
    const PolySpec one = poly({1});
    CHECK(eval_truncated(one, one, one, 4, 10).contains(zeta_reference(4, 30)));
    CHECK(eval_truncated(one, one, poly({0}), 3, 10) == Interval(Rat(0)));

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
      const auto [p, q, t] = random_triple(rng, 3);
      for (int s = 3; s <= 5; ++s) {
        const Interval a = eval_truncated(p, q, t, s, 8);
        const Interval b = eval_truncated(p, q, t, s, 30);
        CHECK(a.contains(b));
        const Rat crude = p.abs_sum() * q.abs_sum() * t.abs_sum() /
                          Rat(BigInt(s - 1) * pow_int(30, static_cast<unsigned long>(s - 1)));
        CHECK(b.width() <= Rat(2) * crude);
      }
    }
    CHECK_THROWS_AS(eval_truncated(one, one, one, 3, 0), std::invalid_argument);
  }

  TEST_CASE("beta function") {
    CHECK(beta_rat(1, 1) == Rat(1));
    CHECK(beta_rat(2, 2) == Rat(1, 6));
    CHECK(beta_rat(3, 2) == Rat(1, 12));
    CHECK(beta_rat(4, 7) == beta_rat(7, 4));
    // sum_{k=k0}^{k0+L} B(k+1, n+1) = B(k0+1, n) - B(k0+L+2, n)
    for (int n = 1; n <= 6; ++n) {
      for (int k0 = 0; k0 <= 8; ++k0) {
        Rat s;
        for (int k = k0; k <= k0 + 12; ++k) s += beta_rat(k + 1, n + 1);
        CHECK(s == beta_rat(k0 + 1, n) - beta_rat(k0 + 14, n));
      }
    }
    CHECK_THROWS_AS(beta_rat(0, 3), std::invalid_argument);
  }

  TEST_CASE("special series contracts") {
    const PolySpec one = poly({1});
    const Interval fast = eval_special_series(2, one, 3, 200);
    PolySpec t2 = one.padded(2);
    CHECK(fast.intersects(eval_truncated(shifted_legendre(2), binomial_poly(2), t2, 3, 400)));

    const Interval n5 = eval_special_series(5, one, 3, 100);
    CHECK(n5.lo() >= -pow2_neg(10));
    CHECK(n5.hi() <= pow2_neg(10));

    for (int n : {1, 3, 5, 7}) {
      CHECK(eval_special_series(n, one, 3, 200).is_negative());
    }
    for (int n : {2, 4, 6}) {
      CHECK(eval_special_series(n, one, 4, 200).is_positive());
    }
    for (int s = 3; s <= 5; ++s) {
      const Interval a = eval_special_series(3, poly({1, -1}), s, 10);
      const Interval b = eval_special_series(3, poly({1, -1}), s, 50);
      CHECK(a.contains(b));
    }
    CHECK_THROWS_AS(eval_special_series(0, one, 3, 10), std::invalid_argument);
  }

  TEST_CASE("special series equals the exact decomposition") {
    for (int n = 1; n <= 4; ++n) {
      const PolySpec t = poly({1}).padded(n);
      for (int s = 3; s <= 6; ++s) {
        const Rat width(BigInt(1), pow_int(10, static_cast<unsigned long>(2 * s)));
        const Interval ss = special_series_enclosure(n, t, s, width);
        CHECK(ss.contains(decompose_integral(shifted_legendre(n), binomial_poly(n), t, s).enclose(40)));
      }
    }
  }

  TEST_CASE("telescoping identities") {
    const Lemma2Sides simple = lemma2_sides(Lemma2Identity::Simple, 1, 0, 1);
    CHECK(simple.lhs == Rat(1, 2));
    CHECK(simple.rhs == Rat(1, 2));
    // The triple identity at s = 1 against its direct expansion.
    for (int r = 1; r <= 5; ++r) {
      for (int k = 0; k <= 5; ++k) {
        const Rat m(r + k + 1);
        const Rat direct = inv_pow(r, 3) / Rat(k + 1) - inv_pow(r, 3) / m - inv_pow(r, 2) / (m * m) -
                           Rat(1) / (Rat(r) * m * m * m);
        const Lemma2Sides t = lemma2_sides(Lemma2Identity::Triple, r, k, 1);
        CHECK(t.lhs == direct);
        CHECK(t.rhs == direct);
      }
    }
    const Lemma2Report rep = lemma2_sweep(20, 20, 10);
    CHECK(rep.ok());
    CHECK(rep.checked == 3 * 20 * 21 * 10);
    CHECK_THROWS_AS(lemma2_sides(Lemma2Identity::Double, 0, 0, 1), std::invalid_argument);
  }
}
