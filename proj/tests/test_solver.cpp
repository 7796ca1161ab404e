#include <doctest.h>

#include <random>

#include "zetaq/errors.hpp"
#include "zetaq/solver.hpp"
#include "zetaq/zeta_reference.hpp"
#include "zetaq/zeta_series.hpp"

using namespace zetaq;

namespace {

PolySpec poly(std::initializer_list<long> v) {
  std::vector<Rat> c;
  for (long x : v) c.emplace_back(x);
  return explicit_poly(std::move(c));
}

// True when the reference enclosure of zeta(s) provably lies within
// alpha zeta(2) + beta +- theta_bound; refines the references as needed.
bool certified_contains(const ApproxResult& r) {
  for (int digits = 40; digits <= 1280; digits *= 2) {
    const Interval approx = r.alpha * zeta_reference(2, digits) + r.beta;
    const Interval ref = zeta_reference(r.s, digits);
    if (ref.lo() >= approx.hi() - r.theta_bound && ref.hi() <= approx.lo() + r.theta_bound) {
      return true;
    }
  }
  return false;
}

}  // namespace

TEST_SUITE("solver") {
  TEST_CASE("constant polynomials give an identity-like system") {
    const PolySpec one = poly({1});
    const TriangularSystem sys = build_system(one, one, one, 5);
    CHECK(sys.diag == std::vector<Rat>{Rat(1), Rat(1), Rat(1)});
    CHECK(sys.delta == Rat(1));
    CHECK(sys.size() == 3);
  }

  TEST_CASE("leading coefficient of the structured families") {
    for (int n = 1; n <= 6; ++n) {
      const TriangularSystem sys = build_system(shifted_legendre(n), binomial_poly(n), poly({1}).padded(n), 4);
      CHECK(sys.diag[0] == Rat(1));
    }
  }

  TEST_CASE("vanishing leading coefficient is singular") {
    CHECK_THROWS_AS(build_system(shifted_legendre(1), binomial_poly(1), poly({0, 1}), 4), SingularSystem);
  }

  TEST_CASE("analytic theta bound") {
    CHECK(theta_bound(1, Rat(1), 3) == Rat(1, 4));
    CHECK(theta_bound(10, Rat(1), 5) == Rat(1, 1048576));
    CHECK(theta_bound(2, Rat(3, 2), 4) == Rat(3, 32));
    CHECK(theta_bound(shifted_legendre(3), binomial_poly(3), poly({2, 0, 0, 1}), 3) == Rat(2, 64));
    CHECK_THROWS_AS(theta_bound(poly({1, 1}), binomial_poly(1), poly({1, 0}), 3), std::invalid_argument);
  }

  TEST_CASE("constant polynomials at s = 3") {
    const PolySpec one = poly({1});
    const TriangularSystem sys = build_system(one, one, one, 3);
    const Rat z3_hi = zeta_reference(3, 10).hi();
    const ApproxResult r = solve_zeta(sys, {z3_hi});
    CHECK(r.alpha == Rat(0));
    CHECK(r.beta == Rat(0));
    CHECK(r.theta_bound >= zeta_reference(3, 10).lo());
  }

  TEST_CASE("back-substitution agrees with the determinant ratio") {
    std::mt19937_64 rng(99);
    int solved = 0;
    for (int trial = 0; trial < 60; ++trial) {
      const auto [p, q, t] = random_triple(rng, 3);
      for (int s = 3; s <= 6; ++s) {
        try {
          const TriangularSystem sys = build_system(p, q, t, s);
          const ApproxResult r = solve_zeta(sys, std::vector<Rat>(static_cast<std::size_t>(sys.size()), Rat(1)));
          const DeterminantSolution d = solve_by_determinants(sys);
          CHECK(r.alpha == d.alpha);
          CHECK(r.beta == d.beta);
          CHECK(r.weights == d.weights);
          Rat prod(1);
          for (const Rat& x : sys.diag) prod *= x;
          CHECK(sys.delta == prod);
          ++solved;
        } catch (const SingularSystem&) {
        }
      }
    }
    CHECK(solved > 100);
  }

  TEST_CASE("determinant") {
    CHECK(determinant({{Rat(2), Rat(1)}, {Rat(4), Rat(3)}}) == Rat(2));
    CHECK(determinant({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}) == Rat(-1));
    CHECK(determinant({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}) == Rat(0));
    CHECK(determinant({}) == Rat(1));
  }

  TEST_CASE("zeta(3) bound at small n") {
    const ApproxResult r1 = approximate_zeta(3, 1, poly({1}));
    CHECK(r1.alpha == Rat(5));
    CHECK(r1.beta == Rat(-7));
    CHECK(r1.theta_bound <= Rat(1, 4));
    for (int n = 1; n <= 12; ++n) {
      const ApproxResult r = approximate_zeta(3, n, poly({1}));
      CHECK(r.theta_bound <= theta_bound(n, Rat(1), 3));
      CHECK(certified_contains(r));
    }
  }

  TEST_CASE("containment for higher s") {
    for (int s = 4; s <= 7; ++s) {
      for (int n : {1, 3, 6, 9}) {
        const ApproxResult r = approximate_zeta(s, n, poly({1}));
        CHECK_MESSAGE(certified_contains(r), "s=" << s << " n=" << n);
      }
    }
    const ApproxResult r = approximate_zeta(4, 4, poly({1, -1}));
    CHECK(certified_contains(r));
  }

  TEST_CASE("certified bounds never exceed the analytic bound") {
    for (int n = 1; n <= 10; ++n) {
      const PolySpec t = poly({2, -1}).padded(n);
      const auto bounds = certified_theta_bounds(shifted_legendre(n), binomial_poly(n), t, 5);
      REQUIRE(bounds.size() == 3);
      for (const Rat& b : bounds) {
        CHECK(b <= theta_bound(n, t.cstar(), 5));
        CHECK(b.sign() >= 0);
      }
    }
  }

  TEST_CASE("theta count must match the rows") {
    const PolySpec one = poly({1});
    const TriangularSystem sys = build_system(one, one, one, 4);
    CHECK_THROWS_AS(solve_zeta(sys, {Rat(1)}), DimensionMismatch);
  }
}
