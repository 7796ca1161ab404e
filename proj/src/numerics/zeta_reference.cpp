#include "zetaq/zeta_reference.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "zetaq/errors.hpp"

namespace zetaq {
namespace {

BigInt pow2(unsigned long bits) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, bits);
  return r;
}

BigInt pow10(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// Rising factorial (x)_n = x (x+1) ... (x+n-1).
BigInt rising(long x, int n) {
  BigInt r = 1;
  for (int i = 0; i < n; ++i) {
    r *= x + i;
  }
  return r;
}

// Euler-Maclaurin remainder bound after M correction terms.
Rat em_remainder(int p, int M, long N) {
  const BigInt num = BigInt(4) * rising(p, 2 * M);
  const BigInt den =
      pow_int(6, static_cast<unsigned long>(2 * M)) * (p + 2 * M - 1) *
      pow_int(N, static_cast<unsigned long>(p + 2 * M - 1));
  return Rat(num, den);
}

void check_budget(int digits, int budget) {
  if (digits > budget) {
    throw PrecisionBudgetExceeded("requested " + std::to_string(digits) +
                                  " digits exceeds the working-precision budget of " +
                                  std::to_string(budget));
  }
}

// Rounds x * 10^digits to an integer, ties to even.
BigInt round_half_even_scaled(const Rat& x, int digits) {
  const Rat scaled = x * Rat(pow10(static_cast<unsigned long>(digits)));
  BigInt q = scaled.floor();
  const Rat frac = scaled - Rat(q);
  const Rat half(1, 2);
  if (frac > half || (frac == half && mpz_odd_p(q.get_mpz_t()) != 0)) {
    q += 1;
  }
  return q;
}

std::string format_fixed(const BigInt& q, int digits) {
  const bool negative = q < 0;
  std::string s = BigInt(::abs(q)).get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) {
      s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    }
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  return (negative ? "-" : "") + s;
}

}  // namespace

Rat bernoulli(int k) {
  if (k < 0) {
    throw std::invalid_argument("bernoulli: negative index");
  }
  static std::mutex mu;
  static std::vector<Rat> cache{Rat(1)};
  std::lock_guard<std::mutex> lock(mu);
  // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
  while (static_cast<int>(cache.size()) <= k) {
    const int m = static_cast<int>(cache.size());
    Rat acc;
    if (m % 2 == 1 && m > 1) {
      cache.emplace_back(0);
      continue;
    }
    for (int j = 0; j < m; ++j) {
      if (cache[static_cast<std::size_t>(j)].is_zero()) {
        continue;
      }
      acc += Rat(binomial(static_cast<unsigned long>(m + 1), static_cast<unsigned long>(j))) *
             cache[static_cast<std::size_t>(j)];
    }
    cache.push_back(-acc / Rat(m + 1));
  }
  return cache[static_cast<std::size_t>(k)];
}

Interval zeta_reference(int p, int digits, int budget) {
  if (p < 2) {
    throw std::invalid_argument("zeta_reference: order must be >= 2");
  }
  if (digits < 1) {
    throw std::invalid_argument("zeta_reference: digits must be >= 1");
  }
  check_budget(digits, budget);

  const Rat eps(BigInt(1), pow10(static_cast<unsigned long>(digits)));
  long N = digits + 10;
  int M = 1;
  for (;;) {
    if (em_remainder(p, M, N) * Rat(16) <= eps) {
      break;
    }
    ++M;
    if (M > N) {
      // Past the smallest term; restart with more explicit terms.
      N *= 2;
      M = 1;
    }
  }

  const auto bits = static_cast<unsigned long>(
      std::ceil(digits * std::log2(10.0) + std::log2(16.0 * static_cast<double>(N + 1)))) + 2;
  const BigInt scale = pow2(bits);

  BigInt lo_sum = 0;
  BigInt hi_sum = 0;
  BigInt q;
  for (long k = 1; k < N; ++k) {
    const BigInt kp = pow_int(k, static_cast<unsigned long>(p));
    mpz_fdiv_q(q.get_mpz_t(), scale.get_mpz_t(), kp.get_mpz_t());
    lo_sum += q;
    mpz_cdiv_q(q.get_mpz_t(), scale.get_mpz_t(), kp.get_mpz_t());
    hi_sum += q;
  }

  Rat tail = Rat(BigInt(1), pow_int(N, static_cast<unsigned long>(p - 1)) * (p - 1)) +
             Rat(BigInt(1), pow_int(N, static_cast<unsigned long>(p)) * 2);
  for (int j = 1; j <= M; ++j) {
    tail += bernoulli(2 * j) / Rat(factorial(static_cast<unsigned long>(2 * j))) *
            Rat(rising(p, 2 * j - 1)) *
            Rat(BigInt(1), pow_int(N, static_cast<unsigned long>(p + 2 * j - 1)));
  }
  const Rat rem = em_remainder(p, M, N);

  const Rat lo = Rat(lo_sum, scale) + tail - rem;
  const Rat hi = Rat(hi_sum, scale) + tail + rem;
  // Width of [lo, hi] is below eps/4. Snapping outward to the grid g = eps/8
  // with one extra cell of margin keeps the result under eps wide and makes
  // enclosures for increasing digits nested: a finer one is narrower than g.
  const Rat g = eps / Rat(8);
  return Interval(Rat((lo / g).floor() - 1) * g, Rat((hi / g).ceil() + 1) * g);
}

std::string render_rational(const Rat& x, int digits) {
  if (digits < 0) {
    throw std::invalid_argument("render_rational: digits must be >= 0");
  }
  return format_fixed(round_half_even_scaled(x, digits), digits);
}

std::string render_decimal(const Rat& alpha, const Rat& beta, int digits, int budget) {
  if (digits < 1) {
    throw std::invalid_argument("render_decimal: digits must be >= 1");
  }
  if (alpha.is_zero()) {
    return render_rational(beta, digits);
  }
  // alpha * zeta(2) + beta is irrational, so refinement separates it from
  // every rounding boundary eventually.
  int work = digits + 10;
  for (;;) {
    check_budget(work, budget);
    const Interval value = alpha * zeta_reference(2, work, budget) + beta;
    const BigInt lo = round_half_even_scaled(value.lo(), digits);
    const BigInt hi = round_half_even_scaled(value.hi(), digits);
    if (lo == hi) {
      return format_fixed(lo, digits);
    }
    work = std::min(budget + 1, work * 2);
  }
}

std::string render_scientific_upper(const Rat& x, int significant) {
  if (significant < 1) {
    throw std::invalid_argument("render_scientific_upper: need >= 1 significant digit");
  }
  const Rat a = x.abs();
  if (a.is_zero()) {
    return "0";
  }
  const long bits = static_cast<long>(mpz_sizeinbase(a.raw().get_num_mpz_t(), 2)) -
                    static_cast<long>(mpz_sizeinbase(a.raw().get_den_mpz_t(), 2));
  long e = static_cast<long>(std::floor(static_cast<double>(bits) * std::log10(2.0)));
  auto ten_pow = [](long k) {
    return k >= 0 ? Rat(pow10(static_cast<unsigned long>(k)))
                  : Rat(BigInt(1), pow10(static_cast<unsigned long>(-k)));
  };
  while (ten_pow(e) > a) {
    --e;
  }
  while (ten_pow(e + 1) <= a) {
    ++e;
  }
  BigInt m = (a * ten_pow(significant - 1 - e)).ceil();
  if (m == pow10(static_cast<unsigned long>(significant))) {
    m /= 10;
    ++e;
  }
  std::string digits = m.get_str();
  std::string mant = digits.substr(0, 1);
  if (digits.size() > 1) {
    mant += "." + digits.substr(1);
  }
  char exp[32];
  std::snprintf(exp, sizeof(exp), "e%c%02ld", e < 0 ? '-' : '+', e < 0 ? -e : e);
  return mant + exp;
}

}  // namespace zetaq
