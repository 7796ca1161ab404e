#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "zetaq/errors.hpp"
#include "zetaq/zeta_series.hpp"

namespace zetaq {
namespace {

// Coefficients u[e] with |sum_r c_r/(k+1+r)| <= sum_e u[e] x^e, x = 1/(k+1).
// order < 0 gives the plain bound (sum |c_r|) x.
std::vector<Rat> majorant(const PolySpec& p, int order) {
  if (order < 0) {
    return {Rat(), p.abs_sum()};
  }
  std::vector<Rat> u(static_cast<std::size_t>(order) + 3);
  for (int j = 0; j <= order; ++j) {
    Rat m;
    for (int r = 0; r <= p.degree(); ++r) {
      m += p[r] * Rat(pow_int(r, static_cast<unsigned long>(j)));
    }
    u[static_cast<std::size_t>(j) + 1] = m.abs();
  }
  Rat rem;
  for (int r = 0; r <= p.degree(); ++r) {
    rem += p[r].abs() * Rat(pow_int(r, static_cast<unsigned long>(order) + 1));
  }
  u[static_cast<std::size_t>(order) + 2] = rem;
  return u;
}

std::vector<Rat> multiply(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// sum_{k>=K} sum_e w[e] (k+1)^-(e+shift) <= sum_e w[e] / ((e+shift-1) K^(e+shift-1))
Rat tail_from_weights(const std::vector<Rat>& w, int shift, std::int64_t K) {
  Rat acc;
  for (std::size_t e = 0; e < w.size(); ++e) {
    if (w[e].is_zero()) {
      continue;
    }
    const int ex = static_cast<int>(e) + shift;
    acc += w[e] / Rat(BigInt(ex - 1) * pow_int(K, static_cast<unsigned long>(ex - 1)));
  }
  return acc;
}

Rat truncated_tail(const PolySpec& p, const PolySpec& q, const PolySpec& t, int s, std::int64_t K) {
  auto orders = [](const PolySpec& x) { return std::min(x.degree() + 1, 6); };
  std::vector<std::vector<Rat>> mp;
  std::vector<std::vector<Rat>> mq;
  std::vector<std::vector<Rat>> mt;
  for (int j = -1; j <= orders(p); ++j) mp.push_back(majorant(p, j));
  for (int j = -1; j <= orders(q); ++j) mq.push_back(majorant(q, j));
  for (int j = -1; j <= orders(t); ++j) mt.push_back(majorant(t, j));

  // The first candidate (all plain) is prod(sum |c|) / ((s-1) K^(s-1)).
  Rat best = tail_from_weights(multiply(multiply(mp[0], mq[0]), mt[0]), s - 3, K);
  for (const auto& a : mp) {
    for (const auto& b : mq) {
      const auto ab = multiply(a, b);
      for (const auto& c : mt) {
        best = min(best, tail_from_weights(multiply(ab, c), s - 3, K));
      }
    }
  }
  return best;
}

Rat inverse_sum(const PolySpec& p, std::int64_t k) {
  Rat acc;
  for (int r = 0; r <= p.degree(); ++r) {
    if (!p[r].is_zero()) {
      acc += p[r] / Rat(k + 1 + r);
    }
  }
  return acc;
}

}  // namespace

Interval eval_truncated(const PolySpec& p, const PolySpec& q, const PolySpec& t, int s, std::int64_t K) {
  if (K < 1) {
    throw std::invalid_argument("eval_truncated: K must be >= 1");
  }
  if (s < 3) {
    throw std::invalid_argument("eval_truncated: s must be >= 3");
  }
  Rat sum;
  for (std::int64_t k = 0; k < K; ++k) {
    Rat term = inverse_sum(p, k);
    if (term.is_zero()) continue;
    term *= inverse_sum(q, k);
    if (term.is_zero()) continue;
    term *= inverse_sum(t, k);
    if (term.is_zero()) continue;
    if (s > 3) {
      term /= Rat(pow_int(k + 1, static_cast<unsigned long>(s - 3)));
    }
    sum += term;
  }
  return Interval::around(sum, truncated_tail(p, q, t, s, K));
}

Rat beta_rat(int a, int b) {
  if (a < 1 || b < 1) {
    throw std::invalid_argument("beta_rat: arguments must be >= 1");
  }
  const auto ua = static_cast<unsigned long>(a);
  const auto ub = static_cast<unsigned long>(b);
  return Rat(factorial(ua - 1) * factorial(ub - 1), factorial(ua + ub - 1));
}

Interval eval_special_series(int n, const PolySpec& t, int s, std::int64_t K) {
  if (n < 1) {
    throw std::invalid_argument("eval_special_series: n must be >= 1");
  }
  if (s < 3) {
    throw std::invalid_argument("eval_special_series: s must be >= 3");
  }
  if (K < 1) {
    throw std::invalid_argument("eval_special_series: K must be >= 1");
  }
  Rat binom(1);                 // C(k, n)
  Rat beta = beta_rat(n + 1, n + 1);  // B(k+1, n+1)
  Rat sum;
  const std::int64_t k_end = n + K;
  for (std::int64_t k = n; k < k_end; ++k) {
    Rat term = inverse_sum(t, k);
    if (!term.is_zero()) {
      term *= binom * beta * beta;
      if (s > 3) {
        term /= Rat(pow_int(k + 1, static_cast<unsigned long>(s - 3)));
      }
      sum += term;
    }
    binom *= Rat(BigInt(k + 1), BigInt(k + 1 - n));
    beta *= Rat(BigInt(k + 1), BigInt(k + n + 2));
  }
  if (n % 2 == 1) {
    sum = -sum;
  }
  const std::int64_t k0 = k_end;
  const Rat tail = t.abs_sum() * beta_rat(static_cast<int>(k0) + 1, n) /
                   Rat(pow_int(k0 + 1, static_cast<unsigned long>(s - 2)) * BigInt(k0 + n + 1));
  return Interval::around(sum, tail);
}

Interval special_series_enclosure(int n, const PolySpec& t, int s, const Rat& max_width,
                                  std::int64_t max_terms) {
  for (std::int64_t K = 16; K <= max_terms; K *= 2) {
    Interval iv = eval_special_series(n, t, s, K);
    if (iv.width() <= max_width) {
      return iv;
    }
  }
  throw PrecisionBudgetExceeded("special series needs more than " + std::to_string(max_terms) +
                                " terms for the requested width");
}

Interval truncated_enclosure(const PolySpec& p, const PolySpec& q, const PolySpec& t, int s,
                             const Rat& max_width, std::int64_t max_terms) {
  for (std::int64_t K = 16; K <= max_terms; K *= 2) {
    Interval iv = eval_truncated(p, q, t, s, K);
    if (iv.width() <= max_width) {
      return iv;
    }
  }
  throw PrecisionBudgetExceeded("truncated series needs more than " + std::to_string(max_terms) +
                                " terms for the requested width");
}

}  // namespace zetaq
