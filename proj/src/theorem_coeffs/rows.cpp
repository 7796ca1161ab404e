#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "zetaq/errors.hpp"
#include "zetaq/harmonic.hpp"
#include "zetaq/theorem_coeffs.hpp"

namespace zetaq {
namespace {

// Shared data for one polynomial triple.
class Ctx {
 public:
  Ctx(const PolySpec& p, const PolySpec& q, const PolySpec& t)
      : n_(p.degree()), a_(p.coeffs()), b_(q.coeffs()), c_(t.coeffs()), h_(std::max(n_, 0), 3) {
    if (q.degree() != n_ || t.degree() != n_) {
      throw DimensionMismatch("polynomial degrees differ: " + std::to_string(p.degree()) + ", " +
                              std::to_string(q.degree()) + ", " + std::to_string(t.degree()));
    }
  }

  int n() const { return n_; }

  Rat S(int m, int v, int l) const { return a_[m] * b_[v] * c_[l] + b_[m] * c_[v] * a_[l] + c_[m] * a_[v] * b_[l]; }
  Rat abc(int r) const { return a_[r] * b_[r] * c_[r]; }
  const Rat& H(int k, int m = 1) const { return h_.at(k, m); }

 private:
  int n_;
  const std::vector<Rat>& a_;
  const std::vector<Rat>& b_;
  const std::vector<Rat>& c_;
  HarmonicTable h_;
};

Rat frac(long num, long den) { return Rat(BigInt(num), BigInt(den)); }

// x^-e, with 0^-e taken as 0 for e > 0.
Rat ip(int x, int e) {
  if (e == 0) return Rat(1);
  if (x == 0) return Rat();
  return inv_pow(x, e);
}

Rat sgn(int e) { return Rat(e % 2 == 0 ? 1 : -1); }

// Coefficient of zeta(s-j) from the generic j-formula, 3 <= j.
Rat generic_coeff(const Ctx& x, int j, TranscriptionVariant variant) {
  const int n = x.n();
  Rat acc;
  for (int r = 1; r <= n; ++r) {
    acc += (x.S(0, 0, r) - Rat(j - 1) * x.S(0, r, r) + frac((j - 2) * (j - 1), 2) * x.abc(r)) * inv_pow(r, j);
  }
  for (int r = 2; r <= n; ++r) {
    for (int l = 1; l < r; ++l) {
      const Rat sllr = x.S(l, l, r);
      const Rat srrl = x.S(r, r, l);
      acc += (sllr - srrl) * frac(1, (r - l) * (r - l)) * (ip(r, j - 2) - ip(l, j - 2));
      acc += frac(j - 2, r - l) * (sllr * ip(l, j - 1) - srrl * ip(r, j - 1));
      for (int i = 0; i < l; ++i) {
        const Rat w = x.S(i, r, l) + x.S(i, l, r);
        if (w.is_zero()) continue;
        const Rat di = frac(1, (i - r) * (i - l));
        const Rat dr = frac(1, (r - i) * (r - l));
        const Rat dl = frac(1, (l - i) * (l - r));
        if (variant == TranscriptionVariant::RegroupedNoH) {
          acc += w * (ip(i, j - 2) * di + ip(r, j - 2) * dr + ip(l, j - 2) * dl);
        } else {
          acc -= w * (x.H(i) * ip(i, j - 2) * di + x.H(r) * ip(r, j - 2) * dr + x.H(l) * ip(l, j - 2) * dl);
        }
      }
    }
  }
  return sgn(j - 1) * acc;
}

}  // namespace

const char* to_string(TranscriptionVariant v) {
  return v == TranscriptionVariant::RegroupedNoH ? "no-h" : "with-h";
}

const char* to_string(LowOrderRoute r) { return r == LowOrderRoute::SeparateBlocks ? "separate" : "generic"; }

std::string to_string(const RowConventions& c) {
  return std::string(to_string(c.variant)) + "/" + to_string(c.low_order);
}

std::vector<RowConventions> all_conventions() {
  return {
      {TranscriptionVariant::RegroupedNoH, LowOrderRoute::SeparateBlocks},
      {TranscriptionVariant::RegroupedWithH, LowOrderRoute::SeparateBlocks},
      {TranscriptionVariant::RegroupedNoH, LowOrderRoute::GenericFormula},
      {TranscriptionVariant::RegroupedWithH, LowOrderRoute::GenericFormula},
  };
}

Rat s_sym(const std::vector<Rat>& a, const std::vector<Rat>& b, const std::vector<Rat>& c, int mu, int nu,
          int lam) {
  auto at = [](const std::vector<Rat>& v, int i) -> const Rat& {
    if (i < 0 || static_cast<std::size_t>(i) >= v.size()) {
      throw std::out_of_range("s_sym: index " + std::to_string(i) + " out of range");
    }
    return v[static_cast<std::size_t>(i)];
  };
  return at(a, mu) * at(b, nu) * at(c, lam) + at(b, mu) * at(c, nu) * at(a, lam) +
         at(c, mu) * at(a, nu) * at(b, lam);
}

CoefficientRow row_zeta3(const PolySpec& p, const PolySpec& q, const PolySpec& t) {
  const Ctx x(p, q, t);
  const int n = x.n();
  Rat a3;
  Rat a2;
  Rat a0;
  for (int r = 0; r <= n; ++r) {
    a3 += x.abc(r);
  }
  for (int r = 1; r <= n; ++r) {
    a0 += x.abc(r) * x.H(r, 3);
    for (int l = 0; l < r; ++l) {
      const Rat srrl = x.S(r, r, l);
      const Rat sllr = x.S(l, l, r);
      a2 += (srrl - sllr) * frac(1, r - l);
      a0 -= (srrl * x.H(r, 2) - sllr * x.H(l, 2)) * frac(1, r - l);
      a0 -= (srrl - sllr) * (x.H(r) - x.H(l)) * frac(1, (r - l) * (r - l));
    }
  }
  for (int r = 2; r <= n; ++r) {
    for (int l = 1; l < r; ++l) {
      for (int i = 0; i < l; ++i) {
        const Rat w = x.S(i, r, l) + x.S(i, l, r);
        if (w.is_zero()) continue;
        a0 += w * (x.H(i) * frac(1, (i - r) * (i - l)) + x.H(r) * frac(1, (r - i) * (r - l)) +
                   x.H(l) * frac(1, (l - i) * (l - r)));
      }
    }
  }
  CoefficientRow row{3, {}};
  row.combo.add_term(3, a3);
  row.combo.add_term(2, -a2);
  row.combo.add_constant(-a0);
  return row;
}

CoefficientRow row_zeta4(const PolySpec& p, const PolySpec& q, const PolySpec& t) {
  const Ctx x(p, q, t);
  const int n = x.n();
  Rat a3;
  Rat a2;
  Rat a0;
  for (int r = 1; r <= n; ++r) {
    const Rat abc = x.abc(r);
    const Rat s00r = x.S(0, 0, r);
    const Rat s0rr = x.S(0, r, r);
    a3 += (s00r - abc) * frac(1, r);
    a2 += (abc + s00r - Rat(2) * s0rr) * inv_pow(r, 2);
    a0 += (Rat(2) * s0rr - abc - s00r) * inv_pow(r, 3) * x.H(r) + (s0rr - abc) * inv_pow(r, 2) * x.H(r, 2) -
          abc * frac(1, r) * x.H(r, 3);
  }
  for (int r = 2; r <= n; ++r) {
    for (int l = 1; l < r; ++l) {
      const Rat srrl = x.S(r, r, l);
      const Rat sllr = x.S(l, l, r);
      a2 += (x.S(0, r, l) + x.S(0, l, r)) * frac(1, r - l) * (frac(1, r) - frac(1, l)) -
            frac(1, r - l) * (srrl * frac(1, r) - sllr * frac(1, l));
      a0 += (srrl - sllr) * frac(1, (r - l) * (r - l)) * (x.H(r) * frac(1, r) - x.H(l) * frac(1, l));
      a0 += frac(1, r - l) * (srrl * x.H(r) * inv_pow(r, 2) - sllr * x.H(l) * inv_pow(l, 2));
      a0 += frac(1, r - l) * (srrl * x.H(r, 2) * frac(1, r) - sllr * x.H(l, 2) * frac(1, l));
      for (int i = 0; i < l; ++i) {
        const Rat w = x.S(i, r, l) + x.S(i, l, r);
        if (w.is_zero()) continue;
        a0 -= w * (x.H(i) * ip(i, 1) * frac(1, (i - r) * (i - l)) + x.H(r) * frac(1, r * (r - i) * (r - l)) +
                   x.H(l) * frac(1, l * (l - i) * (l - r)));
      }
    }
  }
  CoefficientRow row{4, {}};
  row.combo.add_term(4, x.abc(0));
  row.combo.add_term(3, a3);
  row.combo.add_term(2, -a2);
  row.combo.add_constant(-a0);
  return row;
}

CoefficientRow row_general(const PolySpec& p, const PolySpec& q, const PolySpec& t, int s,
                           const RowConventions& conv) {
  if (s < 5) {
    throw std::invalid_argument("row_general: order must be >= 5, got " + std::to_string(s));
  }
  const Ctx x(p, q, t);
  const int n = x.n();
  CoefficientRow row{s, {}};
  ZetaCombination& z = row.combo;

  z.add_term(s, x.abc(0));
  Rat c1;
  Rat c2;
  for (int r = 1; r <= n; ++r) {
    c1 += x.S(0, 0, r) * frac(1, r);
    c2 += (x.S(0, r, r) - x.S(0, 0, r)) * inv_pow(r, 2);
  }
  for (int r = 2; r <= n; ++r) {
    for (int l = 1; l < r; ++l) {
      c2 -= (x.S(0, l, r) + x.S(0, r, l)) * frac(1, r - l) * (frac(1, r) - frac(1, l));
    }
  }
  z.add_term(s - 1, c1);

  // Coefficients of zeta(s-2) down to zeta(2), before the low-order blocks.
  std::map<int, Rat> mid;
  mid[s - 2] = c2;
  for (int j = 3; j <= s - 2; ++j) {
    mid[s - j] = generic_coeff(x, j, conv.variant);
  }

  if (conv.low_order == LowOrderRoute::SeparateBlocks) {
    Rat e3;
    Rat e2;
    for (int r = 1; r <= n; ++r) {
      e3 += x.abc(r) * inv_pow(r, s - 3);
      e2 += (Rat(s - 3) * x.abc(r) - x.S(0, r, r)) * inv_pow(r, s - 2);
    }
    for (int r = 2; r <= n; ++r) {
      for (int l = 1; l < r; ++l) {
        e2 += frac(1, r - l) * (x.S(l, l, r) * inv_pow(l, s - 3) - x.S(r, r, l) * inv_pow(r, s - 3));
      }
    }
    mid[3] += sgn(s - 3) * e3;
    mid[2] += sgn(s - 3) * e2;
  } else {
    mid[2] = -mid[2];
  }
  for (const auto& [order, v] : mid) {
    z.add_term(order, v);
  }

  // Constant term: -A with A = (-1)^(s-1) (-T0 + T1 + T2 + P1 + P2 + P3 + Tr).
  Rat acc;
  for (int r = 1; r <= n; ++r) {
    const Rat abc = x.abc(r);
    const Rat s0rr = x.S(0, r, r);
    acc -= (-x.S(0, 0, r) + Rat(s - 2) * s0rr - frac((s - 2) * (s - 3), 2) * abc) * inv_pow(r, s - 1) * x.H(r);
    acc += (Rat(s - 3) * abc - s0rr) * inv_pow(r, s - 2) * x.H(r, 2);
    acc += abc * inv_pow(r, s - 3) * x.H(r, 3);
  }
  for (int r = 2; r <= n; ++r) {
    for (int l = 1; l < r; ++l) {
      const Rat srrl = x.S(r, r, l);
      const Rat sllr = x.S(l, l, r);
      acc += frac(1, r - l) * (x.H(l, 2) * sllr * inv_pow(l, s - 3) - x.H(r, 2) * srrl * inv_pow(r, s - 3));
      acc += frac(s - 3, r - l) * (x.H(l) * sllr * inv_pow(l, s - 2) - x.H(r) * srrl * inv_pow(r, s - 2));
      acc += (sllr - srrl) * frac(1, (r - l) * (r - l)) * (x.H(r) * inv_pow(r, s - 3) - x.H(l) * inv_pow(l, s - 3));
      for (int i = 0; i < l; ++i) {
        const Rat w = x.S(i, r, l) + x.S(i, l, r);
        if (w.is_zero()) continue;
        acc += w * (x.H(i) * ip(i, s - 3) * frac(1, (i - r) * (i - l)) +
                    x.H(r) * inv_pow(r, s - 3) * frac(1, (r - i) * (r - l)) +
                    x.H(l) * inv_pow(l, s - 3) * frac(1, (l - i) * (l - r)));
      }
    }
  }
  z.add_constant(-(sgn(s - 1) * acc));
  return row;
}

CoefficientRow theorem_row(const PolySpec& p, const PolySpec& q, const PolySpec& t, int r,
                           const RowConventions& conv) {
  if (r == 3) return row_zeta3(p, q, t);
  if (r == 4) return row_zeta4(p, q, t);
  if (r >= 5) return row_general(p, q, t, r, conv);
  throw std::invalid_argument("row order must be >= 3, got " + std::to_string(r));
}

}  // namespace zetaq
