#include "zetaq/solver.hpp"

#include <functional>
#include <stdexcept>
#include <string>

#include "zetaq/errors.hpp"
#include "zetaq/zeta_series.hpp"

namespace zetaq {
namespace {

bool lemma3_families(const PolySpec& p, const PolySpec& q) {
  return p.family() == PolyFamily::ShiftedLegendre && q.family() == PolyFamily::Binomial &&
         p.degree() == q.degree() && p.degree() >= 1;
}

// Bound on |I_r| from an enclosure refined until its width is small next to
// the value, or negligible next to `floor`.
Rat magnitude_bound(const std::function<Interval(std::int64_t)>& eval, const Rat& floor) {
  std::int64_t K = 16;
  Interval iv = eval(K);
  for (int step = 0; step < 14; ++step) {
    const Rat w = iv.width();
    if (w * Rat(64) <= iv.midpoint().abs() || w * Rat(BigInt(1) << 64) <= floor) {
      break;
    }
    K *= 2;
    iv = eval(K);
  }
  return iv.magnitude();
}

}  // namespace

Rat TriangularSystem::entry(int row, int col) const {
  return rows.at(static_cast<std::size_t>(row)).combo.coeff(s - col);
}

Rat TriangularSystem::rhs_zeta2(int row) const { return -rows.at(static_cast<std::size_t>(row)).combo.coeff(2); }

Rat TriangularSystem::rhs_constant(int row) const {
  return -rows.at(static_cast<std::size_t>(row)).combo.constant();
}

TriangularSystem build_system(const PolySpec& p, const PolySpec& q, const PolySpec& t, int s,
                              const RowConventions& conv) {
  if (s < 3) {
    throw std::invalid_argument("build_system: s must be >= 3");
  }
  TriangularSystem sys;
  sys.s = s;
  sys.n = p.degree();
  for (int r = s; r >= 3; --r) {
    sys.rows.push_back(theorem_row(p, q, t, r, conv));
  }
  const int m = sys.size();
  sys.delta = Rat(1);
  for (int v = 0; v < m; ++v) {
    Rat d = sys.entry(v, v);
    if (d.is_zero()) {
      throw SingularSystem("singular system: leading coefficient of zeta(" + std::to_string(s - v) +
                           ") in row I_" + std::to_string(s - v) + " is zero");
    }
    sys.delta *= d;
    sys.diag.push_back(std::move(d));
  }
  for (int v = 0; v < m; ++v) {
    std::vector<std::vector<Rat>> minor;
    for (int i = 0; i < m; ++i) {
      if (i == v) continue;
      std::vector<Rat> line;
      for (int j = 1; j < m; ++j) {
        line.push_back(sys.entry(i, j));
      }
      minor.push_back(std::move(line));
    }
    Rat c = minor.empty() ? Rat(1) : determinant(std::move(minor));
    sys.complements.push_back(v % 2 == 0 ? c : -c);
  }
  return sys;
}

ApproxResult solve_zeta(const TriangularSystem& sys, const std::vector<Rat>& theta_bounds) {
  const int m = sys.size();
  if (static_cast<int>(theta_bounds.size()) != m) {
    throw DimensionMismatch("expected " + std::to_string(m) + " theta bounds, got " +
                            std::to_string(theta_bounds.size()));
  }
  // x[v] = alpha[v] zeta(2) + beta[v] + sum_u gamma[v][u] theta_u
  std::vector<Rat> alpha(static_cast<std::size_t>(m));
  std::vector<Rat> beta(static_cast<std::size_t>(m));
  std::vector<std::vector<Rat>> gamma(static_cast<std::size_t>(m), std::vector<Rat>(static_cast<std::size_t>(m)));
  for (int v = m - 1; v >= 0; --v) {
    const auto vi = static_cast<std::size_t>(v);
    Rat a = sys.rhs_zeta2(v);
    Rat b = sys.rhs_constant(v);
    std::vector<Rat> g(static_cast<std::size_t>(m));
    g[vi] = Rat(1);
    for (int u = v + 1; u < m; ++u) {
      const Rat c = sys.entry(v, u);
      if (c.is_zero()) continue;
      const auto ui = static_cast<std::size_t>(u);
      a -= c * alpha[ui];
      b -= c * beta[ui];
      for (int w = u; w < m; ++w) {
        g[static_cast<std::size_t>(w)] -= c * gamma[ui][static_cast<std::size_t>(w)];
      }
    }
    const Rat& d = sys.diag[vi];
    alpha[vi] = a / d;
    beta[vi] = b / d;
    for (auto& x : g) x /= d;
    gamma[vi] = std::move(g);
  }

  ApproxResult res;
  res.s = sys.s;
  res.n = sys.n;
  res.alpha = alpha[0];
  res.beta = beta[0];
  res.weights = gamma[0];
  res.row_bounds = theta_bounds;
  for (int v = 0; v < m; ++v) {
    const auto vi = static_cast<std::size_t>(v);
    if (theta_bounds[vi].sign() < 0) {
      throw std::invalid_argument("theta bounds must be >= 0");
    }
    res.theta_bound += res.weights[vi].abs() * theta_bounds[vi];
  }
  return res;
}

Rat determinant(std::vector<std::vector<Rat>> m) {
  const std::size_t k = m.size();
  for (const auto& row : m) {
    if (row.size() != k) {
      throw DimensionMismatch("determinant of a non-square matrix");
    }
  }
  Rat det(1);
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    while (piv < k && m[piv][c].is_zero()) ++piv;
    if (piv == k) return Rat();
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < k; ++r) {
      if (m[r][c].is_zero()) continue;
      const Rat f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < k; ++j) {
        m[r][j] -= f * m[c][j];
      }
    }
  }
  return det;
}

DeterminantSolution solve_by_determinants(const TriangularSystem& sys) {
  const int m = sys.size();
  std::vector<std::vector<Rat>> full(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      full[static_cast<std::size_t>(i)].push_back(sys.entry(i, j));
    }
  }
  const Rat delta = determinant(full);
  if (delta.is_zero()) {
    throw SingularSystem("singular system: zero determinant");
  }
  DeterminantSolution out;
  for (int v = 0; v < m; ++v) {
    const Rat& c = sys.complements[static_cast<std::size_t>(v)];
    out.alpha += c * sys.rhs_zeta2(v);
    out.beta += c * sys.rhs_constant(v);
    out.weights.push_back(c / delta);
  }
  out.alpha /= delta;
  out.beta /= delta;
  return out;
}

Rat theta_bound(int n, const Rat& cstar, int s) {
  if (n < 1) {
    throw std::invalid_argument("theta_bound: n must be >= 1");
  }
  if (s < 3) {
    throw std::invalid_argument("theta_bound: s must be >= 3");
  }
  if (cstar.sign() < 0) {
    throw std::invalid_argument("theta_bound: c* must be >= 0");
  }
  return cstar / Rat(BigInt(1) << (2 * n));
}

Rat theta_bound(const PolySpec& p, const PolySpec& q, const PolySpec& t, int s) {
  if (!lemma3_families(p, q)) {
    throw std::invalid_argument(std::string("theta_bound needs shifted-legendre and binomial polynomials, got ") +
                                to_string(p.family()) + " and " + to_string(q.family()));
  }
  return theta_bound(p.degree(), t.cstar(), s);
}

std::vector<Rat> certified_theta_bounds(const PolySpec& p, const PolySpec& q, const PolySpec& t, int s) {
  std::vector<Rat> out;
  for (int r = s; r >= 3; --r) {
    Rat b;
    if (lemma3_families(p, q)) {
      const int n = p.degree();
      const Rat analytic = theta_bound(n, t.cstar(), r);
      b = magnitude_bound([&](std::int64_t K) { return eval_special_series(n, t, r, K); }, analytic);
      b = min(b, analytic);
    } else {
      const Rat crude = p.abs_sum() * q.abs_sum() * t.abs_sum();
      b = magnitude_bound([&](std::int64_t K) { return eval_truncated(p, q, t, r, K); }, crude);
    }
    out.push_back(b.is_zero() ? b : round_up_short(b, 32));
  }
  return out;
}

ApproxResult approximate_zeta(int s, int n, const PolySpec& t, const RowConventions& conv) {
  if (n < 1) {
    throw std::invalid_argument("approximate_zeta: n must be >= 1");
  }
  PolySpec p = shifted_legendre(n);
  PolySpec q = binomial_poly(n);
  PolySpec tt = t;
  align_degrees(p, q, tt);
  const TriangularSystem sys = build_system(p, q, tt, s, conv);
  ApproxResult res = solve_zeta(sys, certified_theta_bounds(p, q, tt, s));
  res.cstar = tt.cstar();
  return res;
}

}  // namespace zetaq
