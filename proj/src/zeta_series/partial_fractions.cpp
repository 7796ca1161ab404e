#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "zetaq/errors.hpp"
#include "zetaq/harmonic.hpp"
#include "zetaq/zeta_series.hpp"

namespace zetaq {

ZetaCombination partial_fraction_sum(int r1, int r2, int r3, int s) {
  if (r1 < 0 || r2 < 0 || r3 < 0) {
    throw std::invalid_argument("partial_fraction_sum: shifts must be >= 0");
  }
  if (s < 3) {
    throw std::invalid_argument("partial_fraction_sum: s must be >= 3");
  }
  // Pole at m = -p with multiplicity e.
  std::map<int, int> poles;
  if (s > 3) {
    poles[0] = s - 3;
  }
  for (int r : {r1, r2, r3}) {
    ++poles[r];
  }

  ZetaCombination out;
  Rat simple;
  for (const auto& [p, e] : poles) {
    // Taylor coefficients in d = m + p of prod_{q != p} (d + (q - p))^(-e_q).
    std::vector<Rat> ser(static_cast<std::size_t>(e));
    ser[0] = Rat(1);
    for (const auto& [q, eq] : poles) {
      if (q == p) {
        continue;
      }
      const long delta = q - p;
      // (d + delta)^(-E) = sum_t (-1)^t C(E+t-1, t) delta^(-E-t) d^t
      std::vector<Rat> f(static_cast<std::size_t>(e));
      for (int t = 0; t < e; ++t) {
        Rat v(binomial(static_cast<unsigned long>(eq + t - 1), static_cast<unsigned long>(t)));
        v *= pow(Rat(delta), -(eq + t));
        f[static_cast<std::size_t>(t)] = t % 2 == 0 ? v : -v;
      }
      std::vector<Rat> next(static_cast<std::size_t>(e));
      for (int i = 0; i < e; ++i) {
        if (ser[static_cast<std::size_t>(i)].is_zero()) {
          continue;
        }
        for (int j = 0; i + j < e; ++j) {
          next[static_cast<std::size_t>(i + j)] += ser[static_cast<std::size_t>(i)] * f[static_cast<std::size_t>(j)];
        }
      }
      ser = std::move(next);
    }
    for (int j = 1; j <= e; ++j) {
      const Rat& c = ser[static_cast<std::size_t>(e - j)];  // coefficient of (m+p)^-j
      if (c.is_zero()) {
        continue;
      }
      if (j >= 2) {
        out.add_term(j, c);
        out.add_constant(-c * harmonic(p, j));
      } else {
        simple += c;
        out.add_constant(-c * harmonic(p, 1));
      }
    }
  }
  if (!simple.is_zero()) {
    throw DivergentSeries("simple-pole residues sum to " + simple.str());
  }
  return out;
}

ZetaCombination decompose_integral(const PolySpec& p, const PolySpec& q, const PolySpec& t, int s) {
  if (s < 3) {
    throw std::invalid_argument("decompose_integral: s must be >= 3");
  }
  std::map<std::tuple<int, int, int>, ZetaCombination> memo;
  ZetaCombination out;
  for (int r1 = 0; r1 <= p.degree(); ++r1) {
    if (p[r1].is_zero()) {
      continue;
    }
    for (int r2 = 0; r2 <= q.degree(); ++r2) {
      if (q[r2].is_zero()) {
        continue;
      }
      const Rat ab = p[r1] * q[r2];
      for (int r3 = 0; r3 <= t.degree(); ++r3) {
        if (t[r3].is_zero()) {
          continue;
        }
        int x = r1;
        int y = r2;
        int z = r3;
        if (x > y) std::swap(x, y);
        if (y > z) std::swap(y, z);
        if (x > y) std::swap(x, y);
        auto key = std::make_tuple(x, y, z);
        auto it = memo.find(key);
        if (it == memo.end()) {
          it = memo.emplace(key, partial_fraction_sum(x, y, z, s)).first;
        }
        out.add_scaled(it->second, ab * t[r3]);
      }
    }
  }
  return out;
}

}  // namespace zetaq
