#include <stdexcept>

#include "zetaq/zeta_series.hpp"

namespace zetaq {
namespace {

Rat recip(const BigInt& v) { return Rat(BigInt(1), v); }

BigInt ipow(long base, int e) { return pow_int(base, static_cast<unsigned long>(e)); }

}  // namespace

Lemma2Sides lemma2_sides(Lemma2Identity id, int r, int k, int s) {
  if (r < 1 || k < 0 || s < 1) {
    throw std::invalid_argument("lemma2_sides: need r >= 1, k >= 0, s >= 1");
  }
  const long m = r + k + 1;
  const long k1 = k + 1;
  const int sg = s % 2 == 0 ? 1 : -1;
  Lemma2Sides out;
  switch (id) {
    case Lemma2Identity::Simple:
      out.lhs = recip(ipow(m, 1) * ipow(k1, s));
      for (int j = 1; j <= s; ++j) {
        const Rat t = recip(ipow(r, j) * ipow(k1, s + 1 - j));
        out.rhs += j % 2 == 1 ? t : -t;
      }
      out.rhs += Rat(sg) * recip(ipow(r, s) * m);
      break;
    case Lemma2Identity::Double:
      out.lhs = recip(ipow(m, 2) * ipow(k1, s));
      for (int j = 1; j <= s; ++j) {
        const Rat t = Rat(j) * recip(ipow(r, j + 1) * ipow(k1, s + 1 - j));
        out.rhs += j % 2 == 1 ? t : -t;
      }
      out.rhs += Rat(sg * s) * recip(ipow(r, s + 1) * m);
      out.rhs += Rat(sg) * recip(ipow(r, s) * ipow(m, 2));
      break;
    case Lemma2Identity::Triple:
      out.lhs = recip(ipow(m, 3) * ipow(k1, s));
      for (int j = 1; j <= s; ++j) {
        const Rat t = Rat(j * (j + 1)) * recip(2 * ipow(r, j + 2) * ipow(k1, s + 1 - j));
        out.rhs += j % 2 == 1 ? t : -t;
      }
      out.rhs += Rat(sg * s * (s + 1)) * recip(2 * ipow(r, s + 2) * m);
      out.rhs += Rat(sg * s) * recip(ipow(r, s + 1) * ipow(m, 2));
      out.rhs += Rat(sg) * recip(ipow(r, s) * ipow(m, 3));
      break;
  }
  return out;
}

Lemma2Report lemma2_sweep(int max_r, int max_k, int max_s) {
  Lemma2Report rep;
  for (Lemma2Identity id : {Lemma2Identity::Simple, Lemma2Identity::Double, Lemma2Identity::Triple}) {
    for (int r = 1; r <= max_r; ++r) {
      for (int k = 0; k <= max_k; ++k) {
        for (int s = 1; s <= max_s; ++s) {
          const Lemma2Sides sides = lemma2_sides(id, r, k, s);
          ++rep.checked;
          if (sides.lhs != sides.rhs) {
            if (rep.failed == 0) {
              rep.first_id = id;
              rep.first_r = r;
              rep.first_k = k;
              rep.first_s = s;
            }
            ++rep.failed;
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace zetaq
