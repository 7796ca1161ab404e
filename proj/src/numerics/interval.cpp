#include "zetaq/interval.hpp"

#include <ostream>
#include <stdexcept>

namespace zetaq {

Interval::Interval(Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) {
    throw std::invalid_argument("Interval: lo > hi");
  }
}

Interval Interval::around(const Rat& center, const Rat& radius) {
  if (radius.sign() < 0) {
    throw std::invalid_argument("Interval: negative radius");
  }
  return Interval(center - radius, center + radius);
}

Rat Interval::magnitude() const { return max(lo_.abs(), hi_.abs()); }

Interval Interval::widened(const Rat& r) const {
  if (r.sign() < 0) {
    throw std::invalid_argument("Interval: negative widening");
  }
  return Interval(lo_ - r, hi_ + r);
}

Interval Interval::rounded_outward(unsigned long bits) const {
  return Interval(round_down_dyadic(lo_, bits), round_up_dyadic(hi_, bits));
}

Interval operator+(const Interval& a, const Interval& b) { return Interval(a.lo_ + b.lo_, a.hi_ + b.hi_); }

Interval operator-(const Interval& a, const Interval& b) { return Interval(a.lo_ - b.hi_, a.hi_ - b.lo_); }

Interval operator+(const Interval& a, const Rat& b) { return Interval(a.lo_ + b, a.hi_ + b); }

Interval operator*(const Rat& c, const Interval& a) {
  if (c.sign() >= 0) {
    return Interval(c * a.lo_, c * a.hi_);
  }
  return Interval(c * a.hi_, c * a.lo_);
}

Interval operator-(const Interval& a) { return Interval(-a.hi_, -a.lo_); }

std::ostream& operator<<(std::ostream& os, const Interval& iv) {
  return os << "[" << iv.lo_ << ", " << iv.hi_ << "]";
}

}  // namespace zetaq
