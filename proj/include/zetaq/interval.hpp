#pragma once

#include <iosfwd>

#include "zetaq/rat.hpp"

namespace zetaq {

/// Closed rational enclosure [lo, hi] of a real value.
class Interval {
 public:
  Interval() = default;
  explicit Interval(const Rat& point) : lo_(point), hi_(point) {}
  /// Throws std::invalid_argument unless lo <= hi.
  Interval(Rat lo, Rat hi);

  /// [center - radius, center + radius]; radius must be >= 0.
  static Interval around(const Rat& center, const Rat& radius);

  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }

  Rat width() const { return hi_ - lo_; }
  Rat midpoint() const { return (lo_ + hi_) / Rat(2); }
  /// max(|lo|, |hi|): certified upper bound on the magnitude of the value.
  Rat magnitude() const;

  bool contains(const Rat& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool intersects(const Interval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }

  /// True when every point is strictly negative / positive.
  bool is_negative() const { return hi_.sign() < 0; }
  bool is_positive() const { return lo_.sign() > 0; }

  /// Widens both ends by r >= 0.
  Interval widened(const Rat& r) const;

  /// Outward rounding of both ends to multiples of 2^-bits.
  Interval rounded_outward(unsigned long bits) const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator+(const Interval& a, const Rat& b);
  friend Interval operator*(const Rat& c, const Interval& a);
  friend Interval operator-(const Interval& a);
  friend bool operator==(const Interval& a, const Interval& b) = default;

  friend std::ostream& operator<<(std::ostream& os, const Interval& iv);

 private:
  Rat lo_;
  Rat hi_;
};

}  // namespace zetaq
