#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace zetaq {

using BigInt = mpz_class;

/// Exact rational number in canonical form: denominator > 0 and
/// gcd(|numerator|, denominator) = 1. All arithmetic is exact.
class Rat {
 public:
  Rat() = default;

  template <std::signed_integral I>
  Rat(I v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral U>
  Rat(U v) : v_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)

  explicit Rat(const BigInt& n) : v_(n) {}
  Rat(const BigInt& num, const BigInt& den);

  /// Parses "p/q" or "p" (optional leading sign, decimal digits only).
  static Rat parse(std::string_view text);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rat abs() const;
  Rat inv() const;

  /// Largest integer <= value.
  BigInt floor() const;
  /// Smallest integer >= value.
  BigInt ceil() const;

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  /// Nearest double; diagnostics only, never used in certified paths.
  double to_double() const { return v_.get_d(); }

  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a);

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

/// x^e for any integer e (e < 0 requires x != 0).
Rat pow(const Rat& x, int e);

/// 1 / k^e for positive k.
Rat inv_pow(long k, int e);

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);
BigInt pow_int(long base, unsigned long e);

Rat min(const Rat& a, const Rat& b);
Rat max(const Rat& a, const Rat& b);

/// Smallest m / 2^bits >= x.
Rat round_up_dyadic(const Rat& x, unsigned long bits);
/// Largest m / 2^bits <= x.
Rat round_down_dyadic(const Rat& x, unsigned long bits);

/// Upper bound for |x| of the form m * 2^e with a mantissa of at most
/// `mantissa_bits` bits; keeps certified bounds short.
Rat round_up_short(const Rat& x, unsigned long mantissa_bits = 64);

}  // namespace zetaq
