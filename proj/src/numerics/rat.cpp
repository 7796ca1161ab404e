#include "zetaq/rat.hpp"

#include <ostream>
#include <stdexcept>

namespace zetaq {

Rat::Rat(const BigInt& num, const BigInt& den) : v_(num, den) {
  if (den == 0) {
    throw std::domain_error("Rat: zero denominator");
  }
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
      i = 1;
    }
    if (i == s.size()) {
      throw std::invalid_argument("Rat: malformed rational '" + std::string(text) + "'");
    }
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9') {
        throw std::invalid_argument("Rat: malformed rational '" + std::string(text) + "'");
      }
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return BigInt(digits, 10);
  };

  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rat(parse_int(text));
  }
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) {
    throw std::invalid_argument("Rat: zero denominator in '" + std::string(text) + "'");
  }
  return Rat(parse_int(text.substr(0, slash)), den);
}

Rat Rat::abs() const {
  Rat r;
  r.v_ = ::abs(v_);
  return r;
}

Rat Rat::inv() const {
  if (is_zero()) {
    throw std::domain_error("Rat: inverse of zero");
  }
  Rat r;
  mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
  return r;
}

BigInt Rat::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

BigInt Rat::ceil() const {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

std::string Rat::str() const {
  if (is_integer()) {
    return v_.get_num().get_str();
  }
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat& Rat::operator+=(const Rat& o) {
  v_ += o.v_;
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  v_ -= o.v_;
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  v_ *= o.v_;
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) {
    throw std::domain_error("Rat: division by zero");
  }
  v_ /= o.v_;
  return *this;
}

Rat operator-(const Rat& a) {
  Rat r;
  r.v_ = -a.v_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat pow(const Rat& x, int e) {
  if (e < 0) {
    return pow(x.inv(), -e);
  }
  BigInt n;
  BigInt d;
  mpz_pow_ui(n.get_mpz_t(), x.raw().get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), x.raw().get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rat(n, d);
}

Rat inv_pow(long k, int e) {
  if (k <= 0) {
    throw std::domain_error("inv_pow: base must be positive");
  }
  return Rat(BigInt(1), pow_int(k, static_cast<unsigned long>(e)));
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt pow_int(long base, unsigned long e) {
  BigInt r;
  const BigInt b(base);
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

Rat min(const Rat& a, const Rat& b) { return b < a ? b : a; }
Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

Rat round_up_dyadic(const Rat& x, unsigned long bits) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
  return Rat((x * Rat(scale)).ceil(), scale);
}

Rat round_down_dyadic(const Rat& x, unsigned long bits) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
  return Rat((x * Rat(scale)).floor(), scale);
}

Rat round_up_short(const Rat& x, unsigned long mantissa_bits) {
  const Rat a = x.abs();
  if (a.is_zero()) {
    return a;
  }
  // a = m * 2^e with 2^(mantissa_bits-1) <= m < 2^mantissa_bits.
  const long num_bits = static_cast<long>(mpz_sizeinbase(a.raw().get_num_mpz_t(), 2));
  const long den_bits = static_cast<long>(mpz_sizeinbase(a.raw().get_den_mpz_t(), 2));
  const long shift = static_cast<long>(mantissa_bits) - (num_bits - den_bits) + 1;
  Rat scaled = a;
  BigInt p2;
  mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  if (shift >= 0) {
    scaled *= Rat(p2);
    return Rat(scaled.ceil(), p2);
  }
  scaled /= Rat(p2);
  return Rat(scaled.ceil() * p2);
}

}  // namespace zetaq
