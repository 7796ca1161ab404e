#include "zetaq/polynomials.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "zetaq/errors.hpp"

namespace zetaq {

const char* to_string(PolyFamily f) {
  switch (f) {
    case PolyFamily::ShiftedLegendre:
      return "shifted-legendre";
    case PolyFamily::Binomial:
      return "binomial";
    case PolyFamily::Explicit:
      return "explicit";
  }
  return "unknown";
}

PolySpec::PolySpec(std::vector<Rat> coeffs, PolyFamily family)
    : coeffs_(std::move(coeffs)), family_(family) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("polynomial needs at least one coefficient");
  }
  if (family_ != PolyFamily::Explicit && coeffs_.back().is_zero()) {
    throw std::invalid_argument("structured polynomial with zero leading coefficient");
  }
  for (const Rat& c : coeffs_) {
    cstar_ = max(cstar_, c.abs());
  }
}

Rat PolySpec::abs_sum() const {
  Rat acc;
  for (const Rat& c : coeffs_) {
    acc += c.abs();
  }
  return acc;
}

PolySpec PolySpec::padded(int n) const {
  if (n < degree()) {
    throw DimensionMismatch("cannot pad a degree-" + std::to_string(degree()) +
                            " polynomial down to degree " + std::to_string(n));
  }
  if (n == degree()) {
    return *this;
  }
  if (family_ != PolyFamily::Explicit) {
    throw DimensionMismatch(std::string(to_string(family_)) + " polynomial of degree " +
                            std::to_string(degree()) + " cannot be padded to degree " +
                            std::to_string(n));
  }
  std::vector<Rat> c = coeffs_;
  c.resize(static_cast<std::size_t>(n) + 1);
  return PolySpec(std::move(c), family_);
}

PolySpec shifted_legendre(int n) {
  if (n < 0) {
    throw std::invalid_argument("shifted_legendre: n must be >= 0");
  }
  const auto un = static_cast<unsigned long>(n);
  std::vector<Rat> c;
  c.reserve(un + 1);
  // (n+r)!/((r!)^2 (n-r)!) = C(n, r) C(n+r, r)
  for (unsigned long r = 0; r <= un; ++r) {
    BigInt v = binomial(un, r) * binomial(un + r, r);
    c.emplace_back(r % 2 == 0 ? v : BigInt(-v));
  }
  return PolySpec(std::move(c), PolyFamily::ShiftedLegendre);
}

PolySpec binomial_poly(int n) {
  if (n < 0) {
    throw std::invalid_argument("binomial_poly: n must be >= 0");
  }
  const auto un = static_cast<unsigned long>(n);
  std::vector<Rat> c;
  c.reserve(un + 1);
  for (unsigned long r = 0; r <= un; ++r) {
    BigInt v = binomial(un, r);
    c.emplace_back(r % 2 == 0 ? v : BigInt(-v));
  }
  return PolySpec(std::move(c), PolyFamily::Binomial);
}

PolySpec explicit_poly(std::vector<Rat> coeffs) {
  if (coeffs.empty()) {
    throw std::invalid_argument("explicit_poly: empty coefficient list");
  }
  return PolySpec(std::move(coeffs), PolyFamily::Explicit);
}

Rat eval_poly(const PolySpec& p, const Rat& x) {
  Rat acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

std::vector<Rat> parse_coeff_list(std::string_view text) {
  std::vector<Rat> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!item.empty() && item.front() == ' ') {
      item.remove_prefix(1);
    }
    while (!item.empty() && item.back() == ' ') {
      item.remove_suffix(1);
    }
    if (item.empty()) {
      throw std::invalid_argument("empty entry in coefficient list '" + std::string(text) + "'");
    }
    out.push_back(Rat::parse(item));
    if (comma == std::string_view::npos) {
      break;
    }
    pos = comma + 1;
  }
  return out;
}

void align_degrees(PolySpec& p, PolySpec& q, PolySpec& t) {
  int n = std::max({p.degree(), q.degree(), t.degree()});
  p = p.padded(n);
  q = q.padded(n);
  t = t.padded(n);
}

}  // namespace zetaq
