#include "zetaq/zeta_combination.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "zetaq/zeta_reference.hpp"

namespace zetaq {

ZetaCombination ZetaCombination::zeta(int p) {
  ZetaCombination z;
  z.add_term(p, Rat(1));
  return z;
}

Rat ZetaCombination::coeff(int p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rat() : it->second;
}

int ZetaCombination::max_order() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

void ZetaCombination::add_constant(const Rat& v) { constant_ += v; }

void ZetaCombination::add_term(int p, const Rat& v) {
  if (p <= 1) {
    throw std::invalid_argument("zeta order must be >= 2, got " + std::to_string(p));
  }
  if (v.is_zero()) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(p, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

void ZetaCombination::add_scaled(const ZetaCombination& other, const Rat& w) {
  if (w.is_zero()) {
    return;
  }
  constant_ += w * other.constant_;
  for (const auto& [p, v] : other.terms_) {
    add_term(p, w * v);
  }
}

std::optional<int> ZetaCombination::first_difference(const ZetaCombination& other) const {
  if (constant_ != other.constant_) {
    return 0;
  }
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (a == terms_.end()) {
      return b->first;
    }
    if (b == other.terms_.end()) {
      return a->first;
    }
    if (a->first != b->first) {
      return std::min(a->first, b->first);
    }
    if (a->second != b->second) {
      return a->first;
    }
    ++a;
    ++b;
  }
  return std::nullopt;
}

Interval ZetaCombination::enclose(int digits) const {
  Interval acc(constant_);
  for (const auto& [p, v] : terms_) {
    acc = acc + v * zeta_reference(p, digits);
  }
  return acc;
}

std::string ZetaCombination::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ZetaCombination& z) {
  os << z.constant_;
  for (const auto& [p, v] : z.terms_) {
    os << (v.sign() < 0 ? " - " : " + ") << v.abs() << "*zeta(" << p << ")";
  }
  return os;
}

}  // namespace zetaq
