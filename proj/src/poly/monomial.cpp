#include "conemod/poly/monomial.hpp"

#include <algorithm>
#include <cassert>

#include "conemod/poly/monomial_order.hpp"

namespace conemod {

Monomial Monomial::variable(std::size_t variable_count, std::size_t index, Exponent power) {
  Monomial m(variable_count);
  m.exps_[index] = power;
  return m;
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (Exponent e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  assert(size() == other.size());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  r *= other;
  return r;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  assert(size() == other.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += other.exps_[i];
  return *this;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  assert(divisor.divides(*this));
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  return r;
}

namespace {

// Graded reverse lex restricted to variables [begin, end).
int compare_grevlex(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = begin; i < end; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = end; i > begin; --i) {
    if (a[i - 1] != b[i - 1]) return a[i - 1] < b[i - 1] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  assert(a.size() == b.size());
  const std::size_t n = a.size();
  switch (kind_) {
    case Kind::GradedReverseLex:
      return compare_grevlex(a, b, 0, n);
    case Kind::Lex:
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case Kind::BlockElimination: {
      std::size_t begin = 0;
      for (std::size_t split : splits_) {
        const std::size_t end = std::min(split, n);
        if (int c = compare_grevlex(a, b, begin, end)) return c;
        begin = end;
      }
      return compare_grevlex(a, b, begin, n);
    }
  }
  return 0;
}

std::string MonomialOrder::describe() const {
  switch (kind_) {
    case Kind::GradedReverseLex:
      return "grevlex";
    case Kind::Lex:
      return "lex";
    case Kind::BlockElimination: {
      std::string s = "blocks(";
      for (std::size_t i = 0; i < splits_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(splits_[i]);
      }
      return s + ")";
    }
  }
  return "?";
}

}  // namespace conemod
