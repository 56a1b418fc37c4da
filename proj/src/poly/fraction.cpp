#include "conemod/poly/fraction.hpp"

#include <algorithm>

#include "conemod/poly/parse.hpp"

namespace conemod {

std::optional<Poly> exact_divide(const Poly& p, const Poly& divisor) {
  if (divisor.is_zero()) return std::nullopt;
  Poly rest = p;
  std::vector<Term> quotient;
  const Monomial& lead = divisor.leading_monomial();
  const Rational& lead_coef = divisor.leading_coefficient();
  while (!rest.is_zero()) {
    const Term& t = rest.leading_term();
    if (!lead.divides(t.mono)) return std::nullopt;
    Monomial m = t.mono / lead;
    Rational c = t.coef / lead_coef;
    rest.subtract_multiple(c, m, divisor);
    quotient.push_back(Term{std::move(m), std::move(c)});
  }
  return Poly::from_terms(p.ring_ptr(), std::move(quotient));
}

namespace {

bool factor_less(const Poly& a, const Poly& b) {
  const auto& order = a.ring().order;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = order.compare(a.terms()[i].mono, b.terms()[i].mono);
    if (c != 0) return c > 0;
    if (a.terms()[i].coef != b.terms()[i].coef) return a.terms()[i].coef < b.terms()[i].coef;
  }
  return a.size() < b.size();
}

}  // namespace

Fraction::Fraction(Poly numerator) : num_(std::move(numerator)) {}

Fraction Fraction::quotient(const Poly& numerator, const Poly& denominator) {
  if (denominator.is_zero()) throw std::domain_error("Fraction: zero denominator");
  Fraction f(numerator);
  f.divide_by_poly(denominator);
  f.cancel();
  return f;
}

Poly Fraction::denominator() const {
  Poly d = Poly::constant(num_.ring_ptr(), 1);
  for (const auto& [f, e] : den_) d *= f.pow(e);
  return d;
}

void Fraction::add_factor(const Poly& monic_factor, unsigned exponent) {
  if (exponent == 0) return;
  for (auto& [f, e] : den_) {
    if (f == monic_factor) {
      e += exponent;
      return;
    }
  }
  auto it = std::find_if(den_.begin(), den_.end(),
                         [&](const Factor& x) { return factor_less(monic_factor, x.first); });
  den_.insert(it, Factor{monic_factor, exponent});
}

void Fraction::divide_by_poly(const Poly& p_in) {
  if (p_in.is_zero()) throw std::domain_error("Fraction: division by zero");
  const RingPtr& ring = p_in.ring_ptr();
  num_ *= Rational(1 / p_in.leading_coefficient());
  Poly p = p_in.monic();
  // Split off the monomial content as single-variable factors.
  Monomial content = p.leading_monomial();
  for (const auto& t : p.terms()) content = Monomial::gcd(content, t.mono);
  if (!content.is_one()) {
    for (std::size_t i = 0; i < content.size(); ++i)
      if (content[i]) add_factor(Poly::variable(ring, i), content[i]);
    std::vector<Term> reduced;
    for (const auto& t : p.terms()) reduced.push_back(Term{t.mono / content, t.coef});
    p = Poly::from_terms(ring, std::move(reduced));
  }
  if (p.is_constant()) return;
  // Peel off factors already present so repeated denominators merge.
  bool peeled = true;
  while (peeled && !p.is_constant()) {
    peeled = false;
    for (const auto& [f, e] : std::vector<Factor>(den_)) {
      if (f.size() == 1) continue;
      if (auto q = exact_divide(p, f)) {
        add_factor(f, 1);
        p = *q;
        peeled = true;
        break;
      }
    }
  }
  if (!p.is_constant()) add_factor(p.monic(), 1);
}

void Fraction::cancel() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto& [f, e] : den_) {
    while (e > 0) {
      auto q = exact_divide(num_, f);
      if (!q) break;
      num_ = std::move(*q);
      --e;
    }
  }
  den_.erase(std::remove_if(den_.begin(), den_.end(), [](const Factor& x) { return x.second == 0; }),
             den_.end());
}

Fraction Fraction::operator-() const {
  Fraction r(*this);
  r.num_ = -r.num_;
  return r;
}

Fraction& Fraction::operator+=(const Fraction& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  std::vector<Factor> common = den_;
  for (const auto& [f, e] : other.den_) {
    auto it = std::find_if(common.begin(), common.end(), [&](const Factor& x) { return x.first == f; });
    if (it == common.end()) {
      auto pos = std::find_if(common.begin(), common.end(),
                              [&](const Factor& x) { return factor_less(f, x.first); });
      common.insert(pos, Factor{f, e});
    } else {
      it->second = std::max(it->second, e);
    }
  }
  auto lift = [&](const Fraction& x) {
    Poly n = x.num_;
    for (const auto& [f, e] : common) {
      unsigned have = 0;
      for (const auto& [g, k] : x.den_)
        if (g == f) have = k;
      if (e > have) n *= f.pow(e - have);
    }
    return n;
  };
  num_ = lift(*this) + lift(other);
  den_ = std::move(common);
  cancel();
  return *this;
}

Fraction& Fraction::operator-=(const Fraction& other) { return *this += -other; }

Fraction& Fraction::operator*=(const Fraction& other) {
  num_ *= other.num_;
  if (num_.is_zero()) {
    den_.clear();
    return *this;
  }
  for (const auto& [f, e] : other.den_) add_factor(f, e);
  cancel();
  return *this;
}

Fraction& Fraction::operator/=(const Fraction& other) {
  if (other.is_zero()) throw std::domain_error("Fraction: division by zero");
  num_ *= other.denominator();
  divide_by_poly(other.num_);
  cancel();
  return *this;
}

Fraction Fraction::pow(unsigned n) const {
  Fraction r(Poly::constant(num_.ring_ptr(), 1));
  for (unsigned i = 0; i < n; ++i) r *= *this;
  return r;
}

bool Fraction::equals(const Fraction& other) const {
  return num_ * other.denominator() == other.num_ * denominator();
}

std::string to_string(const Fraction& f) {
  if (f.is_polynomial()) return to_string(f.numerator());
  std::string num = to_string(f.numerator());
  if (f.numerator().size() > 1) num = "(" + num + ")";
  std::string den;
  for (const auto& [g, e] : f.denominator_factors()) {
    if (!den.empty()) den += "*";
    den += g.size() == 1 ? to_string(g) : "(" + to_string(g) + ")";
    if (e > 1) den += "^" + std::to_string(e);
  }
  const auto& factors = f.denominator_factors();
  const bool bare = factors.size() == 1 && factors.front().second == 1;
  return num + "/" + (bare ? den : "(" + den + ")");
}

Fraction substitute(const Poly& p, const std::vector<Fraction>& images, const RingPtr& target) {
  std::vector<std::vector<Fraction>> powers(images.size());
  auto power = [&](std::size_t i, Exponent e) -> const Fraction& {
    auto& cache = powers[i];
    if (cache.empty()) cache.emplace_back(Poly::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Fraction result{Poly(target)};
  for (const auto& t : p.terms()) {
    Fraction term{Poly::constant(target, t.coef)};
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (t.mono[i]) term *= power(i, t.mono[i]);
    result += term;
  }
  return result;
}

}  // namespace conemod
