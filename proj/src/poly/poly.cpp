#include "conemod/poly/poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace conemod {

namespace {

// Merges two descending term lists as a + factor*b.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b,
                              const Rational& factor, const MonomialOrder& order) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const int c = order.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(Term{b[j].mono, b[j].coef * factor});
      ++j;
    } else {
      Rational s = a[i].coef + b[j].coef * factor;
      if (s != 0) out.push_back(Term{a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(Term{b[j].mono, b[j].coef * factor});
  return out;
}

}  // namespace

Poly Poly::constant(RingPtr ring, const Rational& c) {
  Poly p(std::move(ring));
  if (c != 0) p.terms_.push_back(Term{Monomial(p.variable_count()), c});
  return p;
}

Poly Poly::variable(RingPtr ring, std::size_t index) {
  const std::size_t n = ring->size();
  if (index >= n) throw std::out_of_range("Poly::variable index");
  return monomial(std::move(ring), Monomial::variable(n, index));
}

Poly Poly::monomial(RingPtr ring, Monomial m, const Rational& c) {
  Poly p(std::move(ring));
  if (c != 0) p.terms_.push_back(Term{std::move(m), c});
  return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto& order = ring->order;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  return Poly(std::move(ring), std::move(out));
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

std::uint64_t Poly::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

std::vector<bool> Poly::support() const {
  std::vector<bool> s(variable_count(), false);
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < s.size(); ++i)
      if (t.mono[i]) s[i] = true;
  return s;
}

bool Poly::involves(std::size_t index) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.mono[index] != 0; });
}

void Poly::check_ring(const Poly& other) const {
  if (!same_ring(ring_, other.ring_)) throw std::invalid_argument("Poly: ring mismatch");
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.is_zero()) return *this;
  if (!ring_) ring_ = other.ring_;
  check_ring(other);
  terms_ = merge_terms(terms_, other.terms_, Rational(1), ring_->order);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.is_zero()) return *this;
  if (!ring_) ring_ = other.ring_;
  check_ring(other);
  terms_ = merge_terms(terms_, other.terms_, Rational(-1), ring_->order);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.ring_ ? a.ring_ : b.ring_);
  a.check_ring(b);
  if (a.size() == 1) return b.times_term(a.terms_[0].mono, a.terms_[0].coef);
  if (b.size() == 1) return a.times_term(b.terms_[0].mono, b.terms_[0].coef);
  std::vector<Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back(Term{s.mono * t.mono, s.coef * t.coef});
  return Poly::from_terms(a.ring_, std::move(prod));
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly Poly::times_term(const Monomial& m, const Rational& c) const {
  if (c == 0) return Poly(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(Term{t.mono * m, t.coef * c});
  return Poly(ring_, std::move(out));
}

Poly Poly::pow(unsigned n) const {
  Poly result = constant(ring_, 1);
  Poly base = *this;
  while (n) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n) base *= base;
  }
  return result;
}

void Poly::subtract_multiple(const Rational& c, const Monomial& m, const Poly& g) {
  std::vector<Term> shifted;
  shifted.reserve(g.size());
  for (const auto& t : g.terms_) shifted.push_back(Term{t.mono * m, t.coef});
  terms_ = merge_terms(terms_, shifted, -c, ring_->order);
}

Poly Poly::monic() const {
  if (is_zero() || leading_coefficient() == 1) return *this;
  return *this * Rational(1 / leading_coefficient());
}

Poly Poly::in_ring(const RingPtr& ring) const {
  if (same_ring(ring, ring_)) return Poly(ring, terms_);
  if (ring->size() != variable_count()) throw std::invalid_argument("in_ring: variable count");
  return from_terms(ring, terms_);
}

Poly Poly::partial(std::size_t index) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono[index] == 0) continue;
    Monomial m = t.mono;
    const Exponent e = m[index];
    m[index] = e - 1;
    out.push_back(Term{std::move(m), t.coef * e});
  }
  return from_terms(ring_, std::move(out));
}

Rational Poly::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coef;
  return 0;
}

bool Poly::operator==(const Poly& other) const {
  if (is_zero() && other.is_zero()) return true;
  if (!same_ring(ring_, other.ring_)) return false;
  return terms_ == other.terms_;
}

WeightedDegree weighted_degree(const Poly& p) {
  if (p.is_zero()) return WeightedDegree::zero();
  const auto& vars = p.ring().vars;
  const std::uint64_t d = vars.weighted_degree(p.leading_monomial());
  for (const auto& t : p.terms())
    if (vars.weighted_degree(t.mono) != d) return WeightedDegree::inhomogeneous();
  return WeightedDegree::of(d);
}

bool is_homogeneous(const Poly& p) { return !(weighted_degree(p).kind() == WeightedDegree::Kind::Inhomogeneous); }

std::vector<std::pair<std::uint64_t, Poly>> homogeneous_components(const Poly& p) {
  std::map<std::uint64_t, std::vector<Term>> parts;
  for (const auto& t : p.terms()) parts[p.ring().vars.weighted_degree(t.mono)].push_back(t);
  std::vector<std::pair<std::uint64_t, Poly>> out;
  for (auto& [d, terms] : parts) out.emplace_back(d, Poly::from_terms(p.ring_ptr(), std::move(terms)));
  return out;
}

Poly substitute(const Poly& p, const std::vector<Poly>& images, const RingPtr& target) {
  if (images.size() != p.variable_count()) throw std::invalid_argument("substitute: image count");
  // Cache powers of each image.
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t i, Exponent e) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Poly::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Poly result(target);
  for (const auto& t : p.terms()) {
    Poly term = Poly::constant(target, t.coef);
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (t.mono[i]) term *= power(i, t.mono[i]);
    result += term;
  }
  return result;
}

Poly map_variables(const Poly& p, const std::vector<std::size_t>& index_map, const RingPtr& target) {
  std::vector<Term> out;
  out.reserve(p.size());
  const std::size_t n = target->size();
  for (const auto& t : p.terms()) {
    Monomial m(n);
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (t.mono[i]) m[index_map.at(i)] += t.mono[i];
    out.push_back(Term{std::move(m), t.coef});
  }
  return Poly::from_terms(target, std::move(out));
}

Rational evaluate(const Poly& p, const std::vector<Rational>& point) {
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational v = t.coef;
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      for (Exponent k = 0; k < t.mono[i]; ++k) v *= point[i];
    sum += v;
  }
  return sum;
}

}  // namespace conemod
