#ifndef CONEMOD_POLY_POLY_HPP
#define CONEMOD_POLY_POLY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "conemod/poly/monomial.hpp"
#include "conemod/poly/rational.hpp"
#include "conemod/poly/ring.hpp"

namespace conemod {

struct Term {
  Monomial mono;
  Rational coef;

  bool operator==(const Term& other) const = default;
};

/// Sparse polynomial with terms kept in descending order under the ring's
/// monomial order. Zero coefficients are never stored.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly constant(RingPtr ring, const Rational& c);
  static Poly variable(RingPtr ring, std::size_t index);
  static Poly monomial(RingPtr ring, Monomial m, const Rational& c = 1);
  /// Builds from unsorted terms; merges duplicates and drops zeros.
  static Poly from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring_ptr() const { return ring_; }
  const Ring& ring() const { return *ring_; }
  std::size_t variable_count() const { return ring_->size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Nonzero constant.
  bool is_unit() const { return is_constant() && !is_zero(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Rational& leading_coefficient() const { return terms_.front().coef; }

  std::uint64_t total_degree() const;
  /// Variable indices that occur in some term.
  std::vector<bool> support() const;
  bool involves(std::size_t index) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

  Poly times_term(const Monomial& m, const Rational& c) const;
  Poly pow(unsigned n) const;
  /// this - c*m*g, the basic reduction step.
  void subtract_multiple(const Rational& c, const Monomial& m, const Poly& g);

  /// Scales so the leading coefficient is 1 (no-op on zero).
  Poly monic() const;
  /// Re-sorts the terms for a ring with the same variables.
  Poly in_ring(const RingPtr& ring) const;

  /// Partial derivative with respect to variable `index`.
  Poly partial(std::size_t index) const;
  Rational coefficient(const Monomial& m) const;

  bool operator==(const Poly& other) const;
  bool operator!=(const Poly& other) const { return !(*this == other); }

 private:
  Poly(RingPtr ring, std::vector<Term> sorted_terms)
      : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}
  void check_ring(const Poly& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Weighted degree of a polynomial: a number, "inhomogeneous", or the
/// separate marker reserved for the zero polynomial.
class WeightedDegree {
 public:
  enum class Kind { Zero, Homogeneous, Inhomogeneous };

  static WeightedDegree zero() { return WeightedDegree(Kind::Zero, 0); }
  static WeightedDegree inhomogeneous() { return WeightedDegree(Kind::Inhomogeneous, 0); }
  static WeightedDegree of(std::uint64_t d) { return WeightedDegree(Kind::Homogeneous, d); }

  Kind kind() const { return kind_; }
  bool is_zero() const { return kind_ == Kind::Zero; }
  bool is_homogeneous() const { return kind_ == Kind::Homogeneous; }
  /// Only meaningful when is_homogeneous().
  std::uint64_t value() const { return value_; }

  bool operator==(const WeightedDegree& other) const = default;

 private:
  WeightedDegree(Kind kind, std::uint64_t value) : kind_(kind), value_(value) {}
  Kind kind_;
  std::uint64_t value_;
};

WeightedDegree weighted_degree(const Poly& p);
/// Zero counts as homogeneous of every degree.
bool is_homogeneous(const Poly& p);
/// Components in strictly increasing degree; empty for zero.
std::vector<std::pair<std::uint64_t, Poly>> homogeneous_components(const Poly& p);

/// Substitutes images[i] for variable i; all images share one target ring.
Poly substitute(const Poly& p, const std::vector<Poly>& images, const RingPtr& target);
/// Renames variables: variable i goes to variable index_map[i] of `target`.
Poly map_variables(const Poly& p, const std::vector<std::size_t>& index_map,
                   const RingPtr& target);
Rational evaluate(const Poly& p, const std::vector<Rational>& point);

}  // namespace conemod

#endif
