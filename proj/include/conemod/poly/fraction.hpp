#ifndef CONEMOD_POLY_FRACTION_HPP
#define CONEMOD_POLY_FRACTION_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "conemod/poly/poly.hpp"

namespace conemod {

/// Exact division; nullopt when `divisor` does not divide `p`.
std::optional<Poly> exact_divide(const Poly& p, const Poly& divisor);

/// A rational function num / (f_1^e_1 ... f_k^e_k). Denominator factors are
/// monic; monomial parts are split into single variables. Common factors are
/// cancelled by trial division, which keeps printed forms short but does not
/// guarantee a reduced fraction when two factors share a common divisor.
class Fraction {
 public:
  using Factor = std::pair<Poly, unsigned>;

  Fraction() = default;
  explicit Fraction(Poly numerator);
  static Fraction quotient(const Poly& numerator, const Poly& denominator);

  const Poly& numerator() const { return num_; }
  const std::vector<Factor>& denominator_factors() const { return den_; }
  Poly denominator() const;
  const RingPtr& ring_ptr() const { return num_.ring_ptr(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }

  Fraction operator-() const;
  Fraction& operator+=(const Fraction& other);
  Fraction& operator-=(const Fraction& other);
  Fraction& operator*=(const Fraction& other);
  Fraction& operator/=(const Fraction& other);
  friend Fraction operator+(Fraction a, const Fraction& b) { return a += b; }
  friend Fraction operator-(Fraction a, const Fraction& b) { return a -= b; }
  friend Fraction operator*(Fraction a, const Fraction& b) { return a *= b; }
  friend Fraction operator/(Fraction a, const Fraction& b) { return a /= b; }
  Fraction pow(unsigned n) const;

  /// Value equality (cross multiplication).
  bool equals(const Fraction& other) const;

 private:
  void divide_by_poly(const Poly& p);
  void add_factor(const Poly& monic_factor, unsigned exponent);
  void cancel();

  Poly num_;
  std::vector<Factor> den_;
};

std::string to_string(const Fraction& f);

/// The polynomial grammar extended with "/" between factors.
Fraction parse_fraction(std::string_view text, const RingPtr& ring);

/// Substitutes fractions for the variables of p.
Fraction substitute(const Poly& p, const std::vector<Fraction>& images, const RingPtr& target);

}  // namespace conemod

#endif
