#ifndef CONEMOD_POLY_MONOMIAL_HPP
#define CONEMOD_POLY_MONOMIAL_HPP

#include <cstdint>
#include <vector>

namespace conemod {

using Exponent = std::uint32_t;

/// Exponent vector indexed by the variables of a VarTable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t variable_count) : exps_(variable_count, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t variable_count, std::size_t index, Exponent power = 1);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  std::uint64_t total_degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  bool involves(std::size_t index) const { return exps_[index] != 0; }

  Monomial operator*(const Monomial& other) const;
  Monomial& operator*=(const Monomial& other);
  /// Requires divides(*this) of the divisor.
  Monomial operator/(const Monomial& divisor) const;

  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& other) const = default;

 private:
  std::vector<Exponent> exps_;
};

}  // namespace conemod

#endif
