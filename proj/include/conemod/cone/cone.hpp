#ifndef CONEMOD_CONE_CONE_HPP
#define CONEMOD_CONE_CONE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "conemod/ideal/ideal.hpp"
#include "conemod/poly/fraction.hpp"

namespace conemod {

/// An operation was called outside its documented preconditions.
class PreconditionViolation : public std::runtime_error {
 public:
  explicit PreconditionViolation(const std::string& what) : std::runtime_error(what) {}
};

/// A presented graded algebra k[x...]/R. Weights come from the ring's VarTable.
class GradedAlgebra {
 public:
  GradedAlgebra() = default;
  GradedAlgebra(RingPtr ring, std::vector<Poly> relations, GroebnerLimits limits = {});
  GradedAlgebra(Ideal relations) : relations_(std::move(relations)) {}

  const RingPtr& ring_ptr() const { return relations_.ring_ptr(); }
  const VarTable& vars() const { return relations_.ring().vars; }
  std::size_t size() const { return vars().size(); }
  const Ideal& relations() const { return relations_; }
  const GroebnerLimits& limits() const { return relations_.limits(); }

  Poly reduce(const Poly& p) const { return relations_.normal_form(p); }
  bool is_zero(const Poly& p) const { return relations_.contains(p); }
  Poly variable(std::size_t i) const { return Poly::variable(ring_ptr(), i); }

  std::vector<std::size_t> degree_zero_variables() const;
  std::vector<std::size_t> positive_variables() const;
  /// Generators of A_{>0}: the positive-weight variables.
  std::vector<Poly> positive_part() const;

 private:
  Ideal relations_;
};

/// Commuting derivations xi_1..xi_r given by their values on variables.
/// images[i][j] = xi_i(x_j). Directions are 0-based in this API.
struct LNDAction {
  std::size_t r = 0;
  std::uint64_t w = 1;
  std::vector<std::vector<Poly>> images;
};

struct ConeInstance {
  GradedAlgebra algebra;
  LNDAction action;

  const RingPtr& ring_ptr() const { return algebra.ring_ptr(); }
  const VarTable& vars() const { return algebra.vars(); }
  std::size_t r() const { return action.r; }
  std::uint64_t w() const { return action.w; }
};

/// beta_i = sum_k betas[i][k] * xi_k, and slices f_1..f_b with beta_i(f_j) = delta_ij.
struct SliceData {
  std::vector<std::vector<Rational>> betas;
  std::vector<Poly> slices;
  std::size_t b() const { return slices.size(); }
};

/// xi_i(p) without reduction.
Poly derive(const ConeInstance& inst, std::size_t i, const Poly& p);
/// xi_i(p) reduced modulo R.
Poly apply_derivation(const ConeInstance& inst, std::size_t i, const Poly& p);
/// sum_k coeffs[k] * xi_k(p), reduced.
Poly apply_combination(const ConeInstance& inst, const std::vector<Rational>& coeffs, const Poly& p);

/// Derivation of a fraction in the polynomial ring of `inst` (quotient rule).
Fraction apply_derivation(const ConeInstance& inst, std::size_t i, const Fraction& q);

struct VerificationCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;
  bool ok() const;
  /// Names of failed checks, in order.
  std::vector<std::string> failures() const;
};

VerificationReport verify_action(const ConeInstance& inst);

/// The coaction ring A's variables followed by u1..ur (weight w).
RingPtr coaction_ring(const ConeInstance& inst);

/// sigma(p) = sum_n xi^n(p)/n! u^n, coefficients reduced modulo R, as a
/// polynomial in coaction_ring(inst).
Poly coaction(const ConeInstance& inst, const Poly& p);

/// The Taylor coefficients xi^n(p)/n! of the coaction, keyed by multi-index n.
std::vector<std::pair<std::vector<unsigned>, Poly>> coaction_terms(const ConeInstance& inst, const Poly& p);

/// h-hat = sum_n (-1)^|n|/n! (beta^n h) f^n, reduced modulo R.
Poly hat_projection(const ConeInstance& inst, const SliceData& slice, const Poly& h);

}  // namespace conemod

#endif
