#ifndef CONEMOD_DRIVER_MEMBERSHIP_HPP
#define CONEMOD_DRIVER_MEMBERSHIP_HPP

#include <optional>
#include <string>
#include <vector>

#include "conemod/modification/modification.hpp"

namespace conemod {

enum class Membership { Member, NonMember, Undetermined };

std::string to_string(Membership m);

struct SubalgebraExpression {
  Membership status = Membership::Undetermined;
  /// For members: the target as a polynomial in the generators.
  std::optional<Poly> expression;
};

/// Whether a fraction in root coordinates lies in the chart algebra, and if
/// so its expression in the chart variables. The root variables are mapped
/// into the chart and the denominator is divided out modulo the chart
/// relations. `bound` caps the Groebner degree; reaching it gives Undetermined.
/// Throws std::invalid_argument if the denominator vanishes on the chart.
SubalgebraExpression express_in_chart(const Fraction& target, const Chart& chart, unsigned bound = 12);

Membership algebra_membership(const Fraction& target, const Chart& chart, unsigned bound = 12);

/// Whether `target` lies in k[generators] + relations inside a polynomial
/// ring; the expression is in `generator_ring`, whose i-th variable stands
/// for generators[i]. Decided by elimination.
SubalgebraExpression polynomial_subalgebra_membership(const Poly& target, const std::vector<Poly>& generators,
                                                      const RingPtr& generator_ring, const Ideal& relations,
                                                      unsigned bound = 12);

/// Whether `target` lies in the algebra generated by `generators`, all given
/// in root coordinates and lying in the chart algebra. Throws
/// std::invalid_argument if a generator is not in the chart algebra.
Membership generated_membership(const Fraction& target, const std::vector<Fraction>& generators, const Chart& chart,
                                unsigned bound = 12);

}  // namespace conemod

#endif
