#include "conemod/driver/membership.hpp"

#include <stdexcept>

#include "conemod/poly/parse.hpp"

namespace conemod {

std::string to_string(Membership m) {
  switch (m) {
    case Membership::Member: return "member";
    case Membership::NonMember: return "non-member";
    case Membership::Undetermined: return "undetermined";
  }
  return "undetermined";
}

namespace {

GroebnerLimits capped(GroebnerLimits limits, unsigned bound) {
  limits.max_degree = bound;
  return limits;
}

}  // namespace

SubalgebraExpression express_in_chart(const Fraction& target, const Chart& chart, unsigned bound) {
  if (!same_ring(target.ring_ptr(), chart.root_ring))
    throw std::invalid_argument("target is not a fraction in the root coordinates");
  const ConeInstance& inst = chart.instance;
  const Ideal relations(inst.ring_ptr(), inst.algebra.relations().generators(),
                        capped(inst.algebra.limits(), bound));
  try {
    const Poly num = relations.normal_form(substitute(target.numerator(), chart.root_images, inst.ring_ptr()));
    const Poly den = relations.normal_form(substitute(target.denominator(), chart.root_images, inst.ring_ptr()));
    if (den.is_zero()) throw std::invalid_argument("denominator of " + to_string(target) + " vanishes on the chart");
    return {Membership::Member, cofactor_divide(num, den, relations)};
  } catch (const NotDivisible&) {
    return {Membership::NonMember, std::nullopt};
  } catch (const ResourceLimitExceeded&) {
    return {Membership::Undetermined, std::nullopt};
  }
}

Membership algebra_membership(const Fraction& target, const Chart& chart, unsigned bound) {
  return express_in_chart(target, chart, bound).status;
}

SubalgebraExpression polynomial_subalgebra_membership(const Poly& target, const std::vector<Poly>& generators,
                                                      const RingPtr& generator_ring, const Ideal& relations,
                                                      unsigned bound) {
  const RingPtr& ring = relations.ring_ptr();
  const std::size_t n = ring->size();
  // Ring: ambient variables | generator variables.
  std::vector<std::string> names = ring->vars.names();
  std::vector<std::uint64_t> weights = ring->vars.weights();
  for (std::size_t i = 0; i < generators.size(); ++i) {
    names.push_back("_g" + std::to_string(i));
    weights.push_back(0);
  }
  const RingPtr big = make_ring(VarTable(names, weights), MonomialOrder::blocks({n}));
  std::vector<std::size_t> embed(n);
  for (std::size_t j = 0; j < n; ++j) embed[j] = j;
  auto lift = [&](const Poly& p) { return map_variables(p, embed, big); };
  std::vector<Poly> gens;
  for (const auto& g : relations.generators()) gens.push_back(lift(g));
  for (std::size_t i = 0; i < generators.size(); ++i)
    gens.push_back(Poly::variable(big, n + i) - lift(generators[i]));
  try {
    const auto basis = reduced_groebner_basis(gens, big, capped(relations.limits(), bound));
    const Poly nf = normal_form(lift(target), basis);
    for (std::size_t j = 0; j < n; ++j)
      if (nf.involves(j)) return {Membership::NonMember, std::nullopt};
    std::vector<std::size_t> to_gen(big->size(), 0);
    for (std::size_t i = 0; i < generators.size(); ++i) to_gen[n + i] = i;
    return {Membership::Member, map_variables(nf, to_gen, generator_ring)};
  } catch (const ResourceLimitExceeded&) {
    return {Membership::Undetermined, std::nullopt};
  }
}

Membership generated_membership(const Fraction& target, const std::vector<Fraction>& generators, const Chart& chart,
                                unsigned bound) {
  std::vector<Poly> images;
  std::vector<std::string> names;
  for (const auto& g : generators) {
    const auto e = express_in_chart(g, chart, bound);
    if (e.status == Membership::Undetermined) return Membership::Undetermined;
    if (e.status == Membership::NonMember)
      throw std::invalid_argument(to_string(g) + " is not in the algebra of chart " + chart.label);
    images.push_back(*e.expression);
    names.push_back("g" + std::to_string(names.size()));
  }
  const auto t = express_in_chart(target, chart, bound);
  if (t.status != Membership::Member) return t.status;
  const RingPtr ring = make_ring(VarTable(names, std::vector<std::uint64_t>(names.size(), 0)));
  return polynomial_subalgebra_membership(*t.expression, images, ring, chart.instance.algebra.relations(), bound)
      .status;
}

}  // namespace conemod
