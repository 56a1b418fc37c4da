#include "conemod/modification/modification.hpp"

#include <algorithm>
#include <cctype>

#include "conemod/poly/parse.hpp"

namespace conemod {

std::string to_string(ModType kind) { return kind == ModType::I ? "I" : "II"; }

std::vector<Poly> invariant_core_generators(const ConeInstance& inst, const std::vector<Poly>& seed) {
  const Ideal& relations = inst.algebra.relations();
  const Ideal q = relations.plus(seed);
  if (q.is_unit()) return {Poly::constant(inst.ring_ptr(), 1)};
  const RingPtr target = coaction_ring(inst);
  const std::size_t n = inst.vars().size();
  std::vector<std::size_t> embed(n);
  for (std::size_t j = 0; j < n; ++j) embed[j] = j;
  std::vector<Poly> images;
  for (std::size_t j = 0; j < n; ++j) {
    Poly image(target);
    for (const auto& [idx, c] : coaction_terms(inst, inst.algebra.variable(j))) {
      const Poly reduced = q.normal_form(c);
      if (reduced.is_zero()) continue;
      Monomial u(target->size());
      for (std::size_t k = 0; k < idx.size(); ++k) u[n + k] = idx[k];
      image += map_variables(reduced, embed, target).times_term(u, 1);
    }
    images.push_back(std::move(image));
  }
  std::vector<Poly> target_gens;
  for (const auto& g : q.basis()) target_gens.push_back(map_variables(g, embed, target));
  const Ideal kernel = map_preimage(inst.ring_ptr(), images, Ideal(target, target_gens, relations.limits()));
  return prune_generators(kernel.generators(), relations);
}

Ideal invariant_core(const ConeInstance& inst, const std::vector<Poly>& seed) {
  return inst.algebra.relations().plus(invariant_core_generators(inst, seed));
}

namespace {

std::optional<std::uint64_t> min_weight(const std::vector<Poly>& gens) {
  std::optional<std::uint64_t> best;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const std::uint64_t d = g.ring().vars.weighted_degree(g.leading_monomial());
    if (!best || d < *best) best = d;
  }
  return best;
}

}  // namespace

CentreData centre_modI(const ConeInstance& inst) {
  const auto report = fitting_report(inst);
  CentreData centre;
  centre.kind = ModType::I;
  std::vector<Poly> seed = report.fit.at(static_cast<long>(report.index.d));
  for (const auto& p : inst.algebra.positive_part()) seed.push_back(p);
  centre.seed = canonical_generators(seed, inst.algebra.relations());
  centre.core = invariant_core_generators(inst, centre.seed);
  if (!centre.empty()) {
    centre.min_degree = min_weight(centre.core);
    if (centre.min_degree && *centre.min_degree > 0)
      centre.warnings.push_back("minimal degree of the type I centre is " + std::to_string(*centre.min_degree) +
                                ", expected 0");
  }
  return centre;
}

CentreData centre_modII(const ConeInstance& inst) {
  const auto report = fitting_report(inst);
  const long d = static_cast<long>(report.index.d);
  const auto& top = report.fit.at(d);
  if (!(top.size() == 1 && top.front().is_unit()))
    throw PreconditionViolation("stabiliser dimension is not constant on the zero section: Fit_" + std::to_string(d) +
                                " is not the unit ideal");
  CentreData centre;
  centre.kind = ModType::II;
  centre.seed = inst.algebra.positive_part();
  centre.core = invariant_core_generators(inst, centre.seed);
  if (!centre.empty()) centre.min_degree = min_weight(centre.core);
  return centre;
}

Chart root_chart(const ConeInstance& inst) {
  Chart chart;
  chart.instance = inst;
  chart.label = "root";
  chart.root_ring = inst.ring_ptr();
  for (std::size_t j = 0; j < inst.vars().size(); ++j) {
    chart.embedding.emplace_back(inst.algebra.variable(j));
    chart.root_images.push_back(inst.algebra.variable(j));
  }
  return chart;
}

std::string sanitize_name(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') out += c;
    else if (c == '/') out += '_';
    else if (c == '-') out += 'm';
    else if (c == '+') out += 'p';
  }
  if (out.empty() || !std::isalpha(static_cast<unsigned char>(out.front()))) out = "y" + out;
  return out;
}

namespace {

Chart identity_chart(const Chart& parent) {
  Chart chart = parent;
  chart.label = "identity";
  chart.identity = true;
  chart.denominator.reset();
  chart.parent_images.clear();
  for (std::size_t j = 0; j < parent.instance.vars().size(); ++j)
    chart.parent_images.push_back(parent.instance.algebra.variable(j));
  return chart;
}

// The chart of A[J/a] for a = gens[k]. Relations are the saturation
// (R + <a*y_j - g_j>) : a^infinity, computed together with an inverse t of a
// under the block order t >> parent >> y. Parent variables whose basis
// element is x - h(...) are replaced by h.
Chart blowup_chart(const Chart& parent, const std::vector<Poly>& gens, std::size_t k, std::uint64_t i1) {
  const ConeInstance& inst = parent.instance;
  const VarTable& pvars = inst.vars();
  const std::size_t n = pvars.size();
  const Poly& a = gens[k];
  const auto a_support = a.support();

  // Parent variables in the order: outside supp(a), then supp(a).
  std::vector<std::size_t> p_order;
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t j = 0; j < n; ++j)
      if (a_support[j] == (pass == 1)) p_order.push_back(j);

  std::vector<std::size_t> y_of;  // generator indices that get a new variable
  for (std::size_t j = 0; j < gens.size(); ++j)
    if (j != k) y_of.push_back(j);

  std::vector<std::string> names{"_t"};
  std::vector<std::uint64_t> weights{0};
  std::vector<std::size_t> to_big(n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    to_big[p_order[pos]] = names.size();
    names.push_back(pvars.name(p_order[pos]));
    weights.push_back(pvars.weight(p_order[pos]));
  }
  const std::size_t y0 = names.size();
  for (std::size_t m = 0; m < y_of.size(); ++m) {
    names.push_back("_y" + std::to_string(m));
    weights.push_back(gens[y_of[m]].ring().vars.weighted_degree(gens[y_of[m]].leading_monomial()) - i1);
  }
  const RingPtr big = make_ring(VarTable(names, weights), MonomialOrder::blocks({1, y0}));
  auto lift = [&](const Poly& p) { return map_variables(p, to_big, big); };

  const Poly t = Poly::variable(big, 0);
  const Poly a_big = lift(a);
  std::vector<Poly> ideal_gens;
  for (const auto& g : inst.algebra.relations().generators()) ideal_gens.push_back(lift(g));
  for (std::size_t m = 0; m < y_of.size(); ++m)
    ideal_gens.push_back(a_big * Poly::variable(big, y0 + m) - lift(gens[y_of[m]]));
  ideal_gens.push_back(t * a_big - Poly::constant(big, 1));
  const auto basis = reduced_groebner_basis(ideal_gens, big, inst.algebra.limits());

  // Parent variables solved for by the basis.
  std::vector<bool> eliminated(names.size(), false);
  for (const auto& b : basis) {
    if (b.involves(0)) continue;
    const Monomial& lm = b.leading_monomial();
    if (lm.total_degree() != 1) continue;
    for (std::size_t v = 1; v < y0; ++v)
      if (lm[v] == 1) eliminated[v] = true;
  }

  // Chart variables: retained parent variables in parent order, then y's.
  std::vector<std::size_t> kept_big;
  for (std::size_t j = 0; j < n; ++j)
    if (!eliminated[to_big[j]]) kept_big.push_back(to_big[j]);
  for (std::size_t m = 0; m < y_of.size(); ++m) kept_big.push_back(y0 + m);

  // Embeddings in root coordinates.
  const Fraction a_root = substitute(a, parent.embedding, parent.root_ring);
  std::vector<Fraction> y_embed;
  for (std::size_t m = 0; m < y_of.size(); ++m)
    y_embed.push_back(substitute(gens[y_of[m]], parent.embedding, parent.root_ring) / a_root);

  std::vector<std::string> chart_names;
  std::vector<std::uint64_t> chart_weights;
  std::vector<Fraction> chart_embedding;
  for (std::size_t v : kept_big) {
    std::string name;
    if (v < y0) {
      name = names[v];
      const std::size_t j = p_order[v - 1];
      chart_embedding.push_back(parent.embedding[j]);
    } else {
      const Fraction& e = y_embed[v - y0];
      name = sanitize_name(to_string(e));
      chart_embedding.push_back(e);
    }
    const std::string base = name;
    for (int suffix = 2; std::find(chart_names.begin(), chart_names.end(), name) != chart_names.end(); ++suffix)
      name = base + "_" + std::to_string(suffix);
    chart_names.push_back(name);
    chart_weights.push_back(weights[v]);
  }
  const RingPtr chart_ring = make_ring(VarTable(chart_names, chart_weights));
  std::vector<std::size_t> to_chart(names.size(), 0);
  for (std::size_t c = 0; c < kept_big.size(); ++c) to_chart[kept_big[c]] = c;
  auto lower = [&](const Poly& p) {
    if (p.involves(0)) throw NotDivisible();
    return map_variables(p, to_chart, chart_ring);
  };

  std::vector<Poly> relations;
  for (const auto& b : basis) {
    if (b.involves(0)) continue;
    const Monomial& lm = b.leading_monomial();
    bool solves = false;
    if (lm.total_degree() == 1)
      for (std::size_t v = 1; v < y0; ++v) solves = solves || (lm[v] == 1);
    if (!solves) relations.push_back(lower(b));
  }

  Chart chart;
  chart.root_ring = parent.root_ring;
  chart.embedding = std::move(chart_embedding);
  chart.denominator = a_root;
  chart.label = to_string(a_root);
  chart.instance.algebra = GradedAlgebra(chart_ring, relations, inst.algebra.limits());
  chart.instance.action.r = inst.r();
  chart.instance.action.w = inst.w();

  for (std::size_t j = 0; j < n; ++j)
    chart.parent_images.push_back(lower(normal_form(lift(inst.algebra.variable(j)), basis)));
  for (const auto& p : parent.root_images)
    chart.root_images.push_back(chart.instance.algebra.reduce(substitute(p, chart.parent_images, chart_ring)));

  for (std::size_t i = 0; i < inst.r(); ++i) {
    std::vector<Poly> row;
    const Poly da = lift(derive(inst, i, a));
    for (std::size_t v : kept_big) {
      Poly image(big);
      if (v < y0) {
        image = lift(inst.action.images[i][p_order[v - 1]]);
      } else {
        const Poly& g = gens[y_of[v - y0]];
        // xi(g/a) = t*xi(g) - t^2*g*xi(a)
        image = t * lift(derive(inst, i, g)) - t * t * lift(g) * da;
      }
      row.push_back(chart.instance.algebra.reduce(lower(normal_form(image, basis))));
    }
    chart.instance.action.images.push_back(std::move(row));
  }
  return chart;
}

}  // namespace

std::vector<Chart> blowup_charts(const Chart& parent, const CentreData& centre) {
  if (centre.empty()) return {identity_chart(parent)};
  if (centre.core.empty()) throw PreconditionViolation("centre ideal is zero");
  const std::uint64_t i1 = *centre.min_degree;
  std::vector<Chart> charts;
  for (std::size_t k = 0; k < centre.core.size(); ++k) {
    const Poly& g = centre.core[k];
    if (g.ring().vars.weighted_degree(g.leading_monomial()) != i1) continue;
    charts.push_back(blowup_chart(parent, centre.core, k, i1));
  }
  return charts;
}

std::vector<Chart> modify(const Chart& parent, ModType kind) {
  const CentreData centre = kind == ModType::I ? centre_modI(parent.instance) : centre_modII(parent.instance);
  return blowup_charts(parent, centre);
}

}  // namespace conemod
