#include "conemod/quotient/quotient.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "conemod/fitting/fitting.hpp"
#include "conemod/poly/parse.hpp"

namespace conemod {

bool check_uu(const ConeInstance& inst) {
  const auto report = fitting_report(inst);
  const long d = static_cast<long>(report.index.d);
  const auto& top = report.fit.at(d);
  return report.fit.at(d - 1).empty() && top.size() == 1 && top.front().is_unit();
}

namespace {

// Monomials of weighted degree `target` in the given variables.
void monomials_of_weight(const VarTable& vars, const std::vector<std::size_t>& pool, std::size_t from,
                         std::uint64_t target, Monomial& current, std::vector<Monomial>& out) {
  if (target == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t k = from; k < pool.size(); ++k) {
    const std::uint64_t wt = vars.weight(pool[k]);
    if (wt == 0 || wt > target) continue;
    ++current[pool[k]];
    monomials_of_weight(vars, pool, k, target - wt, current, out);
    --current[pool[k]];
  }
}

PolyMatrix adjugate(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  PolyMatrix adj(m.ring_ptr(), n, n);
  if (n == 1) {
    adj.at(0, 0) = Poly::constant(m.ring_ptr(), 1);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      PolyMatrix minor(m.ring_ptr(), n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(rr, cc++) = m.at(r, c);
        }
        ++rr;
      }
      const Poly cof = determinant(minor);
      adj.at(j, i) = ((i + j) % 2) ? -cof : cof;
    }
  return adj;
}

// Advances `idx` to the next b-subset of {0..n-1} in lexicographic order.
bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t b = idx.size();
  for (std::size_t k = b; k-- > 0;) {
    if (idx[k] < n - b + k) {
      ++idx[k];
      for (std::size_t m = k + 1; m < b; ++m) idx[m] = idx[m - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

SliceData find_slice(const ConeInstance& inst, const SliceSearch& search) {
  if (!check_uu(inst)) throw PreconditionViolation("the unipotent stabiliser dimension is not constant");
  const std::size_t r = inst.r();
  const std::size_t b = r - compute_index(inst).d;
  SliceData out;
  if (b == 0) return out;

  const RingPtr& ring = inst.ring_ptr();
  const Ideal& rel = inst.algebra.relations();
  std::vector<Monomial> monos;
  {
    Monomial current(ring->size());
    monomials_of_weight(inst.vars(), inst.algebra.positive_variables(), 0, inst.w(), current, monos);
  }
  std::vector<Poly> candidates;
  for (const auto& m : monos) {
    Poly p = inst.algebra.reduce(Poly::monomial(ring, m));
    if (!p.is_zero()) candidates.push_back(std::move(p));
  }
  if (candidates.size() < b) throw SliceNotFound("too few weight-w elements for a slice", "");

  std::size_t tried = 0;
  std::string best;
  auto attempt = [&](const std::vector<std::vector<Rational>>& betas) -> std::optional<SliceData> {
    // derived[k][i] = beta_i(candidate k)
    std::vector<std::vector<Poly>> derived;
    for (const auto& c : candidates) {
      std::vector<Poly> row;
      for (const auto& beta : betas) row.push_back(apply_combination(inst, beta, c));
      derived.push_back(std::move(row));
    }
    std::vector<std::size_t> pick(b);
    std::iota(pick.begin(), pick.end(), 0);
    do {
      if (tried++ >= search.budget) return std::nullopt;
      PolyMatrix d(ring, b, b);
      for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = 0; j < b; ++j) d.at(i, j) = derived[pick[j]][i];
      const Poly det = inst.algebra.reduce(determinant(d));
      if (det.is_zero()) continue;
      best = to_string(det);
      if (!rel.plus({det}).is_unit()) continue;
      const Poly u = cofactor_divide(Poly::constant(ring, 1), det, rel);
      // f' = u * adj(D)^T f gives beta_i(f'_j) = delta_ij.
      const PolyMatrix adj = adjugate(d);
      SliceData slice;
      slice.betas = betas;
      for (std::size_t j = 0; j < b; ++j) {
        Poly f(ring);
        for (std::size_t k = 0; k < b; ++k) f += adj.at(k, j) * candidates[pick[k]];
        slice.slices.push_back(inst.algebra.reduce(u * f));
      }
      for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = 0; j < b; ++j) {
          const Poly v = apply_combination(inst, betas[i], slice.slices[j]);
          if (!inst.algebra.reduce(v - Poly::constant(ring, i == j ? 1 : 0)).is_zero())
            throw std::logic_error("find_slice: normalised slice fails beta_i(f_j) = delta_ij");
        }
      return slice;
    } while (next_subset(pick, candidates.size()));
    return std::nullopt;
  };

  std::vector<std::size_t> dirs(b);
  std::iota(dirs.begin(), dirs.end(), 0);
  do {
    std::vector<std::vector<Rational>> betas(b, std::vector<Rational>(r, 0));
    for (std::size_t i = 0; i < b; ++i) betas[i][dirs[i]] = 1;
    if (auto s = attempt(betas)) return *s;
  } while (tried < search.budget && next_subset(dirs, r));

  std::mt19937_64 rng(search.seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  while (tried < search.budget) {
    std::vector<std::vector<Rational>> betas(b, std::vector<Rational>(r, 0));
    for (auto& row : betas)
      for (auto& c : row) c = coeff(rng);
    if (auto s = attempt(betas)) return *s;
  }
  throw SliceNotFound("no unit-determinant slice within a budget of " + std::to_string(search.budget) +
                          " candidates",
                      best);
}

QuotientPresentation invariant_ring(const ConeInstance& inst, const SliceData& slice, unsigned bound) {
  const VarTable& vars = inst.vars();
  const std::size_t n = vars.size();
  const std::size_t b = slice.b();

  QuotientPresentation out;
  out.slice = slice;
  for (std::size_t j = 0; j < n; ++j) {
    const Poly x = inst.algebra.variable(j);
    if (vars.weight(j) == 0) {
      out.generators.push_back({vars.name(j), x, std::nullopt, 0});
      continue;
    }
    Poly h = hat_projection(inst, slice, x);
    if (h.is_zero()) continue;
    const std::string name = (h == x) ? vars.name(j) : "h_" + vars.name(j);
    out.generators.push_back({name, std::move(h), std::nullopt, vars.weight(j)});
  }

  std::vector<std::string> gen_names;
  std::vector<std::uint64_t> gen_weights;
  for (const auto& g : out.generators) {
    gen_names.push_back(g.name);
    gen_weights.push_back(g.degree);
  }
  out.ring = make_ring(VarTable(gen_names, gen_weights));

  // Ring: instance variables | s1..sb | generators, block order.
  std::vector<std::string> names = vars.names();
  std::vector<std::uint64_t> weights = vars.weights();
  std::vector<std::string> rec_names;
  std::vector<std::uint64_t> rec_weights;
  for (std::size_t j = 0; j < b; ++j) {
    rec_names.push_back("s" + std::to_string(j + 1));
    rec_weights.push_back(inst.w());
  }
  rec_names.insert(rec_names.end(), gen_names.begin(), gen_names.end());
  rec_weights.insert(rec_weights.end(), gen_weights.begin(), gen_weights.end());
  // Internal names avoid clashes with instance variables.
  for (std::size_t k = 0; k < rec_names.size(); ++k) {
    names.push_back("_q" + std::to_string(k));
    weights.push_back(rec_weights[k]);
  }
  const RingPtr big = make_ring(VarTable(names, weights), MonomialOrder::blocks({n, n + b}));
  out.reconstruction_ring = make_ring(VarTable(rec_names, rec_weights));

  std::vector<std::size_t> embed(n);
  std::iota(embed.begin(), embed.end(), 0);
  auto lift = [&](const Poly& p) { return map_variables(p, embed, big); };
  std::vector<Poly> gens;
  for (const auto& g : inst.algebra.relations().generators()) gens.push_back(lift(g));
  for (std::size_t j = 0; j < b; ++j) gens.push_back(Poly::variable(big, n + j) - lift(slice.slices[j]));
  for (std::size_t k = 0; k < out.generators.size(); ++k)
    gens.push_back(Poly::variable(big, n + b + k) - lift(out.generators[k].value));
  GroebnerLimits limits = inst.algebra.limits();
  limits.max_degree = bound;
  const auto basis = reduced_groebner_basis(gens, big, limits);

  std::vector<std::size_t> to_rec(big->size(), 0);
  for (std::size_t k = 0; k < rec_names.size(); ++k) to_rec[n + k] = k;
  std::vector<std::size_t> to_gen(big->size(), 0);
  for (std::size_t k = 0; k < gen_names.size(); ++k) to_gen[n + b + k] = k;
  auto free_of = [](const Poly& p, std::size_t lo, std::size_t hi) {
    for (std::size_t v = lo; v < hi; ++v)
      if (p.involves(v)) return false;
    return true;
  };

  std::vector<Poly> relations;
  for (const auto& g : basis) {
    if (!free_of(g, 0, n)) continue;
    if (!free_of(g, n, n + b))
      throw ReconstructionFailure("slice elements are algebraically dependent over the invariants: " + to_string(g));
    relations.push_back(map_variables(g, to_gen, out.ring));
  }
  out.relations = Ideal(out.ring, relations, inst.algebra.limits());

  for (std::size_t j = 0; j < n; ++j) {
    const Poly nf = normal_form(Poly::variable(big, j), basis);
    if (!free_of(nf, 0, n))
      throw ReconstructionFailure("variable " + vars.name(j) + " is not a polynomial in the slice and invariants");
    out.reconstruction.push_back(map_variables(nf, to_rec, out.reconstruction_ring));
  }
  return out;
}

QuotientPresentation invariant_ring(const Chart& chart, const SliceData& slice, unsigned bound) {
  QuotientPresentation out = invariant_ring(chart.instance, slice, bound);
  for (auto& g : out.generators) g.embedding = substitute(g.value, chart.embedding, chart.root_ring);
  return out;
}

}  // namespace conemod
