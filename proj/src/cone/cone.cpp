#include "conemod/cone/cone.hpp"

#include <map>

#include "conemod/poly/parse.hpp"

namespace conemod {

GradedAlgebra::GradedAlgebra(RingPtr ring, std::vector<Poly> relations, GroebnerLimits limits)
    : relations_(std::move(ring), std::move(relations), limits) {}

std::vector<std::size_t> GradedAlgebra::degree_zero_variables() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (vars().weight(i) == 0) out.push_back(i);
  return out;
}

std::vector<std::size_t> GradedAlgebra::positive_variables() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (vars().weight(i) > 0) out.push_back(i);
  return out;
}

std::vector<Poly> GradedAlgebra::positive_part() const {
  std::vector<Poly> out;
  for (std::size_t i : positive_variables()) out.push_back(variable(i));
  return out;
}

Poly derive(const ConeInstance& inst, std::size_t i, const Poly& p) {
  const RingPtr& ring = inst.ring_ptr();
  Poly out(ring);
  if (p.is_zero()) return out;
  const auto& images = inst.action.images.at(i);
  const auto support = p.support();
  for (std::size_t j = 0; j < support.size(); ++j) {
    if (!support[j] || images[j].is_zero()) continue;
    out += p.partial(j) * images[j];
  }
  return out;
}

Poly apply_derivation(const ConeInstance& inst, std::size_t i, const Poly& p) {
  return inst.algebra.reduce(derive(inst, i, p));
}

Poly apply_combination(const ConeInstance& inst, const std::vector<Rational>& coeffs, const Poly& p) {
  Poly out(inst.ring_ptr());
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (coeffs[k] != 0) out += coeffs[k] * derive(inst, k, p);
  return inst.algebra.reduce(out);
}

Fraction apply_derivation(const ConeInstance& inst, std::size_t i, const Fraction& q) {
  const Poly& n = q.numerator();
  const Poly d = q.denominator();
  const Poly top = derive(inst, i, n) * d - n * derive(inst, i, d);
  return Fraction::quotient(top, d * d);
}

bool VerificationReport::ok() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::vector<std::string> VerificationReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.passed) out.push_back(c.name);
  return out;
}

namespace {

void fail(VerificationCheck& check, const std::string& why) {
  if (check.passed) {
    check.passed = false;
    check.detail = why;
  } else {
    check.detail += "; " + why;
  }
}

std::string direction(std::size_t i) { return "xi" + std::to_string(i + 1); }

}  // namespace

VerificationReport verify_action(const ConeInstance& inst) {
  VerificationReport report;
  const auto& vars = inst.vars();
  const std::size_t n = vars.size();
  const std::size_t r = inst.r();
  const std::uint64_t w = inst.w();

  VerificationCheck shape{"action-shape", true, ""};
  if (w == 0) fail(shape, "grading weight w must be positive");
  if (inst.action.images.size() != r) fail(shape, "expected " + std::to_string(r) + " derivations");
  for (const auto& row : inst.action.images)
    if (row.size() != n) fail(shape, "derivation images must cover every variable");
  report.checks.push_back(shape);
  if (!shape.passed) return report;

  VerificationCheck nontrivial{"nontrivial-algebra", true, ""};
  if (inst.algebra.relations().is_unit()) fail(nontrivial, "relations generate the unit ideal");
  report.checks.push_back(nontrivial);

  VerificationCheck homogeneous{"homogeneous-relations", true, ""};
  for (const auto& g : inst.algebra.relations().generators())
    if (!is_homogeneous(g)) fail(homogeneous, "relation " + to_string(g) + " is not homogeneous");
  report.checks.push_back(homogeneous);

  VerificationCheck shift{"weight-shift", true, ""};
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Poly img = inst.algebra.reduce(inst.action.images[i][j]);
      if (img.is_zero()) continue;
      const auto deg = weighted_degree(img);
      const std::uint64_t x = vars.weight(j);
      if (x < w || !deg.is_homogeneous() || deg.value() != x - w)
        fail(shift, direction(i) + "(" + vars.name(j) + ") = " + to_string(img) + " does not have weight deg(" +
                        vars.name(j) + ") - w");
    }
  }
  report.checks.push_back(shift);

  VerificationCheck commute{"commutation", true, ""};
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = i + 1; k < r; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        const Poly a = derive(inst, i, inst.action.images[k][j]);
        const Poly b = derive(inst, k, inst.action.images[i][j]);
        if (!inst.algebra.is_zero(a - b))
          fail(commute, "[" + direction(i) + ", " + direction(k) + "](" + vars.name(j) + ") is not zero");
      }
    }
  }
  report.checks.push_back(commute);

  VerificationCheck preserved{"relations-preserved", true, ""};
  for (std::size_t i = 0; i < r; ++i)
    for (const auto& g : inst.algebra.relations().generators())
      if (!inst.algebra.is_zero(derive(inst, i, g)))
        fail(preserved, direction(i) + "(" + to_string(g) + ") is not in the relation ideal");
  report.checks.push_back(preserved);

  VerificationCheck nilpotent{"local-nilpotence", true, ""};
  if (shift.passed) {
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Poly p = inst.algebra.variable(j);
        const std::uint64_t steps = vars.weight(j) / w + 1;
        for (std::uint64_t s = 0; s < steps && !p.is_zero(); ++s) p = apply_derivation(inst, i, p);
        if (!p.is_zero()) fail(nilpotent, direction(i) + " is not nilpotent on " + vars.name(j));
      }
    }
  } else {
    fail(nilpotent, "weight-shift failed, nilpotence not established");
  }
  report.checks.push_back(nilpotent);
  return report;
}

RingPtr coaction_ring(const ConeInstance& inst) {
  std::vector<std::string> names;
  std::vector<std::uint64_t> weights;
  for (std::size_t k = 0; k < inst.r(); ++k) {
    std::string u = "u" + std::to_string(k + 1);
    while (inst.vars().index_of(u)) u = "_" + u;
    names.push_back(u);
    weights.push_back(inst.w());
  }
  return make_ring(inst.vars().extended(names, weights), inst.ring_ptr()->order);
}

std::vector<std::pair<std::vector<unsigned>, Poly>> coaction_terms(const ConeInstance& inst, const Poly& p) {
  const std::size_t r = inst.r();
  std::map<std::vector<unsigned>, Poly> terms;
  const Poly start = inst.algebra.reduce(p);
  if (start.is_zero()) return {};
  terms.emplace(std::vector<unsigned>(r, 0), start);
  for (std::size_t i = 0; i < r; ++i) {
    std::map<std::vector<unsigned>, Poly> next;
    for (const auto& [n, c] : terms) {
      Poly cur = c;
      Rational factorial = 1;
      for (unsigned k = 0; !cur.is_zero(); ++k) {
        if (k > 0) factorial *= k;
        std::vector<unsigned> m = n;
        m[i] += k;
        next.emplace(m, cur * Rational(1 / factorial));
        cur = apply_derivation(inst, i, cur);
        if (k > 4096) throw std::runtime_error("coaction: derivation is not locally nilpotent");
      }
    }
    terms = std::move(next);
  }
  return {terms.begin(), terms.end()};
}

Poly coaction(const ConeInstance& inst, const Poly& p) {
  const RingPtr ext = coaction_ring(inst);
  const std::size_t n = inst.vars().size();
  std::vector<std::size_t> embed(n);
  for (std::size_t j = 0; j < n; ++j) embed[j] = j;
  Poly out(ext);
  for (const auto& [idx, c] : coaction_terms(inst, p)) {
    Monomial u(ext->size());
    for (std::size_t k = 0; k < idx.size(); ++k) u[n + k] = idx[k];
    out += map_variables(c, embed, ext).times_term(u, 1);
  }
  return out;
}

Poly hat_projection(const ConeInstance& inst, const SliceData& slice, const Poly& h) {
  const std::size_t b = slice.b();
  // beta^n h / n! keyed by n; the betas commute modulo R.
  std::map<std::vector<unsigned>, Poly> terms;
  const Poly start = inst.algebra.reduce(h);
  if (start.is_zero()) return start;
  terms.emplace(std::vector<unsigned>(b, 0), start);
  for (std::size_t i = 0; i < b; ++i) {
    std::map<std::vector<unsigned>, Poly> next;
    for (const auto& [n, c] : terms) {
      Poly cur = c;
      for (unsigned k = 0; !cur.is_zero(); ++k) {
        std::vector<unsigned> m = n;
        m[i] += k;
        next.emplace(m, cur);
        cur = apply_combination(inst, slice.betas[i], cur) * Rational(1, k + 1);
        if (k > 4096) throw std::runtime_error("hat_projection: derivation is not locally nilpotent");
      }
    }
    terms = std::move(next);
  }
  Poly out(inst.ring_ptr());
  for (const auto& [n, c] : terms) {
    unsigned total = 0;
    Poly term = c;
    for (std::size_t i = 0; i < b; ++i) {
      total += n[i];
      if (n[i]) term *= slice.slices[i].pow(n[i]);
    }
    out += (total % 2) ? -term : term;
  }
  return inst.algebra.reduce(out);
}

}  // namespace conemod
