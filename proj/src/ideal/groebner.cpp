#include "conemod/ideal/groebner.hpp"

#include <algorithm>
#include <optional>

namespace conemod {

namespace {

struct Element {
  Poly value;
  Poly tag;
  std::uint64_t sugar = 0;
  bool active = true;
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint64_t sugar;
};

class Engine {
 public:
  Engine(RingPtr ring, bool tracked, const GroebnerLimits& limits)
      : ring_(std::move(ring)), tracked_(tracked), limits_(limits) {}

  void add_generator(const Poly& p, const Poly& tag) {
    Poly tag_copy = tag;
    Poly reduced = reduce(p, tracked_ ? &tag_copy : nullptr);
    if (reduced.is_zero()) return;
    insert(std::move(reduced), std::move(tag_copy), p.total_degree());
  }

  void run() {
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      const std::size_t k = select_pair();
      Pair pair = std::move(pairs_[k]);
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(k));
      if (limits_.max_pairs && ++processed > limits_.max_pairs)
        throw ResourceLimitExceeded("groebner: pair cap of " + std::to_string(limits_.max_pairs) +
                                    " exceeded");
      if (limits_.max_degree && pair.sugar > limits_.max_degree)
        throw ResourceLimitExceeded("groebner: degree cap of " + std::to_string(limits_.max_degree) +
                                    " exceeded");
      Poly tag(ring_);
      Poly s = s_polynomial(pair, tracked_ ? &tag : nullptr);
      Poly h = reduce(s, tracked_ ? &tag : nullptr);
      if (!h.is_zero()) insert(std::move(h), std::move(tag), pair.sugar);
    }
  }

  std::vector<Element> active_elements() const {
    std::vector<Element> out;
    for (const auto& e : basis_)
      if (e.active) out.push_back(e);
    return out;
  }

  Poly reduce(const Poly& p, Poly* tag) const {
    Poly rest = p;
    std::vector<Term> remainder;
    while (!rest.is_zero()) {
      const Term& lt = rest.leading_term();
      const Element* divisor = find_divisor(lt.mono);
      if (divisor) {
        const Rational c = lt.coef / divisor->value.leading_coefficient();
        const Monomial m = lt.mono / divisor->value.leading_monomial();
        if (tag) tag->subtract_multiple(c, m, divisor->tag);
        rest.subtract_multiple(c, m, divisor->value);
      } else {
        remainder.push_back(lt);
        rest.subtract_multiple(Rational(1), Monomial(lt.mono.size()),
                               Poly::monomial(ring_, lt.mono, lt.coef));
      }
    }
    return Poly::from_terms(ring_, std::move(remainder));
  }

 private:
  const Element* find_divisor(const Monomial& m) const {
    for (std::size_t k : active_)
      if (basis_[k].value.leading_monomial().divides(m)) return &basis_[k];
    return nullptr;
  }

  std::size_t select_pair() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
        continue;
      }
      const int c = ring_->order.compare(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && std::tie(a.i, a.j) < std::tie(b.i, b.j))) best = k;
    }
    return best;
  }

  Poly s_polynomial(const Pair& pair, Poly* tag) const {
    const Element& f = basis_[pair.i];
    const Element& g = basis_[pair.j];
    const Monomial mf = pair.lcm / f.value.leading_monomial();
    const Monomial mg = pair.lcm / g.value.leading_monomial();
    const Rational cf = Rational(1) / f.value.leading_coefficient();
    const Rational cg = Rational(1) / g.value.leading_coefficient();
    Poly s = f.value.times_term(mf, cf);
    s.subtract_multiple(cg, mg, g.value);
    if (tag) {
      *tag = f.tag.times_term(mf, cf);
      tag->subtract_multiple(cg, mg, g.tag);
    }
    return s;
  }

  std::uint64_t pair_sugar(std::size_t i, std::size_t j, const Monomial& lcm) const {
    const auto& a = basis_[i];
    const auto& b = basis_[j];
    const std::uint64_t d = lcm.total_degree();
    return std::max(a.sugar + d - a.value.leading_monomial().total_degree(),
                    b.sugar + d - b.value.leading_monomial().total_degree());
  }

  // Gebauer-Moeller installation of a new element.
  void insert(Poly h, Poly tag, std::uint64_t sugar) {
    if (tracked_) {
      const Rational inv = Rational(1) / h.leading_coefficient();
      tag *= inv;
    }
    h = h.monic();
    const std::size_t t = basis_.size();
    basis_.push_back(Element{std::move(h), std::move(tag), sugar, true});
    const Monomial& lt_h = basis_[t].value.leading_monomial();

    struct Candidate {
      std::size_t g;
      Monomial lcm;
      bool coprime;
      bool keep = true;
    };
    std::vector<Candidate> cands;
    for (std::size_t g : active_) {
      const Monomial& lt_g = basis_[g].value.leading_monomial();
      cands.push_back(Candidate{g, Monomial::lcm(lt_h, lt_g), lt_h.coprime(lt_g)});
    }
    // Chain criterion among the new pairs.
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (cands[a].coprime) continue;
      for (std::size_t b = 0; b < cands.size(); ++b) {
        if (a == b || !cands[b].keep) continue;
        if (cands[b].lcm.divides(cands[a].lcm) &&
            (cands[b].lcm != cands[a].lcm || b < a)) {
          cands[a].keep = false;
          break;
        }
      }
    }
    // Among pairs with identical lcm keep at most one; drop all if any is coprime.
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (!cands[a].keep) continue;
      for (std::size_t b = a + 1; b < cands.size(); ++b) {
        if (cands[b].keep && cands[b].lcm == cands[a].lcm) {
          if (cands[b].coprime) cands[a].coprime = true;
          cands[b].keep = false;
        }
      }
    }
    // Prune old pairs whose lcm is divisible by lt(h) with distinct lcms.
    std::vector<Pair> kept;
    kept.reserve(pairs_.size());
    for (auto& p : pairs_) {
      if (lt_h.divides(p.lcm)) {
        const Monomial l1 = Monomial::lcm(basis_[p.i].value.leading_monomial(), lt_h);
        const Monomial l2 = Monomial::lcm(basis_[p.j].value.leading_monomial(), lt_h);
        if (l1 != p.lcm && l2 != p.lcm) continue;
      }
      kept.push_back(std::move(p));
    }
    pairs_ = std::move(kept);
    for (auto& c : cands) {
      if (!c.keep || c.coprime) continue;
      const std::uint64_t s = pair_sugar(c.g, t, c.lcm);
      pairs_.push_back(Pair{c.g, t, std::move(c.lcm), s});
    }
    // Retire elements whose leading monomial is now redundant.
    std::vector<std::size_t> still;
    for (std::size_t g : active_) {
      if (lt_h.divides(basis_[g].value.leading_monomial())) {
        basis_[g].active = false;
      } else {
        still.push_back(g);
      }
    }
    still.push_back(t);
    active_ = std::move(still);
  }

  RingPtr ring_;
  bool tracked_;
  GroebnerLimits limits_;
  std::vector<Element> basis_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

RingPtr common_ring(const std::vector<Poly>& polys, const RingPtr& fallback) {
  if (fallback) return fallback;
  for (const auto& p : polys)
    if (p.ring_ptr()) return p.ring_ptr();
  return nullptr;
}

}  // namespace

std::vector<Poly> reduced_groebner_basis(const std::vector<Poly>& generators, const RingPtr& ring_in,
                                         const GroebnerLimits& limits) {
  const RingPtr ring = common_ring(generators, ring_in);
  Engine engine(ring, false, limits);
  std::vector<Poly> gens;
  for (const auto& g : generators)
    if (!g.is_zero()) gens.push_back(g.in_ring(ring));
  std::sort(gens.begin(), gens.end(), [&](const Poly& a, const Poly& b) {
    return ring->order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  for (const auto& g : gens) {
    engine.add_generator(g, Poly(ring));
    engine.run();
  }
  auto elements = engine.active_elements();
  std::sort(elements.begin(), elements.end(), [&](const Element& a, const Element& b) {
    return ring->order.compare(a.value.leading_monomial(), b.value.leading_monomial()) < 0;
  });
  std::vector<Poly> basis;
  for (const auto& e : elements) basis.push_back(e.value);
  // Tail reduction against the other elements.
  for (std::size_t k = 0; k < basis.size(); ++k) {
    std::vector<Poly> others;
    for (std::size_t m = 0; m < basis.size(); ++m)
      if (m != k) others.push_back(basis[m]);
    const Term lead = basis[k].leading_term();
    Poly tail = basis[k] - Poly::monomial(ring, lead.mono, lead.coef);
    basis[k] = (Poly::monomial(ring, lead.mono, lead.coef) + normal_form(tail, others)).monic();
  }
  return basis;
}

Poly normal_form(const Poly& p, const std::vector<Poly>& basis) {
  if (p.is_zero()) return p;
  const RingPtr& ring = basis.empty() ? p.ring_ptr() : basis.front().ring_ptr();
  Poly rest = p.in_ring(ring);
  std::vector<Term> remainder;
  while (!rest.is_zero()) {
    const Term lt = rest.leading_term();
    const Poly* divisor = nullptr;
    for (const auto& g : basis) {
      if (g.leading_monomial().divides(lt.mono)) {
        divisor = &g;
        break;
      }
    }
    if (divisor) {
      rest.subtract_multiple(lt.coef / divisor->leading_coefficient(),
                             lt.mono / divisor->leading_monomial(), *divisor);
    } else {
      remainder.push_back(lt);
      rest -= Poly::monomial(ring, lt.mono, lt.coef);
    }
  }
  return Poly::from_terms(ring, std::move(remainder));
}

std::vector<TaggedPoly> tagged_groebner_basis(const std::vector<TaggedPoly>& generators,
                                              const GroebnerLimits& limits) {
  if (generators.empty()) return {};
  const RingPtr ring = generators.front().value.ring_ptr();
  Engine engine(ring, true, limits);
  for (const auto& g : generators) {
    if (g.value.is_zero()) continue;
    engine.add_generator(g.value, g.tag);
    engine.run();
  }
  std::vector<TaggedPoly> out;
  for (auto& e : engine.active_elements()) out.push_back(TaggedPoly{e.value, e.tag});
  return out;
}

TaggedPoly tagged_normal_form(const Poly& p, const std::vector<TaggedPoly>& basis) {
  const RingPtr& ring = p.ring_ptr();
  Poly rest = p;
  Poly tag(basis.empty() ? ring : basis.front().tag.ring_ptr());
  std::vector<Term> remainder;
  while (!rest.is_zero()) {
    const Term lt = rest.leading_term();
    const TaggedPoly* divisor = nullptr;
    for (const auto& g : basis) {
      if (g.value.leading_monomial().divides(lt.mono)) {
        divisor = &g;
        break;
      }
    }
    if (divisor) {
      const Rational c = lt.coef / divisor->value.leading_coefficient();
      const Monomial m = lt.mono / divisor->value.leading_monomial();
      rest.subtract_multiple(c, m, divisor->value);
      // The quotient term contributes +c*m times the divisor's tag.
      tag.subtract_multiple(-c, m, divisor->tag);
    } else {
      remainder.push_back(lt);
      rest -= Poly::monomial(ring, lt.mono, lt.coef);
    }
  }
  return TaggedPoly{Poly::from_terms(ring, std::move(remainder)), tag};
}

bool satisfies_buchberger_criterion(const std::vector<Poly>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const auto& f = basis[i];
      const auto& g = basis[j];
      const Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
      Poly s = f.times_term(l / f.leading_monomial(), Rational(1) / f.leading_coefficient());
      s.subtract_multiple(Rational(1) / g.leading_coefficient(), l / g.leading_monomial(), g);
      if (!normal_form(s, basis).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace conemod
