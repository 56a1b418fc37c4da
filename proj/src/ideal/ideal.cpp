#include "conemod/ideal/ideal.hpp"

#include <algorithm>
#include <string>

namespace conemod {

Ideal::Ideal(RingPtr ring, std::vector<Poly> generators, GroebnerLimits limits)
    : ring_(std::move(ring)), limits_(limits), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators)
    if (!g.is_zero()) gens_.push_back(g.in_ring(ring_));
}

const std::vector<Poly>& Ideal::basis() const {
  std::call_once(cache_->once, [this] { cache_->basis = reduced_groebner_basis(gens_, ring_, limits_); });
  return cache_->basis;
}

Poly Ideal::normal_form(const Poly& p) const {
  if (gens_.empty()) return p.in_ring(ring_);
  return conemod::normal_form(p.in_ring(ring_), basis());
}

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.generators().begin(), other.generators().end(),
                     [&](const Poly& g) { return contains(g); });
}

bool Ideal::is_unit() const {
  if (gens_.empty()) return false;
  const auto& b = basis();
  return b.size() == 1 && b.front().is_unit();
}

Ideal Ideal::plus(const std::vector<Poly>& more) const {
  std::vector<Poly> all = gens_;
  for (const auto& g : more) all.push_back(g.in_ring(ring_));
  return Ideal(ring_, std::move(all), limits_);
}

std::vector<Poly> groebner_basis(const Ideal& ideal, const MonomialOrder& order) {
  if (order == ideal.ring().order) return ideal.basis();
  return reduced_groebner_basis(ideal.generators(), with_order(ideal.ring_ptr(), order), ideal.limits());
}

namespace {

// Ring on `first` followed by `second` variables, eliminating the first block.
struct Split {
  RingPtr ring;
  std::vector<std::size_t> to_split;    // original index -> split index
  std::vector<std::size_t> from_split;  // split index -> original index
  std::size_t eliminated = 0;
};

Split split_ring(const Ring& ring, const std::vector<bool>& keep) {
  Split s;
  const std::size_t n = ring.size();
  std::vector<std::string> names;
  std::vector<std::uint64_t> weights;
  s.to_split.assign(n, 0);
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < n; ++i) {
      if (keep[i] != (pass == 1)) continue;
      s.to_split[i] = names.size();
      s.from_split.push_back(i);
      names.push_back(ring.vars.name(i));
      weights.push_back(ring.vars.weight(i));
    }
    if (pass == 0) s.eliminated = names.size();
  }
  s.ring = make_ring(VarTable(names, weights), MonomialOrder::elimination(s.eliminated));
  return s;
}

}  // namespace

Ideal eliminate(const Ideal& ideal, const std::vector<bool>& keep) {
  if (keep.size() != ideal.ring().size()) throw std::invalid_argument("eliminate: mask size");
  if (std::all_of(keep.begin(), keep.end(), [](bool b) { return b; })) return ideal;
  const Split s = split_ring(ideal.ring(), keep);
  std::vector<Poly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(map_variables(g, s.to_split, s.ring));
  const auto basis = reduced_groebner_basis(gens, s.ring, ideal.limits());
  std::vector<Poly> kept;
  for (const auto& b : basis) {
    bool free = true;
    for (std::size_t i = 0; i < s.eliminated && free; ++i) free = !b.involves(i);
    if (free) kept.push_back(map_variables(b, s.from_split, ideal.ring_ptr()));
  }
  return Ideal(ideal.ring_ptr(), std::move(kept), ideal.limits());
}

Ideal saturate(const Ideal& ideal, const Poly& f) {
  const Ring& ring = ideal.ring();
  const std::size_t n = ring.size();
  std::vector<std::string> names{"_sat"};
  std::vector<std::uint64_t> weights{0};
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(ring.vars.name(i));
    weights.push_back(ring.vars.weight(i));
  }
  auto big = make_ring(VarTable(names, weights), MonomialOrder::elimination(1));
  std::vector<std::size_t> shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = i + 1;
  std::vector<Poly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(map_variables(g, shift, big));
  gens.push_back(Poly::variable(big, 0) * map_variables(f, shift, big) - Poly::constant(big, 1));
  const auto basis = reduced_groebner_basis(gens, big, ideal.limits());
  std::vector<std::size_t> back(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) back[i + 1] = i;
  std::vector<Poly> kept;
  for (const auto& b : basis)
    if (!b.involves(0)) kept.push_back(map_variables(b, back, ideal.ring_ptr()));
  return Ideal(ideal.ring_ptr(), std::move(kept), ideal.limits());
}

Ideal map_preimage(const RingPtr& source, const std::vector<Poly>& images, const Ideal& target_ideal) {
  if (images.size() != source->size()) throw std::invalid_argument("map_preimage: image count");
  const Ring& target = target_ideal.ring();
  const std::size_t nt = target.size();
  const std::size_t ns = source->size();
  std::vector<std::string> names;
  std::vector<std::uint64_t> weights;
  for (std::size_t i = 0; i < nt; ++i) {
    names.push_back("_t" + std::to_string(i));
    weights.push_back(target.vars.weight(i));
  }
  for (std::size_t j = 0; j < ns; ++j) {
    names.push_back("_s" + std::to_string(j));
    weights.push_back(source->vars.weight(j));
  }
  auto big = make_ring(VarTable(names, weights), MonomialOrder::elimination(nt));
  std::vector<std::size_t> tmap(nt);
  for (std::size_t i = 0; i < nt; ++i) tmap[i] = i;
  std::vector<Poly> gens;
  for (const auto& g : target_ideal.generators()) gens.push_back(map_variables(g, tmap, big));
  for (std::size_t j = 0; j < ns; ++j)
    gens.push_back(Poly::variable(big, nt + j) - map_variables(images[j].in_ring(target_ideal.ring_ptr()), tmap, big));
  const auto basis = reduced_groebner_basis(gens, big, target_ideal.limits());
  std::vector<std::size_t> back(nt + ns, 0);
  for (std::size_t j = 0; j < ns; ++j) back[nt + j] = j;
  std::vector<Poly> kept;
  for (const auto& b : basis) {
    bool free = true;
    for (std::size_t i = 0; i < nt && free; ++i) free = !b.involves(i);
    if (free) kept.push_back(map_variables(b, back, source));
  }
  return Ideal(source, std::move(kept), target_ideal.limits());
}

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), cells_(rows * cols, Poly(ring_)) {}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

namespace {

Poly det_sub(const PolyMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  const std::size_t k = rows.size();
  if (k == 0) return Poly::constant(m.ring_ptr(), 1);
  if (k == 1) return m.at(rows[0], cols[0]);
  Poly sum(m.ring_ptr());
  const std::vector<std::size_t> rest(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < k; ++j) {
    const Poly& entry = m.at(rows[0], cols[j]);
    if (entry.is_zero()) continue;
    std::vector<std::size_t> sub = cols;
    sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(j));
    Poly term = entry * det_sub(m, rest, sub);
    if (j % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Poly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  std::vector<std::size_t> idx(m.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return det_sub(m, idx, idx);
}

std::vector<Poly> minors(const PolyMatrix& m, std::size_t k) {
  if (k == 0) return {Poly::constant(m.ring_ptr(), 1)};
  if (k > m.rows() || k > m.cols()) return {};
  std::vector<std::vector<std::size_t>> rs, cs;
  std::vector<std::size_t> cur;
  subsets(m.rows(), k, 0, cur, rs);
  subsets(m.cols(), k, 0, cur, cs);
  std::vector<Poly> out;
  for (const auto& r : rs) {
    for (const auto& c : cs) {
      Poly d = det_sub(m, r, c);
      if (d.is_zero()) continue;
      if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(std::move(d));
    }
  }
  return out;
}

Poly cofactor_divide(const Poly& n, const Poly& a, const Ideal& k) {
  const RingPtr& ring = k.ring_ptr();
  const Poly nn = n.in_ring(ring);
  if (nn.is_zero() || k.contains(nn)) return Poly(ring);
  std::vector<TaggedPoly> gens{TaggedPoly{a.in_ring(ring), Poly::constant(ring, 1)}};
  for (const auto& g : k.basis()) gens.push_back(TaggedPoly{g, Poly(ring)});
  const auto basis = tagged_groebner_basis(gens, k.limits());
  const TaggedPoly r = tagged_normal_form(nn, basis);
  if (!r.value.is_zero()) throw NotDivisible();
  return k.normal_form(r.tag);
}

namespace {

std::uint64_t degree_key(const Poly& p) {
  const auto d = weighted_degree(p);
  return d.is_homogeneous() ? d.value() : p.ring().vars.weighted_degree(p.leading_monomial());
}

}  // namespace

std::vector<Poly> prune_generators(std::vector<Poly> gens, const Ideal& modulo) {
  std::vector<Poly> kept;
  for (auto& g : gens) {
    Poly r = modulo.normal_form(g);
    if (r.is_zero()) continue;
    r = r.monic();
    if (std::find(kept.begin(), kept.end(), r) == kept.end()) kept.push_back(std::move(r));
  }
  const auto& order = modulo.ring().order;
  std::sort(kept.begin(), kept.end(), [&](const Poly& a, const Poly& b) {
    const auto da = degree_key(a), db = degree_key(b);
    if (da != db) return da < db;
    return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  for (std::size_t k = kept.size(); k-- > 0;) {
    if (kept.size() == 1) break;
    std::vector<Poly> others;
    for (std::size_t m = 0; m < kept.size(); ++m)
      if (m != k) others.push_back(kept[m]);
    if (modulo.plus(others).contains(kept[k])) kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return kept;
}

std::vector<Poly> canonical_generators(const std::vector<Poly>& gens, const Ideal& modulo) {
  const Ideal sum = modulo.plus(gens);
  if (sum.is_unit()) return {Poly::constant(modulo.ring_ptr(), 1)};
  return prune_generators(sum.basis(), modulo);
}

}  // namespace conemod
