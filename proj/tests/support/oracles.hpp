#ifndef CONEMOD_TESTS_SUPPORT_ORACLES_HPP
#define CONEMOD_TESTS_SUPPORT_ORACLES_HPP

// Independent reference computations used by unit and acceptance tests. None
// of this goes through the Groebner engine.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "conemod/poly/poly.hpp"

namespace oracle {

using conemod::Monomial;
using conemod::Poly;
using conemod::Rational;
using conemod::RingPtr;
using conemod::Term;

using Row = std::vector<Rational>;

/// Row-reduces in place, returns the rank.
inline std::size_t row_reduce(std::vector<Row>& m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    const Rational inv = 1 / m[rank][c];
    for (auto& x : m[rank]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline std::size_t rank(std::vector<Row> m) { return row_reduce(m); }

/// Monomials of total degree exactly d in n variables.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  Monomial cur(n);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      cur[i] = e;
      self(self, i + 1, left - e);
    }
  };
  if (n == 0) return {cur};
  rec(rec, 0, d);
  return out;
}

/// Coordinates of a list of polynomials over a fixed monomial basis.
class Coordinates {
 public:
  explicit Coordinates(const std::vector<Monomial>& basis) {
    for (std::size_t i = 0; i < basis.size(); ++i) index_[basis[i].exponents()] = i;
  }
  bool encode(const Poly& p, Row& row) const {
    row.assign(index_.size(), 0);
    for (const auto& t : p.terms()) {
      auto it = index_.find(t.mono.exponents());
      if (it == index_.end()) return false;
      row[it->second] = t.coef;
    }
    return true;
  }

 private:
  std::map<std::vector<conemod::Exponent>, std::size_t> index_;
};

/// Membership of a homogeneous p (standard grading) in the ideal of
/// homogeneous generators: p is in I iff p lies in the span of m*g with
/// deg(m*g) = deg(p). Exact for homogeneous data.
inline bool homogeneous_member(const Poly& p, const std::vector<Poly>& gens) {
  if (p.is_zero()) return true;
  const std::size_t n = p.variable_count();
  const unsigned d = static_cast<unsigned>(p.total_degree());
  const auto basis = monomials_of_degree(n, d);
  Coordinates coords(basis);
  std::vector<Row> rows;
  for (const auto& g : gens) {
    if (g.is_zero() || g.total_degree() > d) continue;
    for (const auto& m : monomials_of_degree(n, d - static_cast<unsigned>(g.total_degree()))) {
      Row row;
      coords.encode(g.times_term(m, 1), row);
      rows.push_back(std::move(row));
    }
  }
  const std::size_t r0 = rank(rows);
  Row target;
  coords.encode(p, target);
  rows.push_back(target);
  return rank(rows) == r0;
}

/// Random rational in [-range, range] with small denominators.
inline Rational random_rational(std::mt19937_64& rng, int range = 5) {
  const auto span = static_cast<std::uint64_t>(2 * range + 1);
  const long num = static_cast<long>(rng() % span) - range;
  const long den = static_cast<long>(rng() % 3) + 1;
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Random homogeneous polynomial of total degree d with up to `terms` terms.
inline Poly random_homogeneous(std::mt19937_64& rng, const RingPtr& ring, unsigned d, std::size_t terms) {
  const auto monos = monomials_of_degree(ring->size(), d);
  std::vector<Term> out;
  for (std::size_t k = 0; k < terms; ++k) {
    out.push_back(Term{monos[rng() % monos.size()], random_rational(rng)});
  }
  return Poly::from_terms(ring, std::move(out));
}

/// Random polynomial of total degree at most d.
inline Poly random_poly(std::mt19937_64& rng, const RingPtr& ring, unsigned d, std::size_t terms) {
  Poly p(ring);
  for (std::size_t k = 0; k < terms; ++k)
    p += random_homogeneous(rng, ring, static_cast<unsigned>(rng() % (d + 1)), 1);
  return p;
}

}  // namespace oracle

#endif
