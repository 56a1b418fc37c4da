#include "conemod/fitting/fitting.hpp"

#include <algorithm>

namespace conemod {

std::strong_ordering IndexPair::operator<=>(const IndexPair& other) const {
  if (d != other.d) return d <=> other.d;
  if (e == other.e) return std::strong_ordering::equal;
  if (!e) return std::strong_ordering::greater;
  if (!other.e) return std::strong_ordering::less;
  return *e <=> *other.e;
}

std::string to_string(const IndexPair& index) {
  return "(" + std::to_string(index.d) + "," + (index.e ? std::to_string(*index.e) : std::string("inf")) + ")";
}

PresentationMatrix presentation_matrix(const ConeInstance& inst) {
  const auto rows = inst.algebra.positive_variables();
  PresentationMatrix out{PolyMatrix(inst.ring_ptr(), rows.size(), inst.r()), rows};
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (std::size_t i = 0; i < inst.r(); ++i)
      out.matrix.at(k, i) = inst.algebra.reduce(inst.action.images[i][rows[k]]);
  return out;
}

std::vector<Poly> fitting_generators(const ConeInstance& inst, const PresentationMatrix& m, long d) {
  const long r = static_cast<long>(inst.r());
  if (d >= r) return {Poly::constant(inst.ring_ptr(), 1)};
  if (d < 0) return {};
  const auto size = static_cast<std::size_t>(r - d);
  return canonical_generators(minors(m.matrix, size), inst.algebra.relations());
}

Ideal fitting_ideal(const ConeInstance& inst, long d) {
  return inst.algebra.relations().plus(fitting_generators(inst, presentation_matrix(inst), d));
}

std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::size_t stab_dim_at_point(const ConeInstance& inst, const std::vector<Rational>& point) {
  if (point.size() != inst.vars().size()) throw std::invalid_argument("point has the wrong number of coordinates");
  for (const auto& g : inst.algebra.relations().generators())
    if (evaluate(g, point) != 0) throw PointNotOnVariety();
  const auto m = presentation_matrix(inst);
  std::vector<std::vector<Rational>> rows;
  for (std::size_t k = 0; k < m.matrix.rows(); ++k) {
    std::vector<Rational> row;
    for (std::size_t i = 0; i < m.matrix.cols(); ++i) row.push_back(evaluate(m.matrix.at(k, i), point));
    rows.push_back(std::move(row));
  }
  return inst.r() - rational_rank(std::move(rows));
}

namespace {

bool has_degree_zero_generator(const std::vector<Poly>& gens) {
  return std::any_of(gens.begin(), gens.end(), [](const Poly& g) {
    const auto deg = weighted_degree(g);
    return deg.is_homogeneous() && deg.value() == 0;
  });
}

}  // namespace

IndexPair index_from_fitting(const ConeInstance& inst, const std::map<long, std::vector<Poly>>& fit) {
  const long r = static_cast<long>(inst.r());
  IndexPair index;
  long d = 0;
  while (d < r && !has_degree_zero_generator(fit.at(d))) ++d;
  index.d = static_cast<std::uint64_t>(d);
  const auto& below = fit.at(d - 1);
  for (const auto& g : below) {
    for (const auto& t : g.terms()) {
      const std::uint64_t value = inst.vars().weighted_degree(t.mono);
      if (!index.e || value < *index.e) index.e = value;
    }
  }
  return index;
}

FittingReport fitting_report(const ConeInstance& inst) {
  FittingReport report{presentation_matrix(inst), {}, {}};
  const long r = static_cast<long>(inst.r());
  for (long d = -1; d <= r; ++d) report.fit[d] = fitting_generators(inst, report.matrix, d);
  report.index = index_from_fitting(inst, report.fit);
  return report;
}

IndexPair compute_index(const ConeInstance& inst) { return fitting_report(inst).index; }

}  // namespace conemod
