#ifndef CONEMOD_FITTING_FITTING_HPP
#define CONEMOD_FITTING_FITTING_HPP

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "conemod/cone/cone.hpp"

namespace conemod {

/// (d, e) with e = nullopt standing for infinity. Ordered lexicographically.
struct IndexPair {
  std::uint64_t d = 0;
  std::optional<std::uint64_t> e;

  bool infinite() const { return !e.has_value(); }
  std::strong_ordering operator<=>(const IndexPair& other) const;
  bool operator==(const IndexPair& other) const = default;
};

std::string to_string(const IndexPair& index);

/// Rows: positive-weight variables; columns: directions. Entry xi_i(x_j) mod R.
struct PresentationMatrix {
  PolyMatrix matrix;
  std::vector<std::size_t> row_variables;
};

PresentationMatrix presentation_matrix(const ConeInstance& inst);

/// Fit_d as canonical generators reduced modulo R. Empty means the zero
/// ideal; {1} means the unit ideal.
std::vector<Poly> fitting_generators(const ConeInstance& inst, const PresentationMatrix& m, long d);

/// Fit_d(Q) as an ideal of the ambient ring that contains R.
Ideal fitting_ideal(const ConeInstance& inst, long d);

class PointNotOnVariety : public std::invalid_argument {
 public:
  PointNotOnVariety() : std::invalid_argument("point does not satisfy the relations") {}
};

/// r - rank M(x).
std::size_t stab_dim_at_point(const ConeInstance& inst, const std::vector<Rational>& point);

/// Rank of a rational matrix.
std::size_t rational_rank(std::vector<std::vector<Rational>> rows);

IndexPair compute_index(const ConeInstance& inst);

struct FittingReport {
  PresentationMatrix matrix;
  std::map<long, std::vector<Poly>> fit;  // d in -1..r
  IndexPair index;
};

FittingReport fitting_report(const ConeInstance& inst);

/// Index from precomputed Fitting generators.
IndexPair index_from_fitting(const ConeInstance& inst, const std::map<long, std::vector<Poly>>& fit);

}  // namespace conemod

#endif
