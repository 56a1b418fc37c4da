#ifndef CONEMOD_QUOTIENT_QUOTIENT_HPP
#define CONEMOD_QUOTIENT_QUOTIENT_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "conemod/cone/cone.hpp"
#include "conemod/modification/modification.hpp"

namespace conemod {

/// Fit_{d-1} = 0 and Fit_d = <1>.
bool check_uu(const ConeInstance& inst);

/// No unit-determinant slice candidate within the search budget.
class SliceNotFound : public std::runtime_error {
 public:
  SliceNotFound(const std::string& what, std::string best_minor)
      : std::runtime_error(what), best_minor(std::move(best_minor)) {}
  /// Determinant of the last candidate with a nonzero minor, printed; empty if none.
  std::string best_minor;
};

struct SliceSearch {
  std::uint64_t seed = 1;
  std::size_t budget = 1000;
};

/// b = r - d directions and weight-w elements with beta_i(f_j) = delta_ij.
/// Throws PreconditionViolation unless check_uu holds.
SliceData find_slice(const ConeInstance& inst, const SliceSearch& search = {});

class ReconstructionFailure : public std::runtime_error {
 public:
  explicit ReconstructionFailure(const std::string& what) : std::runtime_error(what) {}
};

struct InvariantGenerator {
  std::string name;
  Poly value;  // in the instance ring
  std::optional<Fraction> embedding;
  std::uint64_t degree = 0;
};

struct QuotientPresentation {
  std::vector<InvariantGenerator> generators;
  /// Polynomial ring on the generator names, weighted by degree.
  RingPtr ring;
  Ideal relations;
  SliceData slice;
  /// Ring of the reconstruction formulas: slice variables s1..sb, then the generator names.
  RingPtr reconstruction_ring;
  /// Per instance variable, its expression in the slice and the invariants.
  std::vector<Poly> reconstruction;
};

/// Invariants A^u as degree-0 variables plus hats of positive variables, the
/// relations among them, and the reconstruction A = A^u[f_1..f_b].
/// `bound` caps the Groebner degree of the presentation computation.
QuotientPresentation invariant_ring(const ConeInstance& inst, const SliceData& slice, unsigned bound = 12);

/// As above, with generator embeddings in the root coordinates of the chart.
QuotientPresentation invariant_ring(const Chart& chart, const SliceData& slice, unsigned bound = 12);

}  // namespace conemod

#endif
