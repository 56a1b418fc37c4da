#ifndef CONEMOD_MODIFICATION_MODIFICATION_HPP
#define CONEMOD_MODIFICATION_MODIFICATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "conemod/cone/cone.hpp"
#include "conemod/fitting/fitting.hpp"

namespace conemod {

enum class ModType { I, II };

std::string to_string(ModType kind);

/// Largest xi-invariant ideal inside I + R, as canonical generators modulo R.
/// Returns {1} when I + R is the unit ideal.
std::vector<Poly> invariant_core_generators(const ConeInstance& inst, const std::vector<Poly>& seed);

/// The same ideal, including R.
Ideal invariant_core(const ConeInstance& inst, const std::vector<Poly>& seed);

struct CentreData {
  ModType kind = ModType::I;
  std::vector<Poly> seed;  // I, modulo R
  std::vector<Poly> core;  // J, canonical generators modulo R
  std::optional<std::uint64_t> min_degree;
  std::vector<std::string> warnings;

  /// J = <1>: the centre is empty and the modification is the identity.
  bool empty() const { return core.size() == 1 && core.front().is_unit(); }
};

CentreData centre_modI(const ConeInstance& inst);

/// Throws PreconditionViolation unless Fit_d = <1> and Fit_{d-1} lies in A_{>0}.
CentreData centre_modII(const ConeInstance& inst);

/// A ConeInstance together with its embedding into the root coordinates.
struct Chart {
  ConeInstance instance;
  std::string label;
  RingPtr root_ring;
  /// Per chart variable, a rational function of the root variables.
  std::vector<Fraction> embedding;
  /// Per parent variable, its image in this chart's ring (empty for roots).
  std::vector<Poly> parent_images;
  /// Per root variable, its image in this chart's ring.
  std::vector<Poly> root_images;
  /// The chosen denominator in root coordinates; unset for roots and identities.
  std::optional<Fraction> denominator;
  bool identity = false;
};

Chart root_chart(const ConeInstance& inst);

/// Charts of the blow-up along the centre, restricted to minimal-degree
/// denominators. An empty centre yields one identity chart.
std::vector<Chart> blowup_charts(const Chart& parent, const CentreData& centre);

std::vector<Chart> modify(const Chart& parent, ModType kind);

/// Identifier derived from a printed fraction: "e^2/(a11*a21)" -> "e2_a11a21".
std::string sanitize_name(const std::string& text);

}  // namespace conemod

#endif
