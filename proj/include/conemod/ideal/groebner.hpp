#ifndef CONEMOD_IDEAL_GROEBNER_HPP
#define CONEMOD_IDEAL_GROEBNER_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "conemod/poly/poly.hpp"

namespace conemod {

/// Caps on a single Buchberger run. A cap of zero means "no cap".
struct GroebnerLimits {
  std::size_t max_pairs = 500000;
  std::uint64_t max_degree = 0;
};

/// Raised when a computation hits a configured cap. Distinct from any
/// mathematical outcome.
class ResourceLimitExceeded : public std::runtime_error {
 public:
  explicit ResourceLimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Reduced Groebner basis of the generators, in the order of `ring`. The
/// generators are moved into `ring` first (same variables required). Output is
/// monic and sorted by increasing leading monomial.
std::vector<Poly> reduced_groebner_basis(const std::vector<Poly>& generators, const RingPtr& ring,
                                         const GroebnerLimits& limits = {});

/// Full reduction of p by `basis` (all in one ring).
Poly normal_form(const Poly& p, const std::vector<Poly>& basis);

/// A basis element together with its tag: the running linear combination of
/// generator tags it was built from.
struct TaggedPoly {
  Poly value;
  Poly tag;
};

/// Groebner basis that carries tags along every linear step. If generator g_k
/// has tag t_k, every output element h satisfies h = sum c_k g_k with tag
/// sum c_k t_k. Not interreduced.
std::vector<TaggedPoly> tagged_groebner_basis(const std::vector<TaggedPoly>& generators,
                                              const GroebnerLimits& limits = {});

/// Reduces p by a tagged basis. Returns the remainder and the tag combination
/// of the quotients.
TaggedPoly tagged_normal_form(const Poly& p, const std::vector<TaggedPoly>& basis);

/// True when every S-polynomial of `basis` reduces to zero.
bool satisfies_buchberger_criterion(const std::vector<Poly>& basis);

}  // namespace conemod

#endif
