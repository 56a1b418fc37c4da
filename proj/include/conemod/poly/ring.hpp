#ifndef CONEMOD_POLY_RING_HPP
#define CONEMOD_POLY_RING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "conemod/poly/monomial_order.hpp"

namespace conemod {

/// Ordered variable names with their grading weights.
class VarTable {
 public:
  VarTable() = default;
  VarTable(std::vector<std::string> names, std::vector<std::uint64_t> weights);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::uint64_t weight(std::size_t i) const { return weights_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::uint64_t>& weights() const { return weights_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  std::uint64_t weighted_degree(const Monomial& m) const;

  /// Appends variables; throws on duplicate names.
  VarTable extended(const std::vector<std::string>& names,
                    const std::vector<std::uint64_t>& weights) const;

  bool operator==(const VarTable& other) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::uint64_t> weights_;
};

/// A polynomial ring over the rationals: variables plus the active term order.
struct Ring {
  VarTable vars;
  MonomialOrder order;

  std::size_t size() const { return vars.size(); }
  bool operator==(const Ring& other) const = default;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(VarTable vars, MonomialOrder order = MonomialOrder::grevlex());
/// Same variables, different order.
RingPtr with_order(const RingPtr& ring, MonomialOrder order);

bool same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace conemod

#endif
