#ifndef CONEMOD_POLY_MONOMIAL_ORDER_HPP
#define CONEMOD_POLY_MONOMIAL_ORDER_HPP

#include <string>
#include <vector>

#include "conemod/poly/monomial.hpp"

namespace conemod {

/// A term order. Block orders compare block by block (earlier blocks dominate),
/// each block by graded reverse lex; the first block is the one eliminated.
class MonomialOrder {
 public:
  enum class Kind { GradedReverseLex, Lex, BlockElimination };

  MonomialOrder() = default;

  static MonomialOrder grevlex() { return MonomialOrder(Kind::GradedReverseLex, {}); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
  /// Variables [0, split) form the eliminated block.
  static MonomialOrder elimination(std::size_t split) {
    return MonomialOrder(Kind::BlockElimination, {split});
  }
  /// Several blocks; `splits` are the strictly increasing block boundaries.
  static MonomialOrder blocks(std::vector<std::size_t> splits) {
    return MonomialOrder(Kind::BlockElimination, std::move(splits));
  }

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& splits() const { return splits_; }

  /// Negative, zero or positive as a is smaller, equal or larger than b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string describe() const;
  bool operator==(const MonomialOrder& other) const = default;

 private:
  MonomialOrder(Kind kind, std::vector<std::size_t> splits)
      : kind_(kind), splits_(std::move(splits)) {}

  Kind kind_ = Kind::GradedReverseLex;
  std::vector<std::size_t> splits_;
};

}  // namespace conemod

#endif
