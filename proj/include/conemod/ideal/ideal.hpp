#ifndef CONEMOD_IDEAL_IDEAL_HPP
#define CONEMOD_IDEAL_IDEAL_HPP

#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "conemod/ideal/groebner.hpp"
#include "conemod/poly/poly.hpp"

namespace conemod {

/// An ideal given by generators. The reduced basis for the ring's order is
/// computed on first use and shared between copies.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Poly> generators, GroebnerLimits limits = {});
  static Ideal zero(RingPtr ring, GroebnerLimits limits = {}) {
    return Ideal(std::move(ring), {}, limits);
  }

  const RingPtr& ring_ptr() const { return ring_; }
  const Ring& ring() const { return *ring_; }
  const std::vector<Poly>& generators() const { return gens_; }
  const GroebnerLimits& limits() const { return limits_; }

  const std::vector<Poly>& basis() const;
  Poly normal_form(const Poly& p) const;
  bool contains(const Poly& p) const { return normal_form(p).is_zero(); }
  bool contains(const Ideal& other) const;
  bool equals(const Ideal& other) const { return contains(other) && other.contains(*this); }
  bool is_unit() const;
  bool is_zero() const { return gens_.empty(); }

  /// Sum with extra generators.
  Ideal plus(const std::vector<Poly>& more) const;
  Ideal plus(const Ideal& other) const { return plus(other.generators()); }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Poly> basis;
  };
  RingPtr ring_;
  std::vector<Poly> gens_;
  GroebnerLimits limits_;
  std::shared_ptr<Cache> cache_;
};

/// Reduced basis of I under a different order on the same variables.
std::vector<Poly> groebner_basis(const Ideal& ideal, const MonomialOrder& order);

/// Intersection of I with the subring on the variables marked `keep`.
Ideal eliminate(const Ideal& ideal, const std::vector<bool>& keep);

/// I : f^infinity.
Ideal saturate(const Ideal& ideal, const Poly& f);

/// Kernel of k[source] -> target/I sending variable j to images[j].
Ideal map_preimage(const RingPtr& source, const std::vector<Poly>& images, const Ideal& target_ideal);

/// Dense matrix of polynomials over one ring.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const RingPtr& ring_ptr() const { return ring_; }
  Poly& at(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
  const Poly& at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }
  PolyMatrix transpose() const;

 private:
  RingPtr ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly> cells_;
};

Poly determinant(const PolyMatrix& m);

/// All nonzero k x k minors, without duplicates. k = 0 gives {1}; k larger than
/// either dimension gives nothing.
std::vector<Poly> minors(const PolyMatrix& m, std::size_t k);

class NotDivisible : public std::runtime_error {
 public:
  NotDivisible() : std::runtime_error("element is not divisible modulo the ideal") {}
};

/// Some z with a*z - n in K, returned reduced modulo K. Throws NotDivisible
/// when n is not in <a> + K.
Poly cofactor_divide(const Poly& n, const Poly& a, const Ideal& k);

/// A small generating set for <gens> + modulo, as elements reduced modulo
/// `modulo`: zeros dropped, then generators lying in the ideal of the others
/// removed greedily, largest first. Output sorted by (weighted degree, order).
std::vector<Poly> prune_generators(std::vector<Poly> gens, const Ideal& modulo);

/// Canonical generators: the reduced basis of <gens> + modulo, reduced
/// modulo `modulo`, then pruned.
std::vector<Poly> canonical_generators(const std::vector<Poly>& gens, const Ideal& modulo);

}  // namespace conemod

#endif
