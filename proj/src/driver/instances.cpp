#include "conemod/driver/instances.hpp"

#include <algorithm>

namespace conemod {

ConeInstance gen_working_example(std::uint64_t rho, std::uint64_t sigma, std::uint64_t w) {
  if (!(0 < sigma && sigma < rho)) throw ParameterError("need 0 < sigma < rho");
  if (w < 1) throw ParameterError("need w >= 1");
  const RingPtr ring =
      make_ring(VarTable({"a11", "a21", "a22", "e", "f1", "f2"}, {0, rho, rho, sigma, w, rho + w}));
  ConeInstance inst;
  inst.algebra = GradedAlgebra(ring, {});
  inst.action.r = 2;
  inst.action.w = w;
  const Poly zero(ring);
  inst.action.images.assign(2, std::vector<Poly>(6, zero));
  inst.action.images[0][4] = Poly::variable(ring, 0);
  inst.action.images[0][5] = Poly::variable(ring, 1);
  inst.action.images[1][5] = Poly::variable(ring, 2);
  return inst;
}

ConeInstance gen_grassmann_instance(std::size_t r, std::size_t b, const std::vector<std::size_t>& subset,
                                    std::uint64_t w) {
  if (b > r) throw ParameterError("need b <= r");
  if (w < 1) throw ParameterError("need w >= 1");
  if (subset.size() != b) throw ParameterError("subset must have b elements");
  for (std::size_t c : subset)
    if (c < 1 || c > r) throw ParameterError("subset entries must lie in 1..r");
  auto sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ParameterError("subset entries must be distinct");

  auto pinned = [&](std::size_t col) { return std::find(subset.begin(), subset.end(), col) != subset.end(); };
  std::vector<std::string> names;
  std::vector<std::uint64_t> weights;
  for (std::size_t i = 1; i <= b; ++i)
    for (std::size_t j = 1; j <= r; ++j)
      if (!pinned(j)) {
        names.push_back("a" + std::to_string(i) + "_" + std::to_string(j));
        weights.push_back(0);
      }
  const std::size_t f0 = names.size();
  for (std::size_t i = 1; i <= b; ++i) {
    names.push_back("f" + std::to_string(i));
    weights.push_back(w);
  }
  const RingPtr ring = make_ring(VarTable(names, weights));
  ConeInstance inst;
  inst.algebra = GradedAlgebra(ring, {});
  inst.action.r = r;
  inst.action.w = w;
  inst.action.images.assign(r, std::vector<Poly>(names.size(), Poly(ring)));
  std::size_t next = 0;
  for (std::size_t i = 1; i <= b; ++i)
    for (std::size_t j = 1; j <= r; ++j) {
      Poly& image = inst.action.images[j - 1][f0 + i - 1];
      if (pinned(j)) {
        if (subset[i - 1] == j) image = Poly::constant(ring, 1);
      } else {
        image = Poly::variable(ring, next++);
      }
    }
  return inst;
}

}  // namespace conemod
