#ifndef CONEMOD_DRIVER_INSTANCES_HPP
#define CONEMOD_DRIVER_INSTANCES_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "conemod/cone/cone.hpp"

namespace conemod {

class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// k[a11, a21, a22, e, f1, f2] with weights (0, rho, rho, sigma, w, rho + w),
/// xi_1: f1 -> a11, f2 -> a21 and xi_2: f2 -> a22. Requires 0 < sigma < rho, w >= 1.
ConeInstance gen_working_example(std::uint64_t rho, std::uint64_t sigma, std::uint64_t w);

/// Affine chart of the Grassmannian model: b rows f_i of weight w and
/// coordinates a<i>_<j> of weight 0, with a<i>_<subset[i]> pinned to 1 and
/// a<i>_<subset[k]> (k != i) pinned to 0. xi_j(f_i) = a<i>_<j>.
/// Column labels in `subset` are 1-based.
ConeInstance gen_grassmann_instance(std::size_t r, std::size_t b, const std::vector<std::size_t>& subset,
                                    std::uint64_t w = 1);

}  // namespace conemod

#endif
