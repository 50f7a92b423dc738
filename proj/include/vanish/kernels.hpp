#pragma once

// Data-parallel kernels. Each OpenMP kernel has a serial twin with the same
// contract; tests assert equality and bench/ compares their timings.

#include <cstdint>
#include <vector>

#include "vanish/perm.hpp"

namespace vanish {

/// Class multiplication coefficients a(i, j, k) = #{(x, y) in C_i x C_j : xy = g_k}.
struct ClassCoefficients {
  std::size_t r = 0;
  std::vector<std::uint32_t> counts;  // layout [k][i][j]

  std::uint32_t operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return counts[(k * r + i) * r + j];
  }
  friend bool operator==(const ClassCoefficients&, const ClassCoefficients&) = default;
};

ClassCoefficients class_coefficients_serial(const Group& g, const ClassData& classes);
ClassCoefficients class_coefficients(const Group& g, const ClassData& classes);

/// Normal closure of each class representative, indexed by class.
std::vector<Group> class_normal_closures_serial(const Group& g, const ClassData& classes);
std::vector<Group> class_normal_closures(const Group& g, const ClassData& classes);

/// power_map[i][l] = class of reps[i]^l for 0 <= l < order of reps[i].
using PowerMaps = std::vector<std::vector<std::size_t>>;
PowerMaps power_maps_serial(const Group& g, const ClassData& classes);
PowerMaps power_maps(const Group& g, const ClassData& classes);

}  // namespace vanish
