#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "qdouble/group.hpp"
#include "qdouble/groupoid.hpp"
#include "qdouble/phase.hpp"

namespace qdouble::detail {

inline std::complex<double> phase_c(const Phase& p) { return p.to_complex(); }

inline double sup_abs(const Eigen::MatrixXcd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// Requires the groupoid to behave as the one-object groupoid of g: one
/// object whose morphisms are the group elements with matching composition.
inline void require_delooping_of(const Groupoid& gpd, const FiniteGroup& g,
                                 const char* what) {
  if (gpd.num_objects() != 1 || gpd.num_morphisms() != g.order()) {
    throw std::invalid_argument(std::string(what) +
                                ": cochain base is not the one-object "
                                "groupoid of the given group");
  }
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) {
      if (gpd.compose(a, b) != g.mul(a, b)) {
        throw std::invalid_argument(
            std::string(what) +
            ": cochain base composition disagrees with the group table");
      }
    }
  }
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace qdouble::detail
