#pragma once

#include <span>

#include "hyperlog/real.hpp"

namespace hyperlog {

struct LevinEstimate {
  Real value;
  /// |L(k) - L(k - 4)|, a heuristic for the error of L(k).
  Real error_estimate;
};

/// Levin u-transform of the series with the given terms (term j multiplies
/// x^j already included), using the remainder model omega_j = (j + 1) a_j.
/// Suited to logarithmically convergent series. Needs roughly 8-9 working
/// bits per term; precision is taken from the terms.
LevinEstimate levin_u(std::span<const Real> terms);

}  // namespace hyperlog
