#pragma once

#include <functional>

#include "hyperlog/real.hpp"

namespace hyperlog {

/// Integrand on [0, 1] receiving both t and 1 - t, each computed without
/// cancellation, so endpoint singularities can be evaluated accurately.
using UnitIntegrand = std::function<Real(const Real& t, const Real& one_minus_t)>;

struct QuadratureResult {
  Real value;
  Real error_estimate;   // absolute
  double achieved_digits;
  int levels;
  long evaluations;
};

struct QuadratureOptions {
  /// Lower bound on beta for integrands behaving like t^(beta-1) or
  /// (1-t)^(beta-1) at the endpoints; controls how far the node set extends.
  double endpoint_exponent = 1.0;
  int max_levels = 16;
};

/// Double-exponential (tanh-sinh) quadrature over [0, 1], halving the step
/// until the level-to-level estimate reaches `prec` bits. Throws
/// ConvergenceError (carrying the achieved digits) when max_levels runs out.
QuadratureResult tanh_sinh(const UnitIntegrand& f, Precision prec,
                           const QuadratureOptions& options = {});

}  // namespace hyperlog
