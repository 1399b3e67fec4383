#include "hyperlog/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "hyperlog/errors.hpp"
#include "hyperlog/functions.hpp"

namespace hyperlog {

namespace {

// log10 |x|, with a large negative value for zero.
double log10_abs(const Real& x) {
  if (x.is_zero()) return -1e9;
  long e = 0;
  const double m = mpfr_get_d_2exp(&e, x.get(), MPFR_RNDN);
  return std::log10(std::fabs(m)) + static_cast<double>(e) * std::log10(2.0);
}

}  // namespace

QuadratureResult tanh_sinh(const UnitIntegrand& f, Precision prec,
                           const QuadratureOptions& options) {
  const Precision wp = prec + guard_bits(prec);
  const double target_digits = static_cast<double>(prec) * std::log10(2.0);
  const double beta = std::max(options.endpoint_exponent, 1e-3);
  const double s_max =
      std::asinh((static_cast<double>(wp) * std::log(2.0) + 40.0) / (M_PI * beta));
  const Real half_pi = pi(wp) / 2;

  long evaluations = 0;
  // Sum of w(s) * f(x(s)) over nodes s = k h for k in `ks`, h = 2^-level.
  auto level_sum = [&](int level, bool odd_only) {
    Real acc(0L, wp);
    const double h = std::ldexp(1.0, -level);
    const long kmax = static_cast<long>(std::ceil(s_max / h));
    const long step = odd_only ? 2 : 1;
    for (long k = odd_only ? 1 : 0; k <= kmax; k += step) {
      const Real s = ldexp(Real(k, wp), -level);
      const Real es = exp(s);
      const Real inv_es = 1 / es;
      const Real u = half_pi * (es - inv_es) / 2;
      const Real cosh_s = (es + inv_es) / 2;
      const Real big_e = exp(-2 * u);
      const Real near_one = 1 / (1 + big_e);  // x(s) for s >= 0
      const Real near_zero = big_e / (1 + big_e);
      const Real w = 2 * half_pi * cosh_s * near_one * near_zero;
      if (near_zero.is_zero() || w.is_zero()) break;
      Real contribution = f(near_one, near_zero);
      ++evaluations;
      if (k != 0) {
        contribution += f(near_zero, near_one);
        ++evaluations;
      }
      acc += w * contribution;
    }
    return acc;
  };

  Real raw_sum = level_sum(0, false);
  Real estimate = raw_sum;
  Real previous = estimate;
  Real before_previous = estimate;
  double error_digits = 0.0;

  for (int level = 1; level <= options.max_levels; ++level) {
    raw_sum += level_sum(level, true);
    before_previous = previous;
    previous = estimate;
    estimate = ldexp(raw_sum, -level);

    const double mag = log10_abs(estimate);
    const double d1 = log10_abs(estimate - previous) - mag;
    const double d2 = log10_abs(estimate - before_previous) - mag;
    double err = 0.0;
    if (level >= 3) {
      // DE errors square from one level to the next; project one step ahead.
      err = d1 <= -target_digits ? -target_digits
                                 : std::min(0.0, std::max(d1 * d1 / std::min(d2, -1e-9), 2.0 * d1));
    }
    error_digits = -err;
    if (level >= 3 && err <= -target_digits) {
      Real abs_err = abs(estimate) * exp(Real::from_double(err * std::log(10.0), 64));
      return {estimate.with_precision(prec), std::move(abs_err), target_digits, level,
              evaluations};
    }
  }
  throw ConvergenceError("tanh-sinh quadrature did not converge (about " +
                             std::to_string(static_cast<long>(error_digits)) +
                             " digits achieved)",
                         error_digits);
}

}  // namespace hyperlog
