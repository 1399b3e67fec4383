#pragma once

#include <vector>

#include "hyperlog/rational.hpp"
#include "hyperlog/real.hpp"

namespace hyperlog {

/// A generalized hypergeometric series
///   sum_n (a_1)_n...(a_{p+1})_n / ((b_1)_n...(b_p)_n) x^n / n!
/// with rational parameters and a real argument in [0, 1].
struct HGSpec {
  std::vector<Rational> upper;
  std::vector<Rational> lower;
  Real argument;

  /// sum(lower) - sum(upper); the series at x = 1 converges iff this is > 0.
  Rational parameter_excess() const;
  /// True when some upper parameter is a non-positive integer.
  bool terminates() const;
  /// Throws PreconditionError for a non-positive integer lower parameter or
  /// an argument outside [0, 1], and DomainError for a divergent series.
  void validate() const;
};

struct SeriesResult {
  Real value;            ///< accelerated value at x = 1, plain sum otherwise
  Real raw_partial_sum;  ///< the unaccelerated partial sum of the terms used
  Real error_estimate;   ///< tail bound (x < 1) or Levin heuristic (x = 1)
  long terms;
  bool accelerated;
};

/// Sums the series. Below x = 1 the sum runs until a geometric tail bound is
/// under 2^-prec. At x = 1 the terms decay only polynomially and the partial
/// sums are accelerated with the Levin u-transform.
SeriesResult phg_series(const HGSpec& spec, Precision prec);

/// 2F1(a, b; c; 1) = Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)), c-a-b > 0.
Real gauss_sum(const Rational& a, const Rational& b, const Rational& c, Precision prec);

/// 2F1(a, b; c; z) on [0, 1). Uses the power series for z <= 1/2 and the
/// connection formulas around z = 1 above that (the logarithmic one when
/// c = a + b). Constants that depend only on the parameters are computed once
/// per evaluator.
class Hyp2F1 {
 public:
  Hyp2F1(const Rational& a, const Rational& b, const Rational& c, Precision prec);

  Real operator()(const Real& z) const { return (*this)(z, 1 - z); }
  /// Evaluation with the complement 1 - z supplied by the caller, which keeps
  /// full relative accuracy in 1 - z when z is extremely close to 1.
  Real operator()(const Real& z, const Real& one_minus_z) const;

  Precision precision() const { return prec_; }

 private:
  enum class Mode { kSeriesOnly, kLogarithmic, kRegular };

  Real near_one_logarithmic(const Real& w) const;
  Real near_one_regular(const Real& w) const;

  Rational a_, b_, c_;
  Precision prec_;
  Precision wp_;
  Mode mode_;
  // kLogarithmic: Gamma(a+b)/(Gamma(a)Gamma(b)), psi(a), psi(b), psi(1).
  // kRegular: the two connection coefficients.
  Real k0_, k1_, psi_a_, psi_b_, psi_1_;
};

Real hyp2f1(const Rational& a, const Rational& b, const Rational& c, const Real& z);

struct Hyp2F1Derivatives {
  Real value;
  Real first;
  Real second;
};

/// u, u', u'' at z in [0, 1) from the term-wise differentiated power series.
Hyp2F1Derivatives hyp2f1_derivatives(const Rational& a, const Rational& b, const Rational& c,
                                     const Real& z, Precision prec);

/// Residual of the hypergeometric equation
///   t(1-t) u'' + (c - (a+b+1) t) u' - a b u
/// at u = 2F1(a, b; c; t0), 0 < t0 < 1. For (1/6, 5/6, 1) this is
/// (t0 - t0^2) u'' + (1 - 2 t0) u' - (5/36) u.
Real hg2f1_ode_residual(const Rational& a, const Rational& b, const Rational& c, const Real& t0,
                        Precision prec);

struct IntegralResult {
  Real value;
  Real error_estimate;
  double achieved_digits;
  long evaluations;
};

/// 3F2(a, b, q; a+b, q+1; 1) as q * integral_0^1 t^(q-1) 2F1(a, b; a+b; t) dt,
/// by tanh-sinh quadrature. Requires q > 0 and a+b not a non-positive integer.
IntegralResult euler_transform_3f2(const Rational& a, const Rational& b, const Rational& q,
                                   Precision prec);

}  // namespace hyperlog
