#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "hyperlog/polynomial.hpp"
#include "hyperlog/real.hpp"

namespace hyperlog {

/// Gauss-Manin connection of a rank-2 family in a basis (omega_1, omega_2):
///   d/dt0 (omega_1, omega_2) = (omega_1, omega_2) * entries,
/// so column j holds the expansion of the derivative of omega_j.
struct ConnectionMatrix {
  std::array<std::array<RationalFunction, 2>, 2> entries;
  std::array<std::string, 2> basis{"dx/y", "x*dx/y"};

  /// The connection of y^2 = 2x^3 - 3x^2 + t0 in the basis (dx/y, x dx/y):
  ///   1 / (6 (t0 - t0^2)) * [[t0, t0], [-1, -t0]].
  static ConnectionMatrix elliptic_family();

  ConnectionMatrix scaled(const Rational& c) const;
  /// True when every denominator divides a power of t0 (1 - t0).
  bool regular_singular_normalized() const;
};

/// Second-order operator p2 u'' + p1 u' + p0 u in the variable t0.
struct PicardFuchs {
  RationalFunction p2, p1, p0;
};

/// Eliminates omega_2 from d omega_1 and d^2 omega_1 to obtain the operator
/// annihilating the periods of omega_1, normalized so p2 = t0 - t0^2.
/// Throws DomainError when omega_1 and d omega_1 are dependent.
PicardFuchs derive_picard_fuchs(const ConnectionMatrix& a);

/// Power series at a regular singular point `origin` (exponent 0) of the
/// solution of `op` that is holomorphic there with value 1, in the local
/// variable s where t0 = origin + direction * s.
class FrobeniusSolution {
 public:
  FrobeniusSolution(const PicardFuchs& op, const Rational& origin, const Rational& direction);

  /// Sum of the series at local coordinate s (|s| inside the radius).
  Real operator()(const Real& s) const;

 private:
  // coeffs_[k][j]: coefficient of s^j in the polynomial multiplying v^(k).
  std::array<std::vector<Rational>, 3> coeffs_;
};

/// Roots of 2x^3 - 3x^2 + t^2 for 0 < t < 1, alpha < beta < gamma, together
/// with the pairwise gaps computed without cancellation near t = 0 and t = 1.
struct CubicRoots {
  Real alpha, beta, gamma;
  Real beta_minus_alpha, gamma_minus_beta, gamma_minus_alpha;
};

CubicRoots cubic_roots(const Real& t, Precision prec);
/// Same, with 1 - t supplied by the caller for accuracy as t -> 1.
CubicRoots cubic_roots(const Real& t, const Real& one_minus_t, Precision prec);

enum class Cycle {
  kVanishingAtOne,   ///< delta_t, integrates over [beta_t, gamma_t]
  kVanishingAtZero,  ///< gamma_t, integrates over [alpha_t, beta_t]
};

const char* to_string(Cycle c);
/// Accepts "v1"/"vanishing-at-1" and "v0"/"vanishing-at-0".
Cycle parse_cycle(const std::string& text);

struct PeriodSpec {
  Real t;
  Cycle cycle;
};

/// |integral of dx/y| over the cycle on y^2 = 2x^3 - 3x^2 + t^2, via the AGM
/// of the root gaps (complete elliptic integral of the first kind).
Real real_period(const PeriodSpec& spec, Precision prec);
Real real_period(const Real& t, const Real& one_minus_t, Cycle cycle, Precision prec);

/// The same period by tanh-sinh quadrature of 2 * integral dx / sqrt|2 (x-a)(x-b)(x-g)|.
Real real_period_by_quadrature(const PeriodSpec& spec, Precision prec);

/// integral_0^1 real_period(t) dt over the chosen cycle (a Lefschetz thimble).
Real thimble_integral(Cycle cycle, Precision prec);

struct LimitEstimate {
  Real value;
  Real spread;                  ///< max deviation among the per-sample estimates
  std::vector<Real> per_sample;
};

/// Limit of the vanishing-at-1 period as t -> 1 from samples t_i < 1: each
/// sample is divided by the holomorphic Frobenius solution at t0 = 1 of the
/// Picard-Fuchs operator derived from the connection, which removes the
/// whole (1 - t^2)-dependence.
LimitEstimate vanishing_period_limit(std::span<const Real> t_samples, Precision prec);

}  // namespace hyperlog
