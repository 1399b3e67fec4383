#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hyperlog/algexpr.hpp"
#include "hyperlog/real.hpp"

namespace hyperlog {

enum class RelationStatus { kFound, kNoneBelowBound, kPrecisionExhausted };

const char* to_string(RelationStatus s);

struct RelationReport {
  std::vector<std::string> labels;
  std::optional<std::vector<long>> relation;  ///< first nonzero entry positive
  /// PSLQ's exclusion bound: no relation of Euclidean norm below this exists.
  Real norm_bound;
  long max_norm = 0;
  /// |sum m_i x_i| / max |x_i| at the search precision.
  Real residual;
  /// The same at twice the precision, when the caller supplied a producer.
  std::optional<Real> confirmation_residual;
  RelationStatus status = RelationStatus::kNoneBelowBound;
  long iterations = 0;
  Precision precision = 0;
};

/// Bits needed to resolve an n-term relation with entries up to max_norm:
/// n log10(max_norm) * 1.1 + 20 decimal digits.
Precision pslq_required_bits(std::size_t n, long max_norm);

/// Classic PSLQ at `prec` bits. Stops with kFound, with kNoneBelowBound once
/// the exclusion bound passes sqrt(n) * max_norm (so no relation with
/// infinity-norm <= max_norm exists), or with kPrecisionExhausted when `prec`
/// is below pslq_required_bits or the multiplier matrix outgrows it.
RelationReport find_relation(const std::vector<Real>& values, long max_norm, Precision prec);

/// Values recomputed at any precision by `produce`.
using ValueProducer = std::function<std::vector<Real>(Precision)>;

/// As above, and a found relation is re-evaluated at 2 * prec; it is kept
/// only if the residual shrinks by 2^(prec/2) (or reaches the 2*prec noise
/// floor); otherwise the status becomes kPrecisionExhausted.
RelationReport find_relation(const ValueProducer& produce, long max_norm, Precision prec);

struct DiscoveryOptions {
  std::optional<AlgExpr> prefactor;   ///< multiplies F; default pi
  std::vector<AlgExpr> multipliers;   ///< default 1, sqrt2, sqrt3, sqrt5, sqrt6
  long max_norm = 1000000;
};

struct Discovery {
  RelationReport report;
  std::optional<LogFormula> formula;
  bool complex_mode = false;
  /// prefactor * F and the formula's right-hand side at the confirmation precision.
  std::optional<Complex> lhs, rhs;
  std::string note;
};

/// Searches an integer relation among prefactor * F (F = 3F2(a,b,q;a+b,q+1;1)),
/// every candidate term times every multiplier, and pi (pi i times each
/// multiplier when any value is complex), under norm bounds 10^2, 10^4, ...
/// up to max_norm. A relation is accepted only if it involves F and holds,
/// real and imaginary parts alike, at doubled precision.
/// Throws PreconditionError if the triple fails the interlacing condition.
Discovery discover_formula(const HGTriple& t, const std::vector<TransTerm>& candidates,
                           Precision prec, const DiscoveryOptions& options = {});

struct ConstantFit {
  Rational multiple;
  Real residual;
};

/// Rounds value / target to the nearest point of lattice * Z (half away
/// from zero) and returns it with |value / target - multiple|.
ConstantFit determine_constant(const Real& value, const Real& target, const Rational& lattice);

}  // namespace hyperlog
