#pragma once

#include <vector>

#include "hyperlog/rational.hpp"

namespace hyperlog {

/// Parameters (a, b, q) of 3F2(a, b, q; a+b, q+1; 1).
///
/// Construction through `make` enforces the non-integrality hypotheses of the
/// log formula: none of a, b, q, q-a, q-b, q-a-b is an integer.
class HGTriple {
 public:
  static HGTriple make(const Rational& a, const Rational& b, const Rational& q);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& q() const { return q_; }

  /// lcm of the denominators of a, b, q.
  Integer common_denominator() const;

  friend bool operator==(const HGTriple&, const HGTriple&) = default;

 private:
  HGTriple(Rational a, Rational b, Rational q)
      : a_(std::move(a)), b_(std::move(b)), q_(std::move(q)) {}
  Rational a_, b_, q_;
};

struct ConditionWitness {
  long s;
  Rational sum;
};

struct ConditionResult {
  bool holds;
  std::vector<ConditionWitness> witnesses;
};

/// Evaluates {sq} + {s(a-q)} + {s(b-q)} + {s(q-a-b)} for every s in [1, L)
/// coprime to L, L the common denominator. Holds iff every sum equals 2.
ConditionResult condition_holds(const HGTriple& t);

/// Reduced q = k/l in (0, 1) with l <= max_denominator satisfying the
/// condition, ordered by denominator then numerator. q values for which
/// (a, b, q) is not a valid triple are skipped.
std::vector<Rational> eligible_q_values(const Rational& a, const Rational& b, long max_denominator);

struct EPartEligibility {
  int dimension;  // 0 or 1
  bool log_case;
};

/// Dimension of the e-part of the fibration y^2 = 2x^3 - 3x^2 + t^l for a
/// projector with kernel of order d, and whether it falls in the log case.
EPartEligibility e_part_eligibility(long l, long d);

}  // namespace hyperlog
