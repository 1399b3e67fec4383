#include "hyperlog/condition.hpp"

#include <numeric>

#include "hyperlog/errors.hpp"

namespace hyperlog {

HGTriple HGTriple::make(const Rational& a, const Rational& b, const Rational& q) {
  auto require = [](const Rational& v, const char* name) {
    if (v.is_integer()) {
      throw PreconditionError(std::string(name) + " must not be an integer (got " + v.str() + ")");
    }
  };
  require(a, "a");
  require(b, "b");
  require(q, "q");
  require(q - a, "q-a");
  require(q - b, "q-b");
  require(q - a - b, "q-a-b");
  return HGTriple(a, b, q);
}

Integer HGTriple::common_denominator() const {
  return lcm(lcm(a_.denominator(), b_.denominator()), q_.denominator());
}

ConditionResult condition_holds(const HGTriple& t) {
  const Integer big_l = t.common_denominator();
  if (!big_l.fits_slong_p()) throw PreconditionError("common denominator too large to enumerate");
  const long period = big_l.get_si();

  const Rational x1 = t.q();
  const Rational x2 = t.a() - t.q();
  const Rational x3 = t.b() - t.q();
  const Rational x4 = t.q() - t.a() - t.b();

  ConditionResult result{true, {}};
  for (long s = 1; s < period; ++s) {
    if (std::gcd(s, period) != 1) continue;
    const Rational rs(s);
    Rational sum = frac(rs * x1) + frac(rs * x2) + frac(rs * x3) + frac(rs * x4);
    if (sum != Rational(2)) result.holds = false;
    result.witnesses.push_back({s, std::move(sum)});
  }
  return result;
}

std::vector<Rational> eligible_q_values(const Rational& a, const Rational& b,
                                        long max_denominator) {
  if (a.is_integer() || b.is_integer()) {
    throw PreconditionError("a and b must not be integers");
  }
  std::vector<Rational> out;
  for (long l = 2; l <= max_denominator; ++l) {
    for (long k = 1; k < l; ++k) {
      if (std::gcd(k, l) != 1) continue;
      const Rational q(k, l);
      try {
        if (condition_holds(HGTriple::make(a, b, q)).holds) out.push_back(q);
      } catch (const PreconditionError&) {
        // q - a, q - b or q - a - b integral: outside the formula's hypotheses.
      }
    }
  }
  return out;
}

EPartEligibility e_part_eligibility(long l, long d) {
  if (d < 1 || l < 1 || l % d != 0) {
    throw PreconditionError("d must be a positive divisor of l (got l=" + std::to_string(l) +
                            ", d=" + std::to_string(d) + ")");
  }
  const long ratio = l / d;
  return {(ratio == 1 || ratio == 6) ? 0 : 1, ratio >= 2 && ratio <= 5};
}

}  // namespace hyperlog
