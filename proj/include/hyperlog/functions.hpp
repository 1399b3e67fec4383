#pragma once

#include <vector>

#include "hyperlog/complex.hpp"
#include "hyperlog/rational.hpp"
#include "hyperlog/real.hpp"

namespace hyperlog {

/// Extra working bits carried internally by the transcendental routines:
/// about 10% of the target precision plus a fixed margin.
Precision guard_bits(Precision prec);

/// pi by the Gauss-Legendre (AGM) iteration.
Real pi(Precision prec);

/// Arithmetic-geometric mean of a, b > 0, at the larger input precision.
Real agm(const Real& a, const Real& b);

/// Principal arctangent, via Im log(1 + i x).
Real atan(const Real& x);
/// Principal arccosine on [-1, 1], via -i log(x + i sqrt(1 - x^2)).
Real acos(const Real& x);

/// B_2, B_4, ..., B_2n exactly (tangent-number recurrence).
std::vector<Rational> bernoulli_even(int n);

/// Gamma function. Shift to a large argument, Stirling series with the
/// truncation chosen for the working precision, reflection below 1/2.
/// Throws DomainError at non-positive integers.
Real gamma(const Real& x);
Complex gamma(const Complex& z);
Real gamma(const Rational& x, Precision prec);

/// Digamma psi = Gamma'/Gamma, same strategy as gamma.
Real digamma(const Real& x);
Real digamma(const Rational& x, Precision prec);

}  // namespace hyperlog
