#include "hyperlog/functions.hpp"

#include <cmath>

#include "hyperlog/errors.hpp"

namespace hyperlog {

namespace {

// Number of Stirling terms needed so that B_2k / (2k (2k-1) z^(2k-1)) drops
// below 2^-bits, estimated in double precision from
// |B_2k| ~ 2 (2k)! / (2 pi)^2k.
int stirling_terms(double z, Precision bits) {
  const double target = -static_cast<double>(bits) * std::log(2.0);
  for (int k = 1; k < 100000; ++k) {
    const double two_k = 2.0 * k;
    const double log_b = std::log(2.0) + std::lgamma(two_k + 1) - two_k * std::log(2 * M_PI);
    const double log_term = log_b - std::log(two_k * (two_k - 1)) - (two_k - 1) * std::log(z);
    if (log_term < target) return k;
  }
  throw ConvergenceError("Stirling series does not reach the requested precision", 0);
}

// Shift so that the asymptotic series converges to `bits` with few terms.
long stirling_threshold(Precision bits) { return static_cast<long>(bits / 4) + 10; }

bool is_nonpositive_integer(const Real& x) {
  return x.sign() <= 0 && floor(x) == x;
}

Complex complex_sin(const Complex& z) {
  const Real e = exp(z.im());
  const Real ei = 1 / e;
  const Real ch = (e + ei) / 2;
  const Real sh = (e - ei) / 2;
  return {sin(z.re()) * ch, cos(z.re()) * sh};
}

}  // namespace

Precision guard_bits(Precision prec) { return prec / 10 + 32; }

Real pi(Precision prec) {
  const Precision wp = prec + guard_bits(prec);
  Real a(1L, wp);
  Real b = sqrt(Real(Rational(1, 2), wp));
  Real t(Rational(1, 4), wp);
  Real p(1L, wp);
  const long iterations = static_cast<long>(std::log2(static_cast<double>(wp))) + 2;
  for (long i = 0; i < iterations; ++i) {
    Real next_a = (a + b) / 2;
    b = sqrt(a * b);
    const Real d = a - next_a;
    t -= p * d * d;
    p *= 2;
    a = std::move(next_a);
  }
  const Real s = a + b;
  return (s * s / (4 * t)).with_precision(prec);
}

Real agm(const Real& a, const Real& b) {
  if (a.sign() <= 0 || b.sign() <= 0) throw DomainError("agm requires positive arguments");
  const Precision prec = std::max(a.precision(), b.precision());
  const Precision wp = prec + 16;
  Real x = a.with_precision(wp);
  Real y = b.with_precision(wp);
  for (int i = 0; i < 10000; ++i) {
    const Real diff = abs(x - y);
    if (diff.is_zero() || diff.exponent2() < x.exponent2() - static_cast<long>(wp) + 2) break;
    Real m = (x + y) / 2;
    y = sqrt(x * y);
    x = std::move(m);
  }
  return x.with_precision(prec);
}

Real atan(const Real& x) {
  const Precision p = x.precision();
  const Precision wp = p + guard_bits(p);
  return log_principal(Complex(Real(1L, wp), x.with_precision(wp))).im().with_precision(p);
}

Real acos(const Real& x) {
  if (abs(x) > 1) throw DomainError("acos argument outside [-1, 1]");
  const Precision p = x.precision();
  const Precision wp = p + guard_bits(p);
  const Real xw = x.with_precision(wp);
  const Real s = sqrt((1 - xw) * (1 + xw));
  // -i log(x + i s) has zero real part up to rounding since |x + i s| = 1.
  return log_principal(Complex(xw, s)).im().with_precision(p);
}

std::vector<Rational> bernoulli_even(int n) {
  std::vector<Integer> t(static_cast<std::size_t>(n) + 1);
  if (n <= 0) return {};
  t[1] = 1;
  for (int k = 2; k <= n; ++k) t[k] = (k - 1) * t[k - 1];
  for (int k = 2; k <= n; ++k) {
    for (int j = k; j <= n; ++j) t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
  }
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    Integer four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
    Integer num = 2 * k * t[k];
    if (k % 2 == 0) num = -num;
    out.emplace_back(num, four_k * (four_k - 1));
  }
  return out;
}

Real gamma(const Real& x) {
  if (!x.is_finite()) throw DomainError("gamma of a non-finite value");
  if (is_nonpositive_integer(x)) throw DomainError("gamma pole at a non-positive integer");
  const Precision p = x.precision();
  const Precision wp = p + guard_bits(p);
  const Real xw = x.with_precision(wp);

  if (xw < Real(Rational(1, 2), wp)) {
    const Real pw = pi(wp);
    return (pw / (sin(pw * xw) * gamma(1 - xw))).with_precision(p);
  }

  const long threshold = stirling_threshold(wp);
  Real z = xw;
  Real shift_product(1L, wp);
  while (z < threshold) {
    shift_product *= z;
    z = z + 1;
  }
  const int terms = stirling_terms(z.to_double(), wp);
  const std::vector<Rational> b = bernoulli_even(terms);

  Real lg = (z - Real(Rational(1, 2), wp)) * log(z) - z + log(2 * pi(wp)) / 2;
  const Real z2 = z * z;
  Real zpow = z;  // z^(2k-1)
  for (int k = 1; k <= terms; ++k) {
    lg += Real(b[static_cast<std::size_t>(k - 1)], wp) / (zpow * static_cast<long>(2 * k * (2 * k - 1)));
    zpow *= z2;
  }
  return (exp(lg) / shift_product).with_precision(p);
}

Complex gamma(const Complex& z) {
  const Precision p = z.precision();
  if (z.im().is_zero()) return Complex(gamma(z.re()));
  const Precision wp = p + guard_bits(p);
  const Complex zw = z.with_precision(wp);

  if (zw.re() < Real(Rational(1, 2), wp)) {
    const Real pw = pi(wp);
    const Complex one(Real(1L, wp));
    return (Complex(pw) / (complex_sin(zw * pw) * gamma(one - zw))).with_precision(p);
  }

  const long threshold = stirling_threshold(wp);
  Complex w = zw;
  Complex shift_product(Real(1L, wp));
  const Complex one(Real(1L, wp));
  while (w.abs() < threshold || w.re() < threshold / 2) {
    shift_product *= w;
    w += one;
  }
  const int terms = stirling_terms(w.abs().to_double(), wp);
  const std::vector<Rational> b = bernoulli_even(terms);

  const Complex half(Real(Rational(1, 2), wp));
  Complex lg = (w - half) * log_principal(w) - w + Complex(log(2 * pi(wp)) / 2);
  const Complex inv = one / w;
  const Complex inv2 = inv * inv;
  Complex ipow = inv;  // w^-(2k-1)
  for (int k = 1; k <= terms; ++k) {
    const Real coeff = Real(b[static_cast<std::size_t>(k - 1)], wp) / static_cast<long>(2 * k * (2 * k - 1));
    lg += ipow * coeff;
    ipow *= inv2;
  }
  return (exp(lg) / shift_product).with_precision(p);
}

Real gamma(const Rational& x, Precision prec) {
  if (x.is_integer() && x.sign() <= 0) throw DomainError("gamma pole at " + x.str());
  return gamma(Real(x, prec + 8)).with_precision(prec);
}

Real digamma(const Real& x) {
  if (!x.is_finite()) throw DomainError("digamma of a non-finite value");
  if (is_nonpositive_integer(x)) throw DomainError("digamma pole at a non-positive integer");
  const Precision p = x.precision();
  const Precision wp = p + guard_bits(p);
  const Real xw = x.with_precision(wp);

  if (xw < Real(Rational(1, 2), wp)) {
    const Real pw = pi(wp);
    const Real arg = pw * xw;
    return (digamma(1 - xw) - pw * cos(arg) / sin(arg)).with_precision(p);
  }

  const long threshold = stirling_threshold(wp);
  Real z = xw;
  Real correction(0L, wp);
  while (z < threshold) {
    correction += 1 / z;
    z = z + 1;
  }
  const int terms = stirling_terms(z.to_double(), wp) + 1;
  const std::vector<Rational> b = bernoulli_even(terms);
  Real psi = log(z) - 1 / (2 * z);
  const Real z2 = z * z;
  Real zpow = z2;
  for (int k = 1; k <= terms; ++k) {
    psi -= Real(b[static_cast<std::size_t>(k - 1)], wp) / (zpow * static_cast<long>(2 * k));
    zpow *= z2;
  }
  return (psi - correction).with_precision(p);
}

Real digamma(const Rational& x, Precision prec) {
  if (x.is_integer() && x.sign() <= 0) throw DomainError("digamma pole at " + x.str());
  return digamma(Real(x, prec + 8)).with_precision(prec);
}

}  // namespace hyperlog
