#pragma once

#include <mpfr.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "hyperlog/rational.hpp"

namespace hyperlog {

using Precision = mpfr_prec_t;

/// Bits needed to represent `digits` significant decimal digits.
Precision bits_for_digits(long digits);
/// Decimal digits carried by `bits` of mantissa.
long digits_for_bits(Precision bits);

/// Arbitrary-precision real. The precision travels with the value: the result
/// of an arithmetic operation carries the larger precision of its operands and
/// is correctly rounded at that precision.
class Real {
 public:
  explicit Real(Precision prec = 64);
  Real(long v, Precision prec);
  Real(const Rational& q, Precision prec);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real from_double(double v, Precision prec);

  /// Parses a decimal string ("1.25", "-3e-7", "2/3" for exact rationals).
  static Real parse(std::string_view text, Precision prec);

  Precision precision() const { return mpfr_get_prec(v_); }
  /// Copy rounded to `prec` bits.
  Real with_precision(Precision prec) const;

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long_round() const;
  /// Nearest integer (ties away from zero).
  Integer round_to_integer() const;
  /// Binary exponent e with 2^(e-1) <= |x| < 2^e; very negative for zero.
  long exponent2() const;

  /// Fixed significant-digit decimal rendering, e.g. "1.2345678e-3" style is
  /// avoided: plain positional notation when the exponent is moderate.
  std::string str(long digits) const;

  Real operator-() const;
  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator*=(long k);
  Real& operator/=(long k);

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator*(Real a, long k) { return a *= k; }
  friend Real operator*(long k, Real a) { return a *= k; }
  friend Real operator/(Real a, long k) { return a /= k; }
  friend Real operator+(Real a, long k);
  friend Real operator+(long k, Real a) { return std::move(a) + k; }
  friend Real operator-(Real a, long k);
  friend Real operator-(long k, const Real& a);
  friend Real operator/(long k, const Real& a);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, long k) { return mpfr_cmp_si(a.v_, k) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, long k);

  friend std::ostream& operator<<(std::ostream& os, const Real& r) { return os << r.str(30); }

 private:
  mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
/// Real n-th root of x >= 0 (any x for odd n).
Real root(const Real& x, unsigned long n);
Real exp(const Real& x);
/// Natural log of x > 0.
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
/// Two-argument arctangent in (-pi, pi].
Real atan2(const Real& y, const Real& x);
Real pow(const Real& x, long n);
Real pow(const Real& x, const Real& y);
Real hypot(const Real& x, const Real& y);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
Real ldexp(const Real& x, long e);
/// Largest integer not above x, as a Real.
Real floor(const Real& x);

}  // namespace hyperlog
