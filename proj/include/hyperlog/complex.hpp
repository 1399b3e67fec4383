#pragma once

#include <ostream>
#include <string>

#include "hyperlog/real.hpp"

namespace hyperlog {

/// Arbitrary-precision complex number; both parts share one precision.
class Complex {
 public:
  explicit Complex(Precision prec = 64) : re_(prec), im_(prec) {}
  Complex(const Real& re) : Complex(re, Real(0L, re.precision())) {}  // NOLINT
  Complex(const Real& re, const Real& im);

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  Precision precision() const { return re_.precision(); }
  Complex with_precision(Precision prec) const;

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  Complex conj() const { return {re_, -im_}; }
  Real abs() const;
  /// Principal argument in (-pi, pi].
  Real arg() const;

  /// "re + im i" with `digits` significant digits per part.
  std::string str(long digits) const;

  Complex operator-() const { return {-re_, -im_}; }
  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator*(const Complex& a, const Real& k) { return {a.re_ * k, a.im_ * k}; }
  friend Complex operator*(const Real& k, const Complex& a) { return a * k; }

  friend std::ostream& operator<<(std::ostream& os, const Complex& z) { return os << z.str(30); }

 private:
  Real re_;
  Real im_;
};

Complex exp(const Complex& z);
/// Principal logarithm log|z| + i arg z with -pi < arg z <= pi.
Complex log_principal(const Complex& z);
/// Integer power by repeated squaring (negative exponents invert).
Complex pow(const Complex& z, long n);
/// Principal square root.
Complex sqrt(const Complex& z);
/// e^(2 pi i k / n).
Complex root_of_unity(long n, long k, Precision prec);

}  // namespace hyperlog
