#include "hyperlog/complex.hpp"

#include <algorithm>

#include "hyperlog/errors.hpp"
#include "hyperlog/functions.hpp"

namespace hyperlog {

Complex::Complex(const Real& re, const Real& im) : re_(re), im_(im) {
  const Precision p = std::max(re.precision(), im.precision());
  if (re_.precision() != p) re_ = re_.with_precision(p);
  if (im_.precision() != p) im_ = im_.with_precision(p);
}

Complex Complex::with_precision(Precision prec) const {
  return {re_.with_precision(prec), im_.with_precision(prec)};
}

Real Complex::abs() const { return hypot(re_, im_); }

Real Complex::arg() const {
  if (is_zero()) throw DomainError("argument of zero");
  // mpfr_atan2(+0, x<0) = +pi, and atan2(-0, x<0) = -pi; normalize the
  // signed zero so the negative real axis maps to +pi.
  if (im_.is_zero() && re_.sign() < 0) return pi(precision());
  return atan2(im_, re_);
}

std::string Complex::str(long digits) const {
  const std::string imag = im_.str(digits);
  if (im_.sign() < 0) return re_.str(digits) + " - " + imag.substr(1) + "i";
  return re_.str(digits) + " + " + imag + "i";
}

Complex& Complex::operator+=(const Complex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real re = re_ * o.re_ - im_ * o.im_;
  Real im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  if (o.is_zero()) throw DomainError("complex division by zero");
  // Smith's algorithm avoids overflow/cancellation in the denominator.
  if (hyperlog::abs(o.re_) >= hyperlog::abs(o.im_)) {
    const Real r = o.im_ / o.re_;
    const Real d = o.re_ + o.im_ * r;
    Real re = (re_ + im_ * r) / d;
    Real im = (im_ - re_ * r) / d;
    re_ = std::move(re);
    im_ = std::move(im);
  } else {
    const Real r = o.re_ / o.im_;
    const Real d = o.re_ * r + o.im_;
    Real re = (re_ * r + im_) / d;
    Real im = (im_ * r - re_) / d;
    re_ = std::move(re);
    im_ = std::move(im);
  }
  return *this;
}

Complex exp(const Complex& z) {
  const Real m = exp(z.re());
  return {m * cos(z.im()), m * sin(z.im())};
}

Complex log_principal(const Complex& z) {
  if (z.is_zero()) throw DomainError("logarithm of zero");
  return {log(z.abs()), z.arg()};
}

Complex pow(const Complex& z, long n) {
  const Precision p = z.precision();
  if (n < 0) return Complex(Real(1L, p)) / pow(z, -n);
  Complex result(Real(1L, p));
  Complex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

Complex sqrt(const Complex& z) {
  if (z.is_zero()) return z;
  const Real r = z.abs();
  if (z.re().sign() >= 0) {
    const Real s = sqrt((r + z.re()) / 2);
    return {s, z.im() / (2 * s)};
  }
  Real s = sqrt((r - z.re()) / 2);
  if (z.im().sign() < 0) s = -s;
  return {z.im() / (2 * s), s};
}

Complex root_of_unity(long n, long k, Precision prec) {
  if (n <= 0) throw DomainError("root of unity order must be positive");
  k %= n;
  if (k < 0) k += n;
  const Precision wp = prec + 16;
  // Exact values on the axes keep zeta(n)^n == 1 free of spurious residue.
  if (k == 0) return Complex(Real(1L, prec));
  if (2 * k == n) return Complex(Real(-1L, prec));
  if (4 * k == n) return {Real(0L, prec), Real(1L, prec)};
  if (4 * k == 3 * n) return {Real(0L, prec), Real(-1L, prec)};
  const Real theta = 2 * pi(wp) * k / n;
  return Complex(cos(theta), sin(theta)).with_precision(prec);
}

}  // namespace hyperlog
