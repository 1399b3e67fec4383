#include "hyperlog/real.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <memory>

#include "hyperlog/errors.hpp"

namespace hyperlog {

namespace {

constexpr double kLog2Of10 = 3.3219280948873623479;

Precision max_prec(const Real& a, const Real& b) {
  return std::max(a.precision(), b.precision());
}

// Raise the precision of `a` in place (without rounding) so that a binary op
// with `b` is computed at the larger precision.
void widen(Real& a, const Real& b) {
  if (b.precision() > a.precision()) mpfr_prec_round(a.get(), b.precision(), MPFR_RNDN);
}

}  // namespace

Precision bits_for_digits(long digits) {
  return static_cast<Precision>(std::ceil(static_cast<double>(digits) * kLog2Of10));
}

long digits_for_bits(Precision bits) {
  return static_cast<long>(std::floor(static_cast<double>(bits) / kLog2Of10));
}

Real::Real(Precision prec) {
  mpfr_init2(v_, std::max<Precision>(prec, MPFR_PREC_MIN));
  mpfr_set_zero(v_, 1);
}

Real::Real(long v, Precision prec) : Real(prec) { mpfr_set_si(v_, v, MPFR_RNDN); }

Real::Real(const Rational& q, Precision prec) : Real(prec) {
  mpfr_set_q(v_, q.raw().get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::from_double(double v, Precision prec) {
  Real r(prec);
  mpfr_set_d(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::parse(std::string_view text, Precision prec) {
  if (text.find('/') != std::string_view::npos) return Real(Rational::parse(text), prec);
  Real r(prec);
  const std::string s(text);
  char* end = nullptr;
  if (mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN) == 0 && end == s.c_str()) {
    throw ParseError("expected a decimal number in '" + s + "'", 0);
  }
  if (end == nullptr || *end != '\0') {
    throw ParseError("trailing characters in '" + s + "'",
                     static_cast<std::size_t>(end - s.c_str()));
  }
  return r;
}

Real Real::with_precision(Precision prec) const {
  Real r(prec);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

long Real::to_long_round() const { return mpfr_get_si(v_, MPFR_RNDN); }

Integer Real::round_to_integer() const {
  Real r(precision());
  mpfr_round(r.v_, v_);
  Integer z;
  mpfr_get_z(z.get_mpz_t(), r.v_, MPFR_RNDN);
  return z;
}

long Real::exponent2() const {
  if (mpfr_zero_p(v_)) return -(1L << 40);
  return static_cast<long>(mpfr_get_exp(v_));
}

std::string Real::str(long digits) const {
  if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() < 0 ? "-inf" : "inf");
  if (is_zero()) return "0";
  digits = std::max(1L, digits);
  mpfr_exp_t exp10 = 0;
  std::unique_ptr<char, void (*)(char*)> raw(
      mpfr_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(digits), v_, MPFR_RNDN),
      mpfr_free_str);
  std::string mant(raw.get());
  std::string sign_str;
  if (mant.front() == '-') {
    sign_str = "-";
    mant.erase(0, 1);
  }
  // value = 0.mant * 10^exp10
  if (exp10 > 0 && exp10 <= digits) {
    std::string int_part = mant.substr(0, static_cast<std::size_t>(exp10));
    std::string frac_part = mant.substr(static_cast<std::size_t>(exp10));
    return sign_str + int_part + (frac_part.empty() ? "" : "." + frac_part);
  }
  if (exp10 <= 0 && exp10 > -8) {
    return sign_str + "0." + std::string(static_cast<std::size_t>(-exp10), '0') + mant;
  }
  return sign_str + mant.substr(0, 1) + "." + mant.substr(1) + "e" + std::to_string(exp10 - 1);
}

Real Real::operator-() const {
  Real r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

Real& Real::operator+=(const Real& o) {
  widen(*this, o);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  widen(*this, o);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  widen(*this, o);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  widen(*this, o);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long k) {
  mpfr_mul_si(v_, v_, k, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long k) {
  if (k == 0) throw DomainError("division by zero");
  mpfr_div_si(v_, v_, k, MPFR_RNDN);
  return *this;
}

Real operator+(Real a, long k) {
  mpfr_add_si(a.v_, a.v_, k, MPFR_RNDN);
  return a;
}

Real operator-(Real a, long k) {
  mpfr_sub_si(a.v_, a.v_, k, MPFR_RNDN);
  return a;
}

Real operator-(long k, const Real& a) {
  Real r(a.precision());
  mpfr_si_sub(r.v_, k, a.v_, MPFR_RNDN);
  return r;
}

Real operator/(long k, const Real& a) {
  if (a.is_zero()) throw DomainError("division by zero");
  Real r(a.precision());
  mpfr_si_div(r.v_, k, a.v_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real& a, long k) {
  if (mpfr_nan_p(a.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.v_, k);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

Real abs(const Real& x) {
  Real r(x.precision());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& x) {
  if (x.sign() < 0) throw DomainError("square root of a negative number");
  Real r(x.precision());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real root(const Real& x, unsigned long n) {
  if (n == 0) throw DomainError("zeroth root");
  if (x.sign() < 0 && n % 2 == 0) throw DomainError("even root of a negative number");
  Real r(x.precision());
  mpfr_rootn_ui(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

Real exp(const Real& x) {
  Real r(x.precision());
  mpfr_exp(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real log(const Real& x) {
  if (x.sign() <= 0) throw DomainError("logarithm of a non-positive number");
  Real r(x.precision());
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real sin(const Real& x) {
  Real r(x.precision());
  mpfr_sin(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real cos(const Real& x) {
  Real r(x.precision());
  mpfr_cos(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real atan2(const Real& y, const Real& x) {
  Real r(max_prec(y, x));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long n) {
  Real r(x.precision());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r(max_prec(x, y));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real hypot(const Real& x, const Real& y) {
  Real r(max_prec(x, y));
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Real ldexp(const Real& x, long e) {
  Real r(x.precision());
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

Real floor(const Real& x) {
  Real r(x.precision());
  mpfr_floor(r.get(), x.get());
  return r;
}

}  // namespace hyperlog
