#include "hyperlog/hypergeometric.hpp"

#include <algorithm>
#include <cmath>
#include <span>

#include "hyperlog/errors.hpp"
#include "hyperlog/functions.hpp"
#include "hyperlog/levin.hpp"
#include "hyperlog/quadrature.hpp"

namespace hyperlog {

namespace {

constexpr long kMaxSeriesTerms = 2'000'000;

bool is_nonpositive_integer(const Rational& r) { return r.is_integer() && r.sign() <= 0; }

// 1/Gamma(x), zero at the poles.
Real reciprocal_gamma(const Rational& x, Precision prec) {
  if (is_nonpositive_integer(x)) return Real(0L, prec);
  return 1 / gamma(x, prec);
}

struct DirectSum {
  Real sum;
  Real tail;
  long terms;
};

// Plain summation of sum_n prod (u_i)_n / prod (l_j)_n x^n / n! for x in [0, 1).
DirectSum direct_series(std::span<const Rational> upper, std::span<const Rational> lower,
                        const Real& x, Precision wp) {
  std::vector<Real> up, lo;
  double largest_param = 0.0;
  for (const auto& u : upper) {
    up.emplace_back(u, wp);
    largest_param = std::max(largest_param, std::fabs(u.to_double()));
  }
  for (const auto& l : lower) {
    lo.emplace_back(l, wp);
    largest_param = std::max(largest_param, std::fabs(l.to_double()));
  }
  const double xd = x.to_double();
  const Real xw = x.with_precision(wp);

  Real term(1L, wp);
  Real sum(1L, wp);
  for (long n = 0; n < kMaxSeriesTerms; ++n) {
    Real num(1L, wp);
    double ratio = xd / static_cast<double>(n + 1);
    for (const auto& u : up) {
      num *= u + n;
      ratio *= std::fabs(u.to_double() + static_cast<double>(n));
    }
    Real den(static_cast<long>(n + 1), wp);
    for (const auto& l : lo) {
      den *= l + n;
      ratio /= std::fabs(l.to_double() + static_cast<double>(n));
    }
    term *= num;
    term /= den;
    term *= xw;
    if (term.is_zero()) return {sum, Real(0L, wp), n + 1};
    sum += term;

    if (static_cast<double>(n) > largest_param + 2.0) {
      const double rho = std::max(ratio, xd);
      if (rho < 1.0) {
        const Real tail = abs(term) * Real::from_double(rho / (1.0 - rho), 64);
        if (tail.is_zero() || tail.exponent2() < sum.exponent2() - static_cast<long>(wp)) {
          return {sum, tail, n + 2};
        }
      }
    }
  }
  throw ConvergenceError("hypergeometric series did not converge", 0);
}

}  // namespace

Rational HGSpec::parameter_excess() const {
  Rational s(0);
  for (const auto& l : lower) s += l;
  for (const auto& u : upper) s -= u;
  return s;
}

bool HGSpec::terminates() const {
  return std::any_of(upper.begin(), upper.end(), is_nonpositive_integer);
}

void HGSpec::validate() const {
  for (const auto& l : lower) {
    if (is_nonpositive_integer(l)) {
      throw PreconditionError("lower parameter " + l.str() + " is a non-positive integer");
    }
  }
  if (argument.sign() < 0 || argument > 1) {
    throw PreconditionError("argument must lie in [0, 1]");
  }
  if (argument == 1 && !terminates() && parameter_excess().sign() <= 0) {
    throw DomainError("series diverges at x = 1: parameter excess " + parameter_excess().str() +
                      " is not positive");
  }
}

SeriesResult phg_series(const HGSpec& spec, Precision prec) {
  spec.validate();
  const Precision wp = prec + guard_bits(prec);

  if (spec.argument < 1 || spec.terminates()) {
    DirectSum d = direct_series(spec.upper, spec.lower, spec.argument, wp);
    return {d.sum.with_precision(prec), d.sum.with_precision(prec), d.tail.with_precision(64),
            d.terms, false};
  }

  // Terms decay like n^-(1 + excess); Levin u needs about one term per three
  // bits of target and 8-9 working bits per term to absorb its cancellation.
  const long n_terms = static_cast<long>(prec / 3) + 16;
  const Precision levin_wp = 9 * n_terms + prec;
  std::vector<Real> up, lo;
  for (const auto& u : spec.upper) up.emplace_back(u, levin_wp);
  for (const auto& l : spec.lower) lo.emplace_back(l, levin_wp);

  std::vector<Real> terms;
  terms.reserve(static_cast<std::size_t>(n_terms));
  Real term(1L, levin_wp);
  Real raw(0L, levin_wp);
  for (long n = 0; n < n_terms; ++n) {
    terms.push_back(term);
    raw += term;
    Real num(1L, levin_wp);
    Real den(static_cast<long>(n + 1), levin_wp);
    for (const auto& u : up) num *= u + n;
    for (const auto& l : lo) den *= l + n;
    term *= num;
    term /= den;
  }
  LevinEstimate est = levin_u(terms);
  return {est.value.with_precision(prec), raw.with_precision(prec),
          est.error_estimate.with_precision(64), n_terms, true};
}

Real gauss_sum(const Rational& a, const Rational& b, const Rational& c, Precision prec) {
  if (is_nonpositive_integer(c)) {
    throw PreconditionError("c must not be a non-positive integer");
  }
  if ((c - a - b).sign() <= 0) {
    throw PreconditionError("Gauss summation requires c - a - b > 0 (got " + (c - a - b).str() + ")");
  }
  if (a.is_zero() || b.is_zero()) return Real(1L, prec);
  const Precision wp = prec + guard_bits(prec);
  const Real value = gamma(c, wp) * gamma(c - a - b, wp) * reciprocal_gamma(c - a, wp) *
                     reciprocal_gamma(c - b, wp);
  return value.with_precision(prec);
}

Hyp2F1::Hyp2F1(const Rational& a, const Rational& b, const Rational& c, Precision prec)
    : a_(a),
      b_(b),
      c_(c),
      prec_(prec),
      wp_(prec + guard_bits(prec)),
      mode_(Mode::kSeriesOnly),
      k0_(wp_),
      k1_(wp_),
      psi_a_(wp_),
      psi_b_(wp_),
      psi_1_(wp_) {
  if (is_nonpositive_integer(c)) throw PreconditionError("c must not be a non-positive integer");
  if (is_nonpositive_integer(a) || is_nonpositive_integer(b)) return;  // polynomial
  const Rational s = c - a - b;
  if (s.is_zero()) {
    mode_ = Mode::kLogarithmic;
    k0_ = gamma(a + b, wp_) / (gamma(a, wp_) * gamma(b, wp_));
    psi_a_ = digamma(a, wp_);
    psi_b_ = digamma(b, wp_);
    psi_1_ = digamma(Rational(1), wp_);
  } else if (!s.is_integer()) {
    mode_ = Mode::kRegular;
    const Real gc = gamma(c, wp_);
    k0_ = gc * gamma(s, wp_) * reciprocal_gamma(c - a, wp_) * reciprocal_gamma(c - b, wp_);
    k1_ = gc * gamma(-s, wp_) * reciprocal_gamma(a, wp_) * reciprocal_gamma(b, wp_);
  }
}

Real Hyp2F1::operator()(const Real& z, const Real& one_minus_z) const {
  if (z.sign() < 0 || one_minus_z.sign() <= 0) {
    throw PreconditionError("2F1 evaluator requires 0 <= z < 1");
  }
  const Real half(Rational(1, 2), 64);
  if (mode_ == Mode::kSeriesOnly || z <= half) {
    const Rational upper[] = {a_, b_};
    const Rational lower[] = {c_};
    return direct_series(upper, lower, z, wp_).sum.with_precision(prec_);
  }
  const Real w = one_minus_z.with_precision(wp_);
  return (mode_ == Mode::kLogarithmic ? near_one_logarithmic(w) : near_one_regular(w))
      .with_precision(prec_);
}

// 2F1(a,b;a+b;z) = Gamma(a+b)/(Gamma(a)Gamma(b)) sum_n (a)_n (b)_n / n!^2
//   [2 psi(n+1) - psi(a+n) - psi(b+n) - log w] w^n,  w = 1 - z.
Real Hyp2F1::near_one_logarithmic(const Real& w) const {
  const Real log_w = log(w);
  const Real ar(a_, wp_), br(b_, wp_);
  Real coeff(1L, wp_);
  Real psi_n1 = psi_1_;
  Real psi_an = psi_a_;
  Real psi_bn = psi_b_;
  Real sum(0L, wp_);
  const double wd = w.to_double();
  const double largest = std::max(std::fabs(a_.to_double()), std::fabs(b_.to_double()));
  for (long n = 0; n < kMaxSeriesTerms; ++n) {
    const Real term = coeff * (2 * psi_n1 - psi_an - psi_bn - log_w);
    sum += term;
    const Real an = ar + n;
    const Real bn = br + n;
    const Real n1(n + 1, wp_);
    coeff *= an * bn;
    coeff /= n1 * n1;
    coeff *= w;
    psi_n1 += 1 / n1;
    psi_an += 1 / an;
    psi_bn += 1 / bn;
    if (coeff.is_zero()) break;
    if (static_cast<double>(n) > largest + 2.0) {
      // The bracket grows like log n, so bound the tail with a slightly
      // inflated ratio.
      const double rho = std::min(0.999999, wd * (1.0 + 2.0 / static_cast<double>(n + 1)));
      const Real bracket = abs(2 * psi_n1 - psi_an - psi_bn - log_w) + 1;
      const Real tail = abs(coeff) * bracket * Real::from_double(1.0 / (1.0 - rho), 64);
      if (tail.is_zero() || tail.exponent2() < sum.exponent2() - static_cast<long>(wp_)) break;
    }
  }
  return k0_ * sum;
}

// 2F1(a,b;c;z) = K0 2F1(a,b;a+b-c+1;w) + w^(c-a-b) K1 2F1(c-a,c-b;c-a-b+1;w).
Real Hyp2F1::near_one_regular(const Real& w) const {
  const Rational s = c_ - a_ - b_;
  Real result(0L, wp_);
  if (!k0_.is_zero()) {
    const Rational upper[] = {a_, b_};
    const Rational lower[] = {a_ + b_ - c_ + Rational(1)};
    result += k0_ * direct_series(upper, lower, w, wp_).sum;
  }
  if (!k1_.is_zero()) {
    const Rational upper[] = {c_ - a_, c_ - b_};
    const Rational lower[] = {s + Rational(1)};
    result += k1_ * exp(Real(s, wp_) * log(w)) * direct_series(upper, lower, w, wp_).sum;
  }
  return result;
}

Real hyp2f1(const Rational& a, const Rational& b, const Rational& c, const Real& z) {
  return Hyp2F1(a, b, c, z.precision())(z);
}

Hyp2F1Derivatives hyp2f1_derivatives(const Rational& a, const Rational& b, const Rational& c,
                                     const Real& z, Precision prec) {
  if (z.sign() < 0 || z >= 1) throw PreconditionError("derivative series requires 0 <= z < 1");
  if (is_nonpositive_integer(c)) throw PreconditionError("c must not be a non-positive integer");
  const Precision wp = prec + guard_bits(prec);
  const Real ar(a, wp), br(b, wp), cr(c, wp);
  const Real zw = z.with_precision(wp);
  const double zd = z.to_double();
  const double largest =
      std::max({std::fabs(a.to_double()), std::fabs(b.to_double()), std::fabs(c.to_double())});

  // coeff_n = (a)_n (b)_n / ((c)_n n!); zpow = z^(n-2) tracked as z^n / z^2
  // is avoided by carrying z^n, z^(n-1), z^(n-2) through one running power.
  Real coeff(1L, wp);
  Real u(0L, wp), du(0L, wp), d2u(0L, wp);
  Real zpow(1L, wp);  // z^n
  Real zpow1(0L, wp); // z^(n-1) (zero for n = 0)
  Real zpow2(0L, wp); // z^(n-2)
  for (long n = 0; n < kMaxSeriesTerms; ++n) {
    u += coeff * zpow;
    if (n >= 1) du += coeff * zpow1 * n;
    if (n >= 2) d2u += coeff * zpow2 * (n * (n - 1));
    coeff *= (ar + n) * (br + n);
    coeff /= (cr + n) * Real(n + 1, wp);
    zpow2 = zpow1;
    zpow1 = zpow;
    zpow *= zw;
    if (coeff.is_zero()) break;
    if (static_cast<double>(n) > largest + 2.0) {
      // Next second-derivative term dominates the remaining tail of all three.
      const double m = static_cast<double>(n + 1);
      const double rho = std::min(0.999999, zd * (1.0 + 3.0 / m));
      const Real next = abs(coeff) * zpow1 * Real::from_double(m * m / (1.0 - rho), 64);
      const Real scale = max(max(abs(u), abs(du)), abs(d2u));
      if (next.is_zero() || next.exponent2() < scale.exponent2() - static_cast<long>(wp)) break;
    }
  }
  return {u.with_precision(prec), du.with_precision(prec), d2u.with_precision(prec)};
}

Real hg2f1_ode_residual(const Rational& a, const Rational& b, const Rational& c, const Real& t0,
                        Precision prec) {
  if (t0.sign() <= 0 || t0 >= 1) throw PreconditionError("t0 must lie in (0, 1)");
  const Precision wp = prec + guard_bits(prec);
  const auto d = hyp2f1_derivatives(a, b, c, t0, wp);
  const Real t = t0.with_precision(wp);
  const Real residual = t * (1 - t) * d.second +
                        (Real(c, wp) - Real(a + b + Rational(1), wp) * t) * d.first -
                        Real(a * b, wp) * d.value;
  return residual.with_precision(prec);
}

IntegralResult euler_transform_3f2(const Rational& a, const Rational& b, const Rational& q,
                                   Precision prec) {
  if (q.sign() <= 0) throw PreconditionError("Euler integral requires q > 0");
  if (is_nonpositive_integer(a + b)) {
    throw PreconditionError("a + b must not be a non-positive integer");
  }
  const Precision wp = prec + guard_bits(prec);
  const Hyp2F1 f(a, b, a + b, wp);
  const Real qr(q, wp);
  const Real qm1(q - Rational(1), wp);
  const bool power_free = q == Rational(1);

  const UnitIntegrand integrand = [&](const Real& t, const Real& one_minus_t) {
    Real v = f(t, one_minus_t);
    if (!power_free) v *= exp(qm1 * log(t));
    return v * qr;
  };
  QuadratureOptions options;
  options.endpoint_exponent = std::min(1.0, q.to_double());
  QuadratureResult r = tanh_sinh(integrand, prec, options);
  return {std::move(r.value), std::move(r.error_estimate), r.achieved_digits, r.evaluations};
}

}  // namespace hyperlog
