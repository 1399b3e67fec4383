#include "hyperlog/periods.hpp"

#include <algorithm>

#include "hyperlog/errors.hpp"
#include "hyperlog/functions.hpp"
#include "hyperlog/quadrature.hpp"

namespace hyperlog {

namespace {

RationalFunction t_var() { return RationalFunction(Polynomial::x()); }

// Strips factors t and (t - 1); a constant remains iff the denominator
// divides a power of t (1 - t).
bool supported_on_zero_one(Polynomial p) {
  const Polynomial t = Polynomial::x();
  const Polynomial t_minus_one{Rational(-1), Rational(1)};
  for (const auto& f : {t, t_minus_one}) {
    while (p.degree() > 0) {
      auto [q, r] = divmod(p, f);
      if (!r.is_zero()) break;
      p = q;
    }
  }
  return p.degree() == 0;
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  return divmod(a * b, gcd(a, b)).first.monic();
}

// Bracketed Newton: f(lo) and f(hi) have opposite signs. Falls back to
// bisection whenever the Newton step leaves the bracket.
template <class F, class DF>
Real solve_bracketed(F f, DF df, Real lo, Real hi, Real x, Precision wp) {
  const bool rising = f(lo).sign() < 0;
  for (long it = 0; it < wp + 100; ++it) {
    const Real fx = f(x);
    if (fx.is_zero()) return x;
    if ((fx.sign() < 0) == rising) lo = x; else hi = x;
    const Real d = df(x);
    Real next = d.is_zero() ? (lo + hi) / 2 : x - fx / d;
    if (!(next > lo && next < hi)) next = (lo + hi) / 2;
    const Real step = abs(next - x);
    x = next;
    if (step.is_zero() || step.exponent2() < x.exponent2() - static_cast<long>(wp) + 2) return x;
  }
  return x;
}

}  // namespace

ConnectionMatrix ConnectionMatrix::elliptic_family() {
  const RationalFunction t = t_var();
  const RationalFunction scale = RationalFunction(Rational(1)) / (Rational(6) * (t - t * t));
  ConnectionMatrix m;
  m.entries[0][0] = scale * t;
  m.entries[0][1] = scale * t;
  m.entries[1][0] = -scale;
  m.entries[1][1] = -(scale * t);
  return m;
}

ConnectionMatrix ConnectionMatrix::scaled(const Rational& c) const {
  ConnectionMatrix m = *this;
  for (auto& row : m.entries)
    for (auto& e : row) e = e * RationalFunction(c);
  return m;
}

bool ConnectionMatrix::regular_singular_normalized() const {
  for (const auto& row : entries)
    for (const auto& e : row)
      if (!supported_on_zero_one(e.denominator())) return false;
  return true;
}

PicardFuchs derive_picard_fuchs(const ConnectionMatrix& a) {
  // omega_1' = a11 w1 + a21 w2 and omega_2' = a12 w1 + a22 w2, so
  // w2 = (w1' - a11 w1) / a21 and
  // w1'' = (a11 + g) w1' + (a11' + a21 a12 - g a11) w1 with g = (a21' + a21 a22) / a21.
  const auto& a11 = a.entries[0][0];
  const auto& a12 = a.entries[0][1];
  const auto& a21 = a.entries[1][0];
  const auto& a22 = a.entries[1][1];
  if (a21.is_zero()) {
    throw DomainError("elimination failed: omega_1 and its derivative are linearly dependent");
  }
  const RationalFunction g = (a21.derivative() + a21 * a22) / a21;
  const RationalFunction t = t_var();
  const RationalFunction p2 = t - t * t;
  return PicardFuchs{
      p2,
      -(p2 * (a11 + g)),
      -(p2 * (a11.derivative() + a21 * a12 - g * a11)),
  };
}

FrobeniusSolution::FrobeniusSolution(const PicardFuchs& op, const Rational& origin,
                                     const Rational& direction) {
  if (direction == Rational(0)) throw PreconditionError("direction must be nonzero");
  const std::array<const RationalFunction*, 3> p{&op.p0, &op.p1, &op.p2};
  Polynomial common(Rational(1));
  for (const auto* f : p) common = lcm(common, f->denominator());
  int shift = -1000;
  for (int k = 0; k < 3; ++k) {
    const Polynomial cleared = divmod(p[k]->numerator() * common, p[k]->denominator()).first;
    Polynomial local = cleared.affine(origin, direction);
    Rational sigma_k(1);
    for (int i = 0; i < k; ++i) sigma_k = sigma_k * direction;
    local = local * Polynomial(sigma_k);
    coeffs_[k] = local.coefficients();
    for (int j = 0; j < static_cast<int>(coeffs_[k].size()); ++j)
      if (coeffs_[k][j] != Rational(0)) shift = std::max(shift, k - j);
  }
  if (shift != 1) {
    throw DomainError("origin is not a regular singular point with a holomorphic exponent-0 solution");
  }
}

Real FrobeniusSolution::operator()(const Real& s) const {
  const Precision wp = s.precision() + guard_bits(s.precision());
  const Real sw = s.with_precision(wp);
  // Coefficient of s^m in L(sum c_n s^n): sum_{k,j} q_kj (m+k-j)_(k) c_{m+k-j}.
  auto falling = [](long n, int k) {
    long r = 1;
    for (int i = 0; i < k; ++i) r *= n - i;
    return r;
  };
  std::vector<Real> c{Real(1L, wp)};
  Real sum(1L, wp);
  Real power(1L, wp);
  int small_run = 0;
  for (long m = 0; m < 200000; ++m) {
    const long n_new = m + 1;
    Real lead(0L, wp);
    Real rest(0L, wp);
    for (int k = 0; k < 3; ++k) {
      for (int j = 0; j < static_cast<int>(coeffs_[k].size()); ++j) {
        if (coeffs_[k][j] == Rational(0)) continue;
        const long idx = m + k - j;
        if (idx < 0) continue;
        const Real q(coeffs_[k][j], wp);
        if (idx == n_new) {
          lead += q * Real(falling(idx, k), wp);
        } else {
          rest += q * Real(falling(idx, k), wp) * c[idx];
        }
      }
    }
    if (lead.is_zero()) throw DomainError("resonant exponent in Frobenius recurrence");
    c.push_back(-rest / lead);
    power *= sw;
    const Real term = c.back() * power;
    sum += term;
    if (term.is_zero() || term.exponent2() < sum.exponent2() - static_cast<long>(wp)) {
      if (++small_run >= 3) return sum.with_precision(s.precision());
    } else {
      small_run = 0;
    }
  }
  throw ConvergenceError("Frobenius series did not converge; |s| too close to the radius", 0.0);
}

CubicRoots cubic_roots(const Real& t, Precision prec) {
  return cubic_roots(t, 1 - t, prec);
}

CubicRoots cubic_roots(const Real& t_in, const Real& one_minus_t_in, Precision prec) {
  if (!(t_in > 0) || !(one_minus_t_in > 0)) {
    throw PreconditionError("t must lie strictly inside (0, 1) (got " + t_in.str(20) + ")");
  }
  const Precision wp = prec + guard_bits(prec);
  const Real t = t_in.with_precision(wp);
  const Real t2 = t * t;
  const Real eps = one_minus_t_in.with_precision(wp) * (1 + t);  // 1 - t^2
  const Real zero(0L, wp);
  const Real half = Real(Rational(1, 2), wp);
  CubicRoots r;

  if (t2 >= half) {
    // beta, gamma = 1 + delta with delta^2 (3 + 2 delta) = 1 - t^2.
    auto g = [&](const Real& d) { return d * d * (3 + 2 * d) - eps; };
    auto dg = [&](const Real& d) { return 6 * d * (d + 1); };
    const Real guess = sqrt(eps / 3);
    const Real up = solve_bracketed(g, dg, zero, half, guess, wp);
    const Real down = solve_bracketed(g, dg, -half, zero, -guess, wp);
    r.beta = 1 + down;
    r.gamma = 1 + up;
    r.alpha = -half - (up + down);
    r.gamma_minus_beta = up - down;
    r.beta_minus_alpha = Real(Rational(3, 2), wp) + up + 2 * down;
  } else {
    // alpha, beta near 0 with x^2 (3 - 2x) = t^2.
    auto h = [&](const Real& x) { return x * x * (2 * x - 3) + t2; };
    auto dh = [&](const Real& x) { return 6 * x * (x - 1); };
    const Real guess = t / sqrt(Real(3L, wp));
    r.beta = solve_bracketed(h, dh, zero, Real(1L, wp), guess, wp);
    r.alpha = solve_bracketed(h, dh, -half, zero, -guess, wp);
    r.gamma = Real(Rational(3, 2), wp) - r.alpha - r.beta;
    r.beta_minus_alpha = r.beta - r.alpha;
    r.gamma_minus_beta = Real(Rational(3, 2), wp) - r.alpha - 2 * r.beta;
  }
  r.gamma_minus_alpha = r.gamma_minus_beta + r.beta_minus_alpha;
  if (r.beta_minus_alpha.is_zero() || r.gamma_minus_beta.is_zero()) {
    throw DomainError("root collision: t too close to 0 or 1 for the working precision");
  }
  return r;
}

const char* to_string(Cycle c) {
  return c == Cycle::kVanishingAtOne ? "vanishing-at-1" : "vanishing-at-0";
}

Cycle parse_cycle(const std::string& text) {
  if (text == "v1" || text == "vanishing-at-1") return Cycle::kVanishingAtOne;
  if (text == "v0" || text == "vanishing-at-0") return Cycle::kVanishingAtZero;
  throw PreconditionError("unknown cycle '" + text + "' (expected v1 or v0)");
}

Real real_period(const Real& t, const Real& one_minus_t, Cycle cycle, Precision prec) {
  const Precision wp = prec + guard_bits(prec);
  const CubicRoots r = cubic_roots(t, one_minus_t, wp);
  // 2 * integral over the gap of dx / sqrt|2 (x-a)(x-b)(x-g)|
  //   = sqrt2 * pi / AGM(sqrt(g - a), sqrt(other gap)).
  const Real& other = cycle == Cycle::kVanishingAtOne ? r.beta_minus_alpha : r.gamma_minus_beta;
  const Real m = agm(sqrt(r.gamma_minus_alpha), sqrt(other));
  return (sqrt(Real(2L, wp)) * pi(wp) / m).with_precision(prec);
}

Real real_period(const PeriodSpec& spec, Precision prec) {
  return real_period(spec.t, 1 - spec.t.with_precision(prec + guard_bits(prec)), spec.cycle, prec);
}

Real real_period_by_quadrature(const PeriodSpec& spec, Precision prec) {
  const Precision wp = prec + guard_bits(prec);
  const CubicRoots r = cubic_roots(spec.t, prec);
  // Over [lo, hi] with x = lo + (hi - lo) s the integrand becomes
  // 1 / sqrt(2 s (1 - s) (x - far root)), with x - far root written from the gaps.
  UnitIntegrand f;
  if (spec.cycle == Cycle::kVanishingAtOne) {
    f = [&](const Real& s, const Real& s1) {
      return 1 / sqrt(2 * s * s1 * (r.beta_minus_alpha + r.gamma_minus_beta * s));
    };
  } else {
    f = [&](const Real& s, const Real& s1) {
      return 1 / sqrt(2 * s * s1 * (r.gamma_minus_beta + r.beta_minus_alpha * s1));
    };
  }
  QuadratureOptions opts;
  opts.endpoint_exponent = 0.5;
  const QuadratureResult q = tanh_sinh(f, wp, opts);
  return (2 * q.value).with_precision(prec);
}

Real thimble_integral(Cycle cycle, Precision prec) {
  const Precision wp = prec + guard_bits(prec);
  UnitIntegrand f = [&](const Real& t, const Real& t1) {
    return real_period(t, t1, cycle, wp);
  };
  return tanh_sinh(f, wp).value.with_precision(prec);
}

LimitEstimate vanishing_period_limit(std::span<const Real> t_samples, Precision prec) {
  if (t_samples.empty()) throw PreconditionError("at least one sample is required");
  const Precision wp = prec + guard_bits(prec);
  const FrobeniusSolution u(derive_picard_fuchs(ConnectionMatrix::elliptic_family()), Rational(1),
                            Rational(-1));
  LimitEstimate out{Real(wp), Real(0L, wp), {}};
  Real closest;
  bool first = true;
  for (const Real& t_in : t_samples) {
    const Real t = t_in.with_precision(wp);
    const Real t1 = 1 - t;
    const Real period = real_period(t, t1, Cycle::kVanishingAtOne, wp);
    const Real k = period / u(t1 * (1 + t));
    out.per_sample.push_back(k.with_precision(prec));
    if (first || t1 < closest) {
      closest = t1;
      out.value = k;
      first = false;
    }
  }
  for (const Real& a : out.per_sample)
    for (const Real& b : out.per_sample) out.spread = max(out.spread, abs(a - b));
  out.value = out.value.with_precision(prec);
  out.spread = out.spread.with_precision(prec);
  return out;
}

}  // namespace hyperlog
