#include "hyperlog/pslq.hpp"

#include <algorithm>
#include <cmath>

#include "hyperlog/errors.hpp"
#include "hyperlog/functions.hpp"
#include "hyperlog/hypergeometric.hpp"

namespace hyperlog {

namespace {

using Matrix = std::vector<std::vector<Real>>;

Real nint(const Real& x) { return floor(x + Real(Rational(1, 2), x.precision())); }

Real max_abs(const std::vector<Real>& v) {
  Real m(0L, v.front().precision());
  for (const auto& x : v) m = max(m, abs(x));
  return m;
}

Real relative_residual(const std::vector<Real>& x, const std::vector<long>& m) {
  Real s(0L, x.front().precision());
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * m[i];
  const Real scale = max_abs(x);
  return scale.is_zero() ? abs(s) : abs(s) / scale;
}

void normalize_sign(std::vector<long>& m) {
  for (long v : m) {
    if (v == 0) continue;
    if (v < 0)
      for (long& w : m) w = -w;
    return;
  }
}

struct Pslq {
  std::size_t n;
  Precision prec;
  std::vector<Real> y;
  Matrix h, a, b;

  // Size-reduces row i of H against rows j, from `top` down to 0.
  void reduce_row(std::size_t i, std::size_t top) {
    for (std::size_t jj = top + 1; jj-- > 0;) {
      if (h[jj][jj].is_zero()) continue;
      const Real t = nint(h[i][jj] / h[jj][jj]);
      if (t.is_zero()) continue;
      y[jj] += t * y[i];
      for (std::size_t k = 0; k <= jj; ++k) h[i][k] -= t * h[jj][k];
      for (std::size_t k = 0; k < n; ++k) {
        a[i][k] -= t * a[jj][k];
        b[k][jj] += t * b[k][i];
      }
    }
  }
};

}  // namespace

const char* to_string(RelationStatus s) {
  switch (s) {
    case RelationStatus::kFound: return "found";
    case RelationStatus::kNoneBelowBound: return "none-below-bound";
    case RelationStatus::kPrecisionExhausted: return "precision-exhausted";
  }
  return "?";
}

Precision pslq_required_bits(std::size_t n, long max_norm) {
  const double digits = static_cast<double>(n) * std::log10(static_cast<double>(std::max(max_norm, 2L))) * 1.1 + 20;
  return bits_for_digits(static_cast<long>(std::ceil(digits)));
}

RelationReport find_relation(const std::vector<Real>& values, long max_norm, Precision prec) {
  const std::size_t n = values.size();
  if (n < 2) throw PreconditionError("find_relation needs at least two values");
  if (max_norm < 1) throw PreconditionError("max_norm must be positive");
  RelationReport rep;
  rep.max_norm = max_norm;
  rep.precision = prec;
  rep.norm_bound = Real(0L, prec);
  rep.residual = Real(0L, prec);

  std::vector<Real> x;
  for (const auto& v : values) {
    if (!mpfr_number_p(v.get())) throw PreconditionError("find_relation values must be finite");
    x.push_back(v.with_precision(prec));
  }
  if (prec < pslq_required_bits(n, max_norm)) {
    rep.status = RelationStatus::kPrecisionExhausted;
    return rep;
  }

  // A (numerically) zero entry is its own relation.
  const Real scale = max_abs(x);
  if (scale.is_zero()) throw PreconditionError("find_relation values are all zero");
  for (std::size_t k = 0; k < n; ++k) {
    if (x[k].is_zero() || x[k].exponent2() < scale.exponent2() - static_cast<long>(prec) + 8) {
      std::vector<long> m(n, 0);
      m[k] = 1;
      rep.relation = m;
      rep.residual = abs(x[k]) / scale;
      rep.status = RelationStatus::kFound;
      return rep;
    }
  }

  Pslq s{n, prec, {}, {}, {}, {}};
  std::vector<Real> tail(n);
  Real acc(0L, prec);
  for (std::size_t k = n; k-- > 0;) {
    acc += x[k] * x[k];
    tail[k] = sqrt(acc);
  }
  const Real s0 = tail[0];
  for (std::size_t k = 0; k < n; ++k) {
    s.y.push_back(x[k] / s0);
    tail[k] /= s0;
  }
  s.h.assign(n, std::vector<Real>(n - 1, Real(0L, prec)));
  for (std::size_t j = 0; j + 1 < n; ++j) {
    s.h[j][j] = tail[j + 1] / tail[j];
    for (std::size_t i = j + 1; i < n; ++i) s.h[i][j] = -s.y[i] * s.y[j] / (tail[j] * tail[j + 1]);
  }
  s.a.assign(n, std::vector<Real>(n, Real(0L, prec)));
  s.b = s.a;
  for (std::size_t k = 0; k < n; ++k) s.a[k][k] = s.b[k][k] = Real(1L, prec);
  for (std::size_t i = 1; i < n; ++i) s.reduce_row(i, i - 1);

  const Real gamma_c = sqrt(Real(Rational(4, 3), prec));
  const Real stop_bound = sqrt(Real(static_cast<long>(n), prec)) * Real(max_norm, prec);
  const long detect_exp = -static_cast<long>(prec) * 3 / 4;
  // Multipliers this large no longer fit the working precision.
  const long blowup_exp = static_cast<long>(prec) - 32;

  for (long iter = 1; iter <= 200000; ++iter) {
    rep.iterations = iter;
    std::size_t m = 0;
    Real best(0L, prec);
    Real weight(1L, prec);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      weight *= gamma_c;
      const Real v = weight * abs(s.h[i][i]);
      if (v > best) {
        best = v;
        m = i;
      }
    }
    std::swap(s.y[m], s.y[m + 1]);
    std::swap(s.a[m], s.a[m + 1]);
    std::swap(s.h[m], s.h[m + 1]);
    for (std::size_t k = 0; k < n; ++k) std::swap(s.b[k][m], s.b[k][m + 1]);
    if (m + 2 < n) {
      const Real t0 = hypot(s.h[m][m], s.h[m][m + 1]);
      const Real t1 = s.h[m][m] / t0;
      const Real t2 = s.h[m][m + 1] / t0;
      for (std::size_t i = m; i < n; ++i) {
        const Real t3 = s.h[i][m];
        const Real t4 = s.h[i][m + 1];
        s.h[i][m] = t1 * t3 + t2 * t4;
        s.h[i][m + 1] = t1 * t4 - t2 * t3;
      }
    }
    for (std::size_t i = m + 1; i < n; ++i) s.reduce_row(i, std::min(i - 1, m + 1));

    Real hmax(0L, prec);
    for (std::size_t j = 0; j + 1 < n; ++j) hmax = max(hmax, abs(s.h[j][j]));
    if (!hmax.is_zero()) rep.norm_bound = max(rep.norm_bound, 1 / hmax);

    std::size_t jmin = 0;
    for (std::size_t j = 1; j < n; ++j)
      if (abs(s.y[j]) < abs(s.y[jmin])) jmin = j;
    if (s.y[jmin].is_zero() || s.y[jmin].exponent2() < detect_exp) {
      std::vector<long> rel(n);
      long inf_norm = 0;
      bool fits = true;
      for (std::size_t k = 0; k < n; ++k) {
        if (abs(s.b[k][jmin]) > Real(max_norm, prec)) fits = false;
        rel[k] = s.b[k][jmin].to_long_round();
        inf_norm = std::max(inf_norm, std::labs(rel[k]));
      }
      if (!fits) {
        rep.status = RelationStatus::kNoneBelowBound;
        return rep;
      }
      normalize_sign(rel);
      rep.residual = relative_residual(x, rel);
      rep.relation = rel;
      rep.status = RelationStatus::kFound;
      return rep;
    }
    if (rep.norm_bound > stop_bound) {
      rep.status = RelationStatus::kNoneBelowBound;
      return rep;
    }
    for (const auto& row : s.a)
      for (const auto& v : row)
        if (!v.is_zero() && v.exponent2() > blowup_exp) {
          rep.status = RelationStatus::kPrecisionExhausted;
          return rep;
        }
  }
  rep.status = RelationStatus::kPrecisionExhausted;
  return rep;
}

RelationReport find_relation(const ValueProducer& produce, long max_norm, Precision prec) {
  RelationReport rep = find_relation(produce(prec), max_norm, prec);
  if (rep.status != RelationStatus::kFound) return rep;
  const std::vector<Real> twice = produce(2 * prec);
  const Real r2 = relative_residual(twice, *rep.relation);
  rep.confirmation_residual = r2;
  const Real shrunk = ldexp(rep.residual, -static_cast<long>(prec) / 2);
  const Real floor_2p = ldexp(Real(1L, 2 * prec), -static_cast<long>(2 * prec) * 9 / 10);
  if (!(r2 <= max(shrunk.with_precision(2 * prec), floor_2p))) {
    rep.status = RelationStatus::kPrecisionExhausted;
  }
  return rep;
}

namespace {

struct DiscoveryBasis {
  std::vector<std::string> labels;
  // Complex entries at precision p, in label order.
  std::function<std::vector<Complex>(Precision)> values;
};

Complex residual_complex(const std::vector<Complex>& v, const std::vector<long>& m) {
  Complex s(Real(0L, v.front().precision()));
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * Real(m[i], v.front().precision());
  return s;
}

Real max_modulus(const std::vector<Complex>& v) {
  Real m(0L, v.front().precision());
  for (const auto& z : v) m = max(m, z.abs());
  return m;
}

bool is_one(const AlgExpr& e) { return e.as_rational() == Rational(1); }

AlgExpr scaled(const Rational& q, const AlgExpr& e) {
  if (is_one(e)) return AlgExpr(q);
  if (q == Rational(1)) return e;
  return AlgExpr(q) * e;
}

// sum_k q_k * e_k, skipping zero q_k; nullopt when all vanish.
std::optional<AlgExpr> combination(const std::vector<Rational>& q, const std::vector<AlgExpr>& e) {
  std::optional<AlgExpr> out;
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (q[k] == Rational(0)) continue;
    const bool negative = q[k] < Rational(0);
    const AlgExpr term = scaled(negative && out ? -q[k] : q[k], e[k]);
    if (!out) out = term;
    else out = negative ? *out - term : *out + term;
  }
  return out;
}

}  // namespace

Discovery discover_formula(const HGTriple& t, const std::vector<TransTerm>& candidates, Precision prec,
                           const DiscoveryOptions& options) {
  if (!condition_holds(t).holds) {
    throw PreconditionError("the triple fails the interlacing condition; no log formula is predicted");
  }
  if (candidates.empty()) throw PreconditionError("at least one candidate is required");
  const AlgExpr prefactor = options.prefactor.value_or(AlgExpr::pi());
  std::vector<AlgExpr> mults = options.multipliers;
  if (mults.empty()) {
    mults = {AlgExpr(1), AlgExpr::sqrt(AlgExpr(2)), AlgExpr::sqrt(AlgExpr(3)), AlgExpr::sqrt(AlgExpr(5)),
             AlgExpr::sqrt(AlgExpr(6))};
  }

  auto f_value = [&t](Precision p) {
    const HGSpec spec{{t.a(), t.b(), t.q()}, {t.a() + t.b(), t.q() + Rational(1)}, Real(1L, p)};
    return phg_series(spec, p).value;
  };

  // Complex mode as soon as any ingredient has an imaginary part.
  Discovery out;
  {
    const Precision p0 = 128;
    auto complexish = [&](const Complex& z) {
      return !z.im().is_zero() && z.im().exponent2() > z.abs().exponent2() - 64;
    };
    out.complex_mode = complexish(prefactor.eval(p0));
    for (const auto& m : mults) out.complex_mode = out.complex_mode || complexish(m.eval(p0));
    for (const auto& c : candidates) out.complex_mode = out.complex_mode || complexish(c.eval(p0));
  }
  const bool cplx = out.complex_mode;

  DiscoveryBasis basis;
  basis.labels.push_back(prefactor.str() + "*F");
  for (const auto& c : candidates)
    for (const auto& m : mults) basis.labels.push_back((is_one(m) ? "" : m.str() + "*") + c.str());
  if (cplx) {
    for (const auto& m : mults) basis.labels.push_back((is_one(m) ? "" : m.str() + "*") + "pi_i");
  } else {
    basis.labels.push_back("pi");
  }
  basis.values = [&](Precision p) {
    std::vector<Complex> v;
    v.push_back(prefactor.eval(p) * f_value(p));
    std::vector<Complex> mv;
    for (const auto& m : mults) mv.push_back(m.eval(p));
    for (const auto& c : candidates) {
      const Complex cv = c.eval(p);
      for (const auto& m : mv) v.push_back(m * cv);
    }
    if (cplx) {
      const Complex pi_i(Real(0L, p), pi(p));
      for (const auto& m : mv) v.push_back(m * pi_i);
    } else {
      v.push_back(Complex(pi(p)));
    }
    return v;
  };
  const std::size_t n = basis.labels.size();

  int retries = 0;
  Precision boost = 1;
  for (long bound = std::min(100L, options.max_norm);;) {
    const Precision p = boost * std::max(prec, pslq_required_bits(n, bound));
    const std::vector<Complex> vc = basis.values(p);
    std::vector<Real> vr;
    const Real lambda = sqrt(Real(7L, p)) - 2;
    for (const auto& z : vc) vr.push_back(cplx ? z.re() + lambda * z.im() : z.re());
    RelationReport rep = find_relation(vr, bound, p);
    rep.labels = basis.labels;

    if (rep.status == RelationStatus::kFound) {
      const std::vector<long>& m = *rep.relation;
      // Confirm both parts at doubled precision.
      const Real r1 = residual_complex(vc, m).abs() / max_modulus(vc);
      const std::vector<Complex> v2 = basis.values(2 * p);
      const Real r2 = residual_complex(v2, m).abs() / max_modulus(v2);
      rep.confirmation_residual = r2;
      const Real floor_2p = ldexp(Real(1L, 2 * p), -static_cast<long>(2 * p) * 9 / 10);
      const bool confirmed = r2 <= max(ldexp(r1, -static_cast<long>(p) / 2).with_precision(2 * p), floor_2p);
      if (!confirmed) {
        rep.status = RelationStatus::kPrecisionExhausted;
        out.report = rep;
        out.note = "relation at " + std::to_string(p) + " bits did not survive doubled precision";
      } else if (m[0] == 0) {
        out.report = rep;
        out.note = "relation among the candidates alone; F does not appear";
        return out;
      } else {
        // prefactor * F = -(1/m0) * sum of the remaining basis elements.
        LogFormula formula{t, prefactor, std::nullopt, {}};
        std::size_t idx = 1;
        for (const auto& c : candidates) {
          std::vector<Rational> q;
          for (std::size_t k = 0; k < mults.size(); ++k) q.push_back(Rational(-m[idx++], m[0]));
          if (auto coeff = combination(q, mults)) formula.rhs.push_back({*coeff, c});
        }
        if (cplx) {
          std::vector<Rational> q;
          for (std::size_t k = 0; k < mults.size(); ++k) q.push_back(Rational(-m[idx++], m[0]));
          if (auto coeff = combination(q, mults)) formula.rhs.push_back({*coeff, TransTerm::pi_i()});
        } else if (m[idx] != 0) {
          formula.rhs.push_back({scaled(Rational(-m[idx], m[0]), AlgExpr::pi()), TransTerm::one()});
        }
        out.lhs = v2.front();
        out.rhs = eval_formula_rhs(formula, 2 * p);
        out.formula = std::move(formula);
        out.report = rep;
        return out;
      }
    } else {
      out.report = rep;
    }
    // An exhausted run is retried at doubled precision before moving on.
    if (out.report.status == RelationStatus::kPrecisionExhausted && retries < 2) {
      ++retries;
      boost *= 2;
      continue;
    }
    if (bound >= options.max_norm) break;
    bound = std::min(bound * 100, options.max_norm);
    retries = 0;
    boost = 1;
  }
  return out;
}

ConstantFit determine_constant(const Real& value, const Real& target, const Rational& lattice) {
  if (target.is_zero()) throw PreconditionError("target must be nonzero");
  if (lattice <= Rational(0)) throw PreconditionError("lattice step must be positive");
  const Precision p = std::max(value.precision(), target.precision());
  const Real ratio = value.with_precision(p) / target.with_precision(p);
  const Integer index = (ratio / Real(lattice, p)).round_to_integer();
  const Rational multiple = lattice * Rational(index);
  return {multiple, abs(ratio - Real(multiple, p))};
}

}  // namespace hyperlog
