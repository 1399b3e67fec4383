// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hyperlog/catalog.hpp"
#include "hyperlog/condition.hpp"
#include "hyperlog/errors.hpp"
#include "hyperlog/functions.hpp"
#include "hyperlog/hypergeometric.hpp"
#include "hyperlog/periods.hpp"
#include "hyperlog/pslq.hpp"
#include "test_support.hpp"

using namespace hyperlog;
using hyperlog::testing::agreement_digits;
using hyperlog::testing::close;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double time_limit_s;  // 0: none
  std::function<Outcome()> run;
};

const Rational kA(1, 6);
const Rational kB(5, 6);

// agreement_digits reports exact equality as a huge sentinel.
std::string digits(double d) { return d >= 1e8 ? "all" : std::to_string(static_cast<long>(d)); }

std::string fmt(double v, int decimals = 1) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(decimals);
  os << v;
  return os.str();
}

Real f3_series(const Rational& q, Precision p) {
  const HGSpec spec{{kA, kB, q}, {kA + kB, q + Rational(1)}, Real(1L, p)};
  return phg_series(spec, p).value;
}

Outcome eligibility() {
  const auto qs = eligible_q_values(kA, kB, 60);
  std::string got;
  for (const auto& q : qs) got += (got.empty() ? "" : ",") + q.str();
  return {got == "1/2,1/3,2/3,1/4,3/4,1/5,2/5,3/5,4/5", "q = {" + got + "} for denominators <= 60"};
}

Outcome gauss_summation() {
  const Precision p = bits_for_digits(45);
  const Real closed = 3 * sqrt(Real(3L, p)) / 4;
  const double d0 = agreement_digits(gauss_sum(kA, kB, Rational(3, 2), p), closed);
  const double d1 = agreement_digits(phg_series(HGSpec{{kA, kB}, {Rational(3, 2)}, Real(1L, p)}, p).value, closed);
  std::mt19937 rng(21);
  std::uniform_int_distribution<long> num(1, 40);
  const Precision q = bits_for_digits(35);
  double worst = 1e9;
  for (int k = 0; k < 20; ++k) {
    const Rational a(num(rng), 12), b(num(rng), 10);
    const Rational c = a + b + Rational(num(rng) + 10, 40);
    const Real series = phg_series(HGSpec{{a, b}, {c}, Real(1L, q)}, q).value;
    worst = std::min(worst, agreement_digits(series, gauss_sum(a, b, c, q)));
  }
  return {d0 >= 40 && d1 >= 40 && worst >= 30,
          "2F1(1/6,5/6;3/2;1) vs 3*sqrt(3)/4: " + digits(d0) + " digits (Gamma), " + digits(d1) +
              " (series); 20 random draws: worst " + digits(worst) + " digits"};
}

Outcome main_formula() {
  // prec + guard_bits(prec) = 395 <= 400 working bits.
  const Precision p = 330;
  const Real f = euler_transform_3f2(kA, kB, Rational(1, 2), p).value;
  const Real s3 = sqrt(Real(3L, p));
  const Real rhs = 3 * s3 / (2 * pi(p)) * log(2 + s3);
  const Real diff = abs(f - rhs);
  const bool ok = diff < Real::parse("1e-50", p);
  return {ok, "|3F2 - (3 sqrt3 / 2 pi) log(2+sqrt3)| = " + diff.str(3) + " at " +
                  std::to_string(p + guard_bits(p)) + " working bits"};
}

std::vector<VerifyReport> reports50;

Outcome catalog() {
  reports50 = verify_all(builtin_catalog(), 50);
  const auto reports100 = verify_all(builtin_catalog(), 100);
  int pass50 = 0, pass100 = 0, complex_checked = 0;
  std::string failed;
  for (const auto& r : reports50) {
    pass50 += r.pass;
    if (!r.pass) failed += " " + r.id + "@50";
  }
  for (const auto& r : reports100) {
    pass100 += r.pass;
    if (!r.pass) failed += " " + r.id + "@100";
    // l5 values are genuinely complex; both parts take part in delta.
    if (r.id.rfind("l5", 0) == 0 && !r.lhs.im().is_zero() && !r.branch_sensitive) ++complex_checked;
  }
  return {pass50 == 9 && pass100 == 9 && complex_checked == 4,
          std::to_string(pass50) + "/9 at 50 digits, " + std::to_string(pass100) + "/9 at 100 digits, " +
              std::to_string(complex_checked) + "/4 l5 entries compared as complex numbers" + failed};
}

Outcome cross_method() {
  const Precision p = bits_for_digits(40);
  double worst = 1e9;
  for (const auto& e : builtin_catalog()) {
    const HGTriple& t = e.formula.triple;
    const Real a = euler_transform_3f2(t.a(), t.b(), t.q(), p).value;
    worst = std::min(worst, agreement_digits(f3_series(t.q(), p), a));
  }
  return {worst >= 25, "series (Levin) vs Euler integral on 9 triples: worst " + digits(worst) + " digits"};
}

Outcome picard_fuchs() {
  const PicardFuchs op = derive_picard_fuchs(ConnectionMatrix::elliptic_family());
  const RationalFunction t(Polynomial::x());
  const bool exact = op.p2 == t - t * t &&
                     op.p1 == RationalFunction(Rational(1)) - RationalFunction(Rational(2)) * t &&
                     op.p0 == RationalFunction(Rational(-5, 36));
  const Precision p = 200;
  Real worst(0L, p);
  for (const char* s : {"1/4", "1/2", "9/10"}) {
    worst = max(worst, abs(hg2f1_ode_residual(kA, kB, Rational(1), Real::parse(s, p), p)));
  }
  return {exact && worst < Real::parse("1e-40", p),
          "(" + op.p2.str() + ", " + op.p1.str() + ", " + op.p0.str() + "); max ODE residual " + worst.str(3)};
}

Outcome periods() {
  const Precision p = bits_for_digits(40);
  const Real scale = 2 * pi(p) / sqrt(Real(3L, p));
  const Real t = Real(Rational(1, 2), p);
  const double v1 = agreement_digits(real_period({t, Cycle::kVanishingAtOne}, p),
                                     scale * hyp2f1(kA, kB, Rational(1), Real(Rational(3, 4), p)));
  const double v0 = agreement_digits(real_period({t, Cycle::kVanishingAtZero}, p),
                                     scale * hyp2f1(kA, kB, Rational(1), Real(Rational(1, 4), p)));
  const std::vector<Real> ts{Real::parse("0.9", p), Real::parse("0.99", p), Real::parse("0.999", p)};
  const LimitEstimate lim = vanishing_period_limit(ts, p);
  const double dl = agreement_digits(lim.value, scale);
  return {v1 >= 30 && v0 >= 30 && dl >= 20,
          "t=1/2: v1 " + digits(v1) + " digits, v0 " + digits(v0) + " digits; limit t->1 " + digits(dl) +
              " digits (sample spread " + lim.spread.str(2) + ")"};
}

Outcome discovery() {
  const Precision p = pslq_required_bits(2, 10000);
  const ValueProducer pair = [](Precision q) {
    const Real s3 = sqrt(Real(3L, q));
    return std::vector<Real>{pi(q) * f3_series(Rational(1, 2), q), s3 * log(2 + s3)};
  };
  const RelationReport r = find_relation(pair, 10000, p);
  const bool found = r.status == RelationStatus::kFound && r.relation == std::vector<long>{2, -3} &&
                     r.confirmation_residual && *r.confirmation_residual < r.residual.with_precision(2 * p) + ldexp(Real(1L, 2 * p), -static_cast<long>(p)) &&
                     *r.confirmation_residual < ldexp(Real(1L, 2 * p), -static_cast<long>(p) - static_cast<long>(p) / 2);
  DiscoveryOptions opts;
  opts.max_norm = 10000;
  const auto wrong = discover_formula(HGTriple::make(kA, kB, Rational(1, 2)), {TransTerm::log(AlgExpr(2))}, 128, opts);
  const bool none = !wrong.formula && wrong.report.status == RelationStatus::kNoneBelowBound;
  std::string rel = "-";
  if (r.relation) rel = "(" + std::to_string((*r.relation)[0]) + ", " + std::to_string((*r.relation)[1]) + ")";
  return {found && none, "relation " + rel + ", residual " + r.residual.str(2) + " -> " +
                             (r.confirmation_residual ? r.confirmation_residual->str(2) : "none") +
                             " at doubled precision; log 2 candidate: " + to_string(wrong.report.status) +
                             " (bound " + wrong.report.norm_bound.str(3) + ")"};
}

Outcome constant() {
  const Precision p = 200;
  const Real s3 = sqrt(Real(3L, p));
  const ConstantFit fit = determine_constant(3 * s3 / pi(p) * log(2 + s3), f3_series(Rational(1, 2), p), Rational(2, 3));
  const bool on_lattice = (fit.multiple / Rational(2, 3)).denominator() == 1;
  return {fit.multiple == Rational(2) && fit.residual < Real::parse("1e-30", p) && on_lattice,
          "|alpha| = " + fit.multiple.str() + " = 3 * (2/3), residual " + fit.residual.str(2)};
}

Outcome kernel() {
  const Precision p = 256;
  int bad = 0;
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const Real x = hyperlog::testing::uniform(rng, 0.0, 10.0, p);
    bad += !close(gamma(x + 1), x * gamma(x), p - 8);
  }
  std::mt19937_64 rng2(2);
  for (int i = 0; i < 50;) {
    const Real x = hyperlog::testing::uniform(rng2, -4.9, 4.9, p);
    if (abs(x - Real(x.round_to_integer(), p)) < Real::from_double(1e-6, 64)) continue;
    bad += !close(gamma(x) * gamma(1 - x) * sin(pi(p) * x), pi(p), p - 12);
    ++i;
  }
  std::mt19937_64 rng3(6);
  std::uniform_real_distribution<double> d(-20, 20);
  for (int i = 0; i < 50; ++i) {
    const Complex z(Real::from_double(d(rng3), p), Real::from_double(d(rng3), p));
    bad += !close(exp(log_principal(z)), z, p - 10);
  }
  // Precision doubling: every kernel and the main 3F2 move only within their error contracts.
  const Precision q = 2 * p;
  int unstable = 0;
  std::mt19937_64 rng4(10);
  for (int i = 0; i < 10; ++i) {
    const double xd = std::uniform_real_distribution<double>(-5.5, 12)(rng4);
    const Real x1 = Real::from_double(xd, p), x2 = Real::from_double(xd, q);
    unstable += !close(gamma(x1), gamma(x2), p - 8);
    unstable += !close(digamma(x1), digamma(x2), p - 8);
    unstable += !close(atan(x1), atan(x2), p - 8);
  }
  unstable += !close(f3_series(Rational(1, 2), p), f3_series(Rational(1, 2), q), p - 16);
  unstable += !close(real_period({Real(Rational(1, 3), p), Cycle::kVanishingAtOne}, p),
                     real_period({Real(Rational(1, 3), q), Cycle::kVanishingAtOne}, q), p - 8);
  unstable += !close(l5_e(2).eval(p), l5_e(2).eval(q), p - 8);
  return {bad == 0 && unstable == 0,
          "150 identity checks, " + std::to_string(bad) + " failures; precision doubling: " +
              std::to_string(unstable) + " unstable of 34"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "eligibility scan", 5, eligibility},
      {2, "Gauss summation", 0, gauss_summation},
      {3, "main formula", 30, main_formula},
      {4, "catalog at 50 and 100 digits", 300, catalog},
      {5, "cross-method 3F2", 0, cross_method},
      {6, "Picard-Fuchs", 0, picard_fuchs},
      {7, "periods", 0, periods},
      {8, "discovery", 0, discovery},
      {9, "constant determination", 0, constant},
      {10, "kernel properties", 0, kernel},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
      o.pass = false;
      o.detail += "; over the " + fmt(c.time_limit_s, 0) + " s limit";
    }
    failures += !o.pass;
    std::printf("criterion %2d %-30s %s  %s  [%ss]\n", c.id, c.name, o.pass ? "PASS" : "FAIL", o.detail.c_str(),
                fmt(secs, 2).c_str());
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
