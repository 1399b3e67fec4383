#include "hyperlog/catalog.hpp"

#include <cmath>
#include <fstream>
#include <future>
#include <set>
#include <sstream>

#include "hyperlog/errors.hpp"
#include "hyperlog/functions.hpp"
#include "hyperlog/hypergeometric.hpp"

namespace hyperlog {

namespace {

using json = nlohmann::ordered_json;

const Rational kA(1, 6);
const Rational kB(5, 6);

AlgExpr E(const char* text) { return AlgExpr::parse(text); }

// zeta(n)^e, or nothing for e = 0.
std::optional<AlgExpr> zeta_pow(long n, long e) {
  if (e == 0) return std::nullopt;
  return pow(AlgExpr::zeta(n), e);
}

AlgExpr times(AlgExpr x, const std::optional<AlgExpr>& y) { return y ? x * *y : x; }

AlgExpr alpha() { return AlgExpr::root(10, AlgExpr(Rational(1, 24))); }

AlgExpr e_from_parts(const AlgExpr& p, const AlgExpr& q) { return (p - q) / (p + q); }

CatalogEntry real_entry(std::string id, const Rational& q, AlgExpr prefactor,
                        std::optional<AlgExpr> scale, std::vector<FormulaTerm> rhs,
                        std::string source) {
  return {std::move(id),
          LogFormula{HGTriple::make(kA, kB, q), std::move(prefactor), std::move(scale), std::move(rhs)},
          LhsKind::kReal, std::move(source)};
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  out.push_back(real_entry("l2-q12", Rational(1, 2), AlgExpr(1), std::nullopt,
                           {{E("3*sqrt(3)/(2*pi)"), TransTerm::log(E("2 + sqrt(3)"))}},
                           "fibration y^2 = 2x^3 - 3x^2 + t^2, q = 1/2"));

  const TransTerm a_plus = TransTerm::log(E("(1 - 1/root(3, 4))^2 + (1 + sqrt(3)/root(3, 4))^2"));
  const TransTerm a_minus = TransTerm::log(E("(1 - 1/root(3, 4))^2 + (1 - sqrt(3)/root(3, 4))^2"));
  const TransTerm b = TransTerm::atan(E("3/(3 + root(3, 2) + 3*root(3, 4))"));
  {
    const AlgExpr ca = E("sqrt(3)*root(3, 2)/(2*pi)");
    out.push_back(real_entry("l3-q13", Rational(1, 3), AlgExpr(1), std::nullopt,
                             {{ca, a_plus}, {-ca, a_minus}, {E("-root(3, 2)/pi"), b}},
                             "fibration y^2 = 2x^3 - 3x^2 + t^3, q = 1/3"));
  }
  {
    const AlgExpr ca = E("sqrt(3)*root(3, 4)/(3*pi)");
    out.push_back(real_entry("l3-q23", Rational(2, 3), AlgExpr(1), std::nullopt,
                             {{ca, a_plus}, {-ca, a_minus}, {E("2*root(3, 4)/(3*pi)"), b}},
                             "fibration y^2 = 2x^3 - 3x^2 + t^3, q = 2/3"));
  }

  const AlgExpr pre4 = E("2*pi/root(4, 1728)");
  const TransTerm log4 = TransTerm::log(
      E("(root(4, 243) - root(4, 27) + sqrt(2))/(root(4, 243) - root(4, 27) - sqrt(2))"));
  const TransTerm acos4 = TransTerm::acos(E("(root(4, 243) + root(4, 27))/(2*sqrt(5 + 3*sqrt(3)))"));
  out.push_back(real_entry("l4-q14", Rational(1, 4), pre4, std::nullopt,
                           {{E("1/2"), log4}, {E("-1"), acos4}},
                           "fibration y^2 = 2x^3 - 3x^2 + t^4, q = 1/4"));
  out.push_back(real_entry("l4-q34", Rational(3, 4), pre4, E("7*sqrt(3)/9"),
                           {{E("1/2"), log4}, {E("1"), acos4}},
                           "fibration y^2 = 2x^3 - 3x^2 + t^4, q = 3/4"));

  for (long k = 1; k <= 4; ++k) {
    const Rational q(k, 5);
    const AlgExpr a_k = AlgExpr::gamma(q + kA) * AlgExpr::gamma(q + kB) / pow(AlgExpr::gamma(q), 2);
    const AlgExpr prefactor = AlgExpr(2) * AlgExpr::pi() * a_k / AlgExpr(k);
    auto z = [](long e) { return pow(AlgExpr::zeta(5), ((e % 5) + 5) % 5); };
    const AlgExpr z2k = z(2 * k);
    const AlgExpr scale = AlgExpr(5) / (z2k - AlgExpr(1));
    std::vector<FormulaTerm> rhs{
        {z2k - AlgExpr(1), TransTerm::log(l5_e(0))},
        {z2k - z(3 * k), TransTerm::log(l5_e(1))},
        {z2k - z(k), TransTerm::log(l5_e(2))},
        {z2k - z(4 * k), TransTerm::log(l5_e(3))},
        {AlgExpr(4) * z2k, TransTerm::pi_i()},
    };
    out.push_back({"l5-k" + std::to_string(k),
                   LogFormula{HGTriple::make(kA, kB, q), prefactor, scale, std::move(rhs)},
                   LhsKind::kComplex,
                   "fibration y^2 = 2x^3 - 3x^2 + t^5, q = " + q.str() + ", principal log"});
  }
  return out;
}

std::string decimal(const Real& x, long digits) { return x.str(std::max(digits, 5L)); }

double log10_abs(const Real& x) {
  if (x.is_zero()) return -1e9;
  long e = 0;
  const double m = mpfr_get_d_2exp(&e, x.get(), MPFR_RNDN);
  return std::log10(std::fabs(m)) + static_cast<double>(e) * std::log10(2.0);
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw PreconditionError(std::string("catalog entry is missing field '") + name + "'");
  }
  return j.at(name);
}

std::string string_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_string()) throw PreconditionError(std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

AlgExpr l5_e(long j) {
  // w = alpha zeta20 zeta^(2j) has w^10 = -1/24, and (x, y) = (w^2, sqrt2 w^3 + (sqrt2/4) w^-3)
  // lies on y^2 = 2x^3 - 3x^2 + 1. Then e_j = (y - sqrt3 (x - 1)) / (y + sqrt3 (x - 1)).
  const AlgExpr a = alpha();
  const AlgExpr z20 = AlgExpr::zeta(20);
  const AlgExpr p = times(AlgExpr::sqrt(AlgExpr(2)) * pow(a, 3) * pow(z20, 3), zeta_pow(5, j)) +
                    times(AlgExpr::sqrt(AlgExpr(2)) / AlgExpr(4) * pow(a, -3) * pow(z20, -3), zeta_pow(5, -j));
  const AlgExpr q = AlgExpr::sqrt(AlgExpr(3)) * (times(pow(a, 2) * pow(z20, 2), zeta_pow(5, -j)) - AlgExpr(1));
  return e_from_parts(p, q);
}

AlgExpr l5_e_all_zeta_j(long j) {
  const AlgExpr a = alpha();
  const AlgExpr z20 = AlgExpr::zeta(20);
  const AlgExpr p = times(AlgExpr::sqrt(AlgExpr(2)) * pow(a, 3) * pow(z20, 3), zeta_pow(5, j)) +
                    times(AlgExpr::sqrt(AlgExpr(2)) / AlgExpr(4) * pow(a, -3) * pow(z20, -3), zeta_pow(5, j));
  const AlgExpr q = AlgExpr::sqrt(AlgExpr(3)) * (times(pow(a, 2) * pow(z20, 2), zeta_pow(5, j)) - AlgExpr(1));
  return e_from_parts(p, q);
}

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& entries, std::string_view id) {
  for (const auto& e : entries)
    if (e.id == id) return e;
  throw PreconditionError("no catalog entry '" + std::string(id) + "'");
}

json to_json(const CatalogEntry& e) {
  json rhs = json::array();
  for (const auto& t : e.formula.rhs) {
    rhs.push_back({{"coeff", t.coeff.str()},
                   {"kind", to_string(t.term.kind)},
                   {"arg", t.term.argument ? json(t.term.argument->str()) : json(nullptr)}});
  }
  const HGTriple& tr = e.formula.triple;
  return {{"id", e.id},
          {"triple", {{"a", tr.a().str()}, {"b", tr.b().str()}, {"q", tr.q().str()}}},
          {"prefactor", e.formula.prefactor.str()},
          {"lhs_scale", e.formula.lhs_scale ? json(e.formula.lhs_scale->str()) : json(nullptr)},
          {"rhs", rhs},
          {"lhs_kind", e.lhs_kind == LhsKind::kReal ? "real" : "complex"},
          {"source", e.source}};
}

CatalogEntry entry_from_json(const json& j) {
  const json& tr = field(j, "triple");
  const HGTriple triple = HGTriple::make(Rational::parse(string_field(tr, "a")),
                                         Rational::parse(string_field(tr, "b")),
                                         Rational::parse(string_field(tr, "q")));
  std::optional<AlgExpr> scale;
  if (j.contains("lhs_scale") && !j.at("lhs_scale").is_null()) {
    scale = AlgExpr::parse(string_field(j, "lhs_scale"));
  }
  std::vector<FormulaTerm> rhs;
  const json& terms = field(j, "rhs");
  if (!terms.is_array() || terms.empty()) throw PreconditionError("'rhs' must be a non-empty array");
  for (const json& t : terms) {
    const TransTerm::Kind kind = parse_term_kind(string_field(t, "kind"));
    const bool needs_arg = kind != TransTerm::Kind::kPiI && kind != TransTerm::Kind::kOne;
    const bool has_arg = t.contains("arg") && !t.at("arg").is_null();
    if (needs_arg != has_arg) {
      throw PreconditionError(std::string("term kind '") + to_string(kind) +
                              (needs_arg ? "' needs an arg" : "' takes no arg"));
    }
    TransTerm term{kind, std::nullopt};
    if (has_arg) term.argument = AlgExpr::parse(string_field(t, "arg"));
    rhs.push_back({AlgExpr::parse(string_field(t, "coeff")), term});
  }
  const std::string kind = string_field(j, "lhs_kind");
  if (kind != "real" && kind != "complex") throw PreconditionError("lhs_kind must be real or complex");
  return {string_field(j, "id"),
          LogFormula{triple, AlgExpr::parse(string_field(j, "prefactor")), scale, std::move(rhs)},
          kind == "real" ? LhsKind::kReal : LhsKind::kComplex,
          j.contains("source") && j.at("source").is_string() ? j.at("source").get<std::string>() : ""};
}

json export_catalog(const std::vector<CatalogEntry>& entries) {
  json out = json::array();
  for (const auto& e : entries) out.push_back(to_json(e));
  return out;
}

std::vector<CatalogEntry> load_catalog(const json& j) {
  if (!j.is_array()) throw PreconditionError("catalog must be a JSON array of entries");
  std::vector<CatalogEntry> out;
  std::set<std::string> ids;
  for (const json& e : j) {
    out.push_back(entry_from_json(e));
    if (!ids.insert(out.back().id).second) throw PreconditionError("duplicate catalog id '" + out.back().id + "'");
  }
  return out;
}

std::vector<CatalogEntry> load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read catalog file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("catalog JSON: ") + e.what(), e.byte);
  }
  return load_catalog(j);
}

VerifyReport verify_entry(const CatalogEntry& e, long digits) {
  if (digits < 10) throw PreconditionError("digits must be at least 10 (got " + std::to_string(digits) + ")");
  const Precision base = 4 * digits;
  const Precision wp = base + guard_bits(base);
  VerifyReport r;
  r.id = e.id;
  r.digits_requested = digits;
  r.delta = Real(wp);
  r.lhs = Complex(wp);
  r.rhs = Complex(wp);
  const LogFormula& f = e.formula;
  const HGTriple& t = f.triple;

  try {
    r.f_integral = euler_transform_3f2(t.a(), t.b(), t.q(), wp).value;
    const HGSpec spec{{t.a(), t.b(), t.q()}, {t.a() + t.b(), t.q() + Rational(1)}, Real(1L, wp)};
    r.f_series = phg_series(spec, wp).value;
    Complex factor = f.prefactor.eval(wp);
    if (f.lhs_scale) factor = factor * f.lhs_scale->eval(wp);
    r.lhs = factor * r.f_integral;
  } catch (const Error& ex) {
    r.error = std::string("lhs: ") + ex.what();
    return r;
  }
  const double agree = log10_abs(abs(r.f_integral - r.f_series)) - log10_abs(r.f_integral);
  r.method_agreement_digits = std::min(-agree, static_cast<double>(digits_for_bits(wp)));

  try {
    for (const auto& term : f.rhs) r.branch_sensitive = r.branch_sensitive || term.term.branch_sensitive(wp);
    r.rhs = eval_formula_rhs(f, wp);
  } catch (const Error& ex) {
    r.error = std::string("rhs: ") + ex.what();
    return r;
  }

  r.delta = (r.lhs - r.rhs).abs();
  const Real scale = max(Real(1L, wp), r.lhs.abs());
  const double rel = log10_abs(r.delta) - log10_abs(scale);
  r.achieved_digits = std::min(-rel, static_cast<double>(digits_for_bits(wp)));
  const Real tol = scale * pow(Real(10L, wp), -digits);
  r.pass = r.delta < tol;
  if (e.lhs_kind == LhsKind::kReal && r.pass) {
    // A real entry must not pick up an imaginary part anywhere.
    r.pass = abs(r.lhs.im()) < tol && abs(r.rhs.im()) < tol;
  }
  if (r.branch_sensitive) {
    r.pass = false;
    r.error = "branch-sensitive: a log argument lies within 2^-(prec/2) of the negative axis";
  }
  return r;
}

std::vector<VerifyReport> verify_all(const std::vector<CatalogEntry>& entries, long digits) {
  if (digits < 10) throw PreconditionError("digits must be at least 10 (got " + std::to_string(digits) + ")");
  std::vector<std::future<VerifyReport>> jobs;
  jobs.reserve(entries.size());
  for (const auto& e : entries) {
    jobs.push_back(std::async(std::launch::async, [&e, digits] { return verify_entry(e, digits); }));
  }
  std::vector<VerifyReport> out;
  out.reserve(jobs.size());
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

json to_json(const VerifyReport& r) {
  json j{{"id", r.id},
         {"pass", r.pass},
         {"digits_requested", r.digits_requested},
         {"achieved", std::to_string(static_cast<long>(std::floor(r.achieved_digits)))},
         {"delta_decimal_string", decimal(r.delta, 6)},
         {"branch_sensitive", r.branch_sensitive}};
  if (!r.error.empty()) {
    j["error"] = r.error;
    return j;
  }
  const long shown = r.digits_requested + 5;
  j["lhs"] = {{"re", decimal(r.lhs.re(), shown)}, {"im", decimal(r.lhs.im(), shown)}};
  j["rhs"] = {{"re", decimal(r.rhs.re(), shown)}, {"im", decimal(r.rhs.im(), shown)}};
  j["f_euler_integral"] = decimal(r.f_integral, shown);
  j["f_levin_series"] = decimal(r.f_series, shown);
  j["method_agreement_digits"] = std::to_string(static_cast<long>(std::floor(r.method_agreement_digits)));
  return j;
}

}  // namespace hyperlog
