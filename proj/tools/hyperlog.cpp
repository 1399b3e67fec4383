// hyperlog: check / eval / verify / discover / periods.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage or parse error,
// 3 precondition violation.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyperlog/algexpr.hpp"
#include "hyperlog/catalog.hpp"
#include "hyperlog/condition.hpp"
#include "hyperlog/errors.hpp"
#include "hyperlog/functions.hpp"
#include "hyperlog/hypergeometric.hpp"
#include "hyperlog/periods.hpp"
#include "hyperlog/pslq.hpp"
#include "json.hpp"

using namespace hyperlog;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kPrecondition = 3 };

struct RunConfig {
  long digits = 60;
  bool json = false;
  std::string catalog_path;
};

Precision work_bits(long digits) { return bits_for_digits(digits) + 16; }

void check_digits(long digits) {
  if (digits < 10) throw PreconditionError("--digits must be at least 10 (got " + std::to_string(digits) + ")");
}

// Splits on commas outside parentheses, so "root(3, 2), 2+sqrt(3)" is two items.
std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

// "log(...)", "atan(...)", "acos(...)" as written; a bare expression means its log.
TransTerm parse_candidate(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  const std::string body = first == std::string::npos ? text : text.substr(first);
  for (const char* fn : {"log(", "atan(", "acos("}) {
    if (body.rfind(fn, 0) == 0) return TransTerm::parse(body);
  }
  return TransTerm::log(AlgExpr::parse(text));
}

double log10_rel(const Real& diff, const Real& ref) {
  if (diff.is_zero()) return -1e9;
  const Real scale = max(Real(1L, ref.precision()), abs(ref));
  return (static_cast<double>(diff.exponent2()) - static_cast<double>(scale.exponent2())) * 0.3010299956639812;
}

std::string digits_str(double agreement, long cap) {
  return std::to_string(static_cast<long>(std::min(agreement, static_cast<double>(cap))));
}

std::vector<CatalogEntry> active_catalog(const RunConfig& cfg) {
  std::string path = cfg.catalog_path;
  if (path.empty()) {
    if (const char* env = std::getenv("HYPERLOG_CATALOG")) path = env;
  }
  if (path.empty()) return builtin_catalog();
  return load_catalog_file(path);
}

// check --------------------------------------------------------------------

int cmd_check(const RunConfig& cfg, const std::string& a, const std::string& b,
              const std::optional<std::string>& q, const std::optional<long>& max_den) {
  if (q.has_value() == max_den.has_value()) throw CLI::ValidationError("check", "give exactly one of --q and --max-den");
  const Rational ra = Rational::parse(a);
  const Rational rb = Rational::parse(b);
  if (max_den) {
    const auto qs = eligible_q_values(ra, rb, *max_den);
    if (cfg.json) {
      json j{{"a", ra.str()}, {"b", rb.str()}, {"max_den", *max_den}, {"q_values", json::array()}};
      for (const auto& v : qs) j["q_values"].push_back(v.str());
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "eligible q for a=" << ra.str() << ", b=" << rb.str() << ", denominator <= " << *max_den << ":";
      for (const auto& v : qs) std::cout << " " << v.str();
      std::cout << "\ncount: " << qs.size() << "\n";
    }
    return qs.empty() ? kFail : kPass;
  }
  const HGTriple t = HGTriple::make(ra, rb, Rational::parse(*q));
  const ConditionResult r = condition_holds(t);
  if (cfg.json) {
    json j{{"triple", {{"a", t.a().str()}, {"b", t.b().str()}, {"q", t.q().str()}}},
           {"holds", r.holds},
           {"witnesses", json::array()}};
    for (const auto& w : r.witnesses) j["witnesses"].push_back({{"s", w.s}, {"sum", w.sum.str()}});
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "holds: " << (r.holds ? "true" : "false") << "\n";
    for (const auto& w : r.witnesses) std::cout << "  s=" << w.s << "  sum=" << w.sum.str() << "\n";
  }
  return r.holds ? kPass : kFail;
}

// eval ---------------------------------------------------------------------

int cmd_eval(const RunConfig& cfg, const std::string& what, const std::string& a, const std::string& b,
             const std::string& q, const std::string& c, const std::string& z, const std::string& expr) {
  check_digits(cfg.digits);
  const Precision p = work_bits(cfg.digits);
  json j{{"digits", cfg.digits}};
  if (what == "3F2") {
    const HGTriple t = HGTriple::make(Rational::parse(a), Rational::parse(b), Rational::parse(q));
    const auto integral = euler_transform_3f2(t.a(), t.b(), t.q(), p);
    const HGSpec spec{{t.a(), t.b(), t.q()}, {t.a() + t.b(), t.q() + Rational(1)}, Real(1L, p)};
    const auto series = phg_series(spec, p);
    const double agree = -log10_rel(abs(integral.value - series.value), series.value);
    j["function"] = "3F2(" + t.a().str() + ", " + t.b().str() + ", " + t.q().str() + "; " +
                    (t.a() + t.b()).str() + ", " + (t.q() + Rational(1)).str() + "; 1)";
    j["value"] = integral.value.str(cfg.digits);
    j["euler_integral"] = integral.value.str(cfg.digits);
    j["levin_series"] = series.value.str(cfg.digits);
    j["series_terms"] = series.terms;
    j["agreement_digits"] = digits_str(agree, cfg.digits);
  } else if (what == "2F1") {
    const Real x = Real::parse(z, p);
    j["function"] = "2F1(" + a + ", " + b + "; " + c + "; " + z + ")";
    j["value"] = hyp2f1(Rational::parse(a), Rational::parse(b), Rational::parse(c), x).str(cfg.digits);
  } else if (what == "expr") {
    const AlgExpr e = AlgExpr::parse(expr);
    const Complex v = e.eval(p);
    j["expr"] = e.str();
    j["re"] = v.re().str(cfg.digits);
    j["im"] = v.im().str(cfg.digits);
  } else {
    throw CLI::ValidationError("eval", "unknown target '" + what + "' (expected 3F2, 2F1 or expr)");
  }
  if (cfg.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    for (auto it = j.begin(); it != j.end(); ++it) {
      std::cout << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
    }
  }
  return kPass;
}

// verify -------------------------------------------------------------------

int cmd_verify(const RunConfig& cfg, bool all, const std::vector<std::string>& ids, bool export_only) {
  const auto catalog = active_catalog(cfg);
  if (export_only) {
    std::cout << export_catalog(catalog).dump(2) << "\n";
    return kPass;
  }
  if (all == !ids.empty()) throw CLI::ValidationError("verify", "give --all or one or more --id");
  check_digits(cfg.digits);
  std::vector<CatalogEntry> chosen;
  if (all) {
    chosen = catalog;
  } else {
    for (const auto& id : ids) chosen.push_back(find_entry(catalog, id));
  }
  const auto reports = verify_all(chosen, cfg.digits);
  long passed = 0;
  for (const auto& r : reports) passed += r.pass ? 1 : 0;
  if (cfg.json) {
    json j = json::array();
    for (const auto& r : reports) j.push_back(to_json(r));
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << "  digits=" << r.digits_requested
                << "  achieved=" << static_cast<long>(r.achieved_digits) << "  delta=" << r.delta.str(6);
      if (!r.error.empty()) std::cout << "  (" << r.error << ")";
      std::cout << "\n";
    }
    std::cout << passed << "/" << reports.size() << " pass\n";
  }
  return passed == static_cast<long>(reports.size()) ? kPass : kFail;
}

// discover -----------------------------------------------------------------

int cmd_discover(const RunConfig& cfg, const std::string& a, const std::string& b, const std::string& q,
                 const std::string& candidates, const std::string& prefactor,
                 const std::string& multipliers, long max_norm) {
  check_digits(cfg.digits);
  const HGTriple t = HGTriple::make(Rational::parse(a), Rational::parse(b), Rational::parse(q));
  std::vector<TransTerm> cands;
  for (const auto& s : split_top_level(candidates)) cands.push_back(parse_candidate(s));
  DiscoveryOptions opts;
  opts.max_norm = max_norm;
  if (!prefactor.empty()) opts.prefactor = AlgExpr::parse(prefactor);
  for (const auto& s : split_top_level(multipliers)) opts.multipliers.push_back(AlgExpr::parse(s));
  const Discovery d = discover_formula(t, cands, work_bits(cfg.digits), opts);

  const std::string lhs_text = (opts.prefactor ? opts.prefactor->str() : std::string("pi")) + " * 3F2(" +
                               t.a().str() + ", " + t.b().str() + ", " + t.q().str() + "; " +
                               (t.a() + t.b()).str() + ", " + (t.q() + Rational(1)).str() + "; 1)";
  std::string rhs_text;
  json rhs = json::array();
  if (d.formula) {
    for (const auto& term : d.formula->rhs) {
      if (!rhs_text.empty()) rhs_text += " + ";
      rhs_text += "(" + term.coeff.str() + ")*" + term.term.str();
      rhs.push_back({{"coeff", term.coeff.str()},
                     {"kind", to_string(term.term.kind)},
                     {"arg", term.term.argument ? json(term.term.argument->str()) : json(nullptr)}});
    }
  }
  if (cfg.json) {
    json j{{"status", to_string(d.report.status)},
           {"found", d.formula.has_value()},
           {"complex_mode", d.complex_mode},
           {"labels", d.report.labels},
           {"norm_bound", d.report.norm_bound.str(6)},
           {"precision_bits", d.report.precision}};
    if (d.report.relation) j["relation"] = *d.report.relation;
    if (d.formula) {
      j["lhs"] = lhs_text;
      j["rhs"] = rhs;
      j["lhs_value"] = {{"re", d.lhs->re().str(cfg.digits)}, {"im", d.lhs->im().str(cfg.digits)}};
      j["rhs_value"] = {{"re", d.rhs->re().str(cfg.digits)}, {"im", d.rhs->im().str(cfg.digits)}};
    }
    if (!d.note.empty()) j["note"] = d.note;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "status: " << to_string(d.report.status) << "\n";
    if (d.report.relation) {
      std::cout << "relation:";
      for (std::size_t k = 0; k < d.report.relation->size(); ++k) {
        const long m = (*d.report.relation)[k];
        if (m != 0) std::cout << "  " << m << " * [" << d.report.labels[k] << "]";
      }
      std::cout << "\n";
    }
    if (d.formula) {
      std::cout << lhs_text << "\n  = " << rhs_text << "\n";
      std::cout << "value: " << d.lhs->re().str(cfg.digits);
      if (d.complex_mode) std::cout << " + " << d.lhs->im().str(cfg.digits) << " i";
      std::cout << "\n";
    } else {
      std::cout << "no formula; norm bound " << d.report.norm_bound.str(6) << "\n";
    }
    if (!d.note.empty()) std::cout << "note: " << d.note << "\n";
  }
  return d.formula ? kPass : kFail;
}

// periods ------------------------------------------------------------------

int cmd_periods(const RunConfig& cfg, const std::string& t_text, const std::string& cycle_text) {
  check_digits(cfg.digits);
  const Precision p = work_bits(cfg.digits);
  const Real t = Real::parse(t_text, p);
  const Cycle cycle = parse_cycle(cycle_text);
  const PeriodSpec spec{t, cycle};
  const Real agm_value = real_period(spec, p);
  const Real quad_value = real_period_by_quadrature(spec, p);
  // Closed form: (2 pi / sqrt3) 2F1(1/6, 5/6; 1; 1 - t^2) for v1, t^2 for v0.
  const Real arg = cycle == Cycle::kVanishingAtOne ? (1 - t) * (1 + t) : t * t;
  const Real closed = 2 * pi(p) / sqrt(Real(3L, p)) * hyp2f1(Rational(1, 6), Rational(5, 6), Rational(1), arg);
  const double agree = -log10_rel(abs(agm_value - closed), closed);
  const double agree_quad = -log10_rel(abs(agm_value - quad_value), closed);
  const bool match = agree >= static_cast<double>(cfg.digits);
  const std::string closed_label = std::string("(2*pi/sqrt(3))*2F1(1/6, 5/6; 1; ") +
                                   (cycle == Cycle::kVanishingAtOne ? "1 - t^2)" : "t^2)");
  if (cfg.json) {
    json j{{"t", t_text},
           {"cycle", to_string(cycle)},
           {"period", agm_value.str(cfg.digits)},
           {"period_quadrature", quad_value.str(cfg.digits)},
           {"closed_form", closed_label},
           {"closed_form_value", closed.str(cfg.digits)},
           {"agreement_digits", digits_str(agree, cfg.digits)},
           {"quadrature_agreement_digits", digits_str(agree_quad, cfg.digits)},
           {"match", match}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "cycle: " << to_string(cycle) << ", t = " << t_text << "\n"
              << "period (AGM):        " << agm_value.str(cfg.digits) << "\n"
              << "period (quadrature): " << quad_value.str(cfg.digits) << "\n"
              << closed_label << " = " << closed.str(cfg.digits) << "\n"
              << "agreement: " << digits_str(agree, cfg.digits) << " digits -> " << (match ? "match" : "MISMATCH")
              << "\n";
  }
  return match ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Log formulas for 3F2(a, b, q; a+b, q+1; 1): check, evaluate, verify, discover."};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--digits", cfg.digits, "decimal digits (default 60, at least 10)");
  app.add_flag("--json", cfg.json, "JSON output");
  app.add_option("--catalog", cfg.catalog_path, "catalog JSON file (else $HYPERLOG_CATALOG, else built-in)");
  app.fallthrough();

  std::string a = "1/6", b = "5/6", q, c, z, expr, what;
  std::optional<std::string> q_opt;
  std::optional<long> max_den;

  auto* check = app.add_subcommand("check", "interlacing condition for (a, b, q), or eligible q up to a denominator");
  check->add_option("--a", a, "a")->required();
  check->add_option("--b", b, "b")->required();
  check->add_option("--q", q_opt, "q");
  check->add_option("--max-den", max_den, "scan q = k/l with l <= N");

  auto* eval = app.add_subcommand("eval", "evaluate 3F2 (both methods), 2F1 or an expression");
  eval->add_option("what", what, "3F2 | 2F1 | expr")->required();
  eval->add_option("--a", a, "a");
  eval->add_option("--b", b, "b");
  eval->add_option("--q", q, "q (3F2)");
  eval->add_option("--c", c, "c (2F1)");
  eval->add_option("--z", z, "argument (2F1)");
  eval->add_option("--expr", expr, "expression (expr)");

  bool all = false;
  bool export_only = false;
  std::vector<std::string> ids;
  auto* verify = app.add_subcommand("verify", "verify catalog identities");
  verify->add_flag("--all", all, "every entry");
  verify->add_option("--id", ids, "entry id (repeatable)");
  verify->add_flag("--export", export_only, "print the catalog as JSON and exit");

  std::string candidates, prefactor, multipliers;
  long max_norm = 1000000;
  auto* discover = app.add_subcommand("discover", "search a log formula for 3F2 among candidate terms");
  discover->add_option("--a", a, "a");
  discover->add_option("--b", b, "b");
  discover->add_option("--q", q, "q")->required();
  discover->add_option("--candidates", candidates, "comma-separated; bare expressions mean log(.)")->required();
  discover->add_option("--prefactor", prefactor, "multiplies F (default pi)");
  discover->add_option("--multipliers", multipliers, "comma-separated (default 1,sqrt(2),sqrt(3),sqrt(5),sqrt(6))");
  discover->add_option("--max-norm", max_norm, "largest relation entry searched");

  std::string t_text, cycle_text = "v1";
  auto* periods = app.add_subcommand("periods", "real period of y^2 = 2x^3 - 3x^2 + t^2 against its 2F1 form");
  periods->add_option("--t", t_text, "t in (0, 1)")->required();
  periods->add_option("--cycle", cycle_text, "v1 (vanishing at 1) or v0 (vanishing at 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*check) return cmd_check(cfg, a, b, q_opt, max_den);
    if (*eval) return cmd_eval(cfg, what, a, b, q, c, z, expr);
    if (*verify) return cmd_verify(cfg, all, ids, export_only);
    if (*discover) return cmd_discover(cfg, a, b, q, candidates, prefactor, multipliers, max_norm);
    if (*periods) return cmd_periods(cfg, t_text, cycle_text);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
