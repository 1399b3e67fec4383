// Python bindings. Numbers cross the boundary as decimal strings, never as
// binary floats, so callers keep every digit they asked for.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperlog/algexpr.hpp"
#include "hyperlog/catalog.hpp"
#include "hyperlog/condition.hpp"
#include "hyperlog/errors.hpp"
#include "hyperlog/hypergeometric.hpp"
#include "hyperlog/periods.hpp"
#include "hyperlog/pslq.hpp"

namespace py = pybind11;
using namespace hyperlog;

namespace {

Precision work_bits(long digits) {
  if (digits < 10) throw PreconditionError("digits must be at least 10");
  return bits_for_digits(digits) + 16;
}

std::vector<CatalogEntry> catalog_for(const std::string& path) {
  return path.empty() ? builtin_catalog() : load_catalog_file(path);
}

py::dict complex_dict(const Complex& z, long digits) {
  py::dict d;
  d["re"] = z.re().str(digits);
  d["im"] = z.im().str(digits);
  return d;
}

}  // namespace

PYBIND11_MODULE(_hyperlog, m) {
  m.doc() = "Log formulas for 3F2(a, b, q; a+b, q+1; 1)";

  auto error = py::register_exception<Error>(m, "HyperlogError");
  py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());
  py::register_exception<DomainError>(m, "DomainError", error.ptr());
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", error.ptr());

  m.def(
      "condition_holds",
      [](const std::string& a, const std::string& b, const std::string& q) {
        return condition_holds(HGTriple::make(Rational::parse(a), Rational::parse(b), Rational::parse(q))).holds;
      },
      py::arg("a"), py::arg("b"), py::arg("q"));

  m.def(
      "eligible_q_values",
      [](const std::string& a, const std::string& b, long max_den) {
        std::vector<std::string> out;
        for (const auto& q : eligible_q_values(Rational::parse(a), Rational::parse(b), max_den)) out.push_back(q.str());
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("max_den"));

  m.def(
      "hyp3f2",
      [](const std::string& a, const std::string& b, const std::string& q, long digits) {
        const Rational ra = Rational::parse(a), rb = Rational::parse(b), rq = Rational::parse(q);
        const Precision p = work_bits(digits);
        const HGSpec spec{{ra, rb, rq}, {ra + rb, rq + Rational(1)}, Real(1L, p)};
        py::dict d;
        d["euler_integral"] = euler_transform_3f2(ra, rb, rq, p).value.str(digits);
        d["levin_series"] = phg_series(spec, p).value.str(digits);
        return d;
      },
      py::arg("a"), py::arg("b"), py::arg("q"), py::arg("digits") = 60,
      "3F2(a, b, q; a+b, q+1; 1) by the Euler integral and by the accelerated series.");

  m.def(
      "eval_expr",
      [](const std::string& text, long digits) { return complex_dict(AlgExpr::parse(text).eval(work_bits(digits)), digits); },
      py::arg("expr"), py::arg("digits") = 60);

  m.def(
      "catalog_json", [](const std::string& path) { return export_catalog(catalog_for(path)).dump(); },
      py::arg("catalog_path") = "");

  m.def(
      "verify_json",
      [](const std::vector<std::string>& ids, long digits, const std::string& path) {
        const auto entries = catalog_for(path);
        std::vector<CatalogEntry> chosen;
        if (ids.empty()) {
          chosen = entries;
        } else {
          for (const auto& id : ids) chosen.push_back(find_entry(entries, id));
        }
        std::vector<VerifyReport> reports;
        {
          py::gil_scoped_release release;
          reports = verify_all(chosen, digits);
        }
        auto out = nlohmann::ordered_json::array();
        for (const auto& r : reports) out.push_back(to_json(r));
        return out.dump();
      },
      py::arg("ids") = std::vector<std::string>{}, py::arg("digits") = 50, py::arg("catalog_path") = "");

  m.def(
      "discover",
      [](const std::string& a, const std::string& b, const std::string& q, const std::vector<std::string>& candidates,
         long digits, const std::string& prefactor, const std::vector<std::string>& multipliers, long max_norm) {
        const HGTriple t = HGTriple::make(Rational::parse(a), Rational::parse(b), Rational::parse(q));
        std::vector<TransTerm> cands;
        for (const auto& c : candidates) cands.push_back(TransTerm::parse(c));
        DiscoveryOptions opts;
        opts.max_norm = max_norm;
        if (!prefactor.empty()) opts.prefactor = AlgExpr::parse(prefactor);
        for (const auto& s : multipliers) opts.multipliers.push_back(AlgExpr::parse(s));
        const Discovery d = discover_formula(t, cands, work_bits(digits), opts);
        py::dict out;
        out["status"] = to_string(d.report.status);
        out["labels"] = d.report.labels;
        out["relation"] = d.report.relation ? py::cast(*d.report.relation) : py::none();
        out["complex_mode"] = d.complex_mode;
        py::list rhs;
        if (d.formula) {
          for (const auto& term : d.formula->rhs) rhs.append(py::make_tuple(term.coeff.str(), term.term.str()));
          out["lhs_value"] = complex_dict(*d.lhs, digits);
          out["rhs_value"] = complex_dict(*d.rhs, digits);
        }
        out["rhs"] = rhs;
        out["note"] = d.note;
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("q"), py::arg("candidates"), py::arg("digits") = 40,
      py::arg("prefactor") = "", py::arg("multipliers") = std::vector<std::string>{}, py::arg("max_norm") = 1000000,
      "Candidates are written log(E), atan(E) or acos(E).");

  m.def(
      "find_relation",
      [](const std::vector<std::string>& values, long max_norm, long digits) {
        const Precision p = work_bits(digits);
        std::vector<Real> xs;
        for (const auto& v : values) xs.push_back(Real::parse(v, p));
        const RelationReport r = find_relation(xs, max_norm, p);
        py::dict out;
        out["status"] = to_string(r.status);
        out["relation"] = r.relation ? py::cast(*r.relation) : py::none();
        out["residual"] = r.residual.str(6);
        out["norm_bound"] = r.norm_bound.str(6);
        return out;
      },
      py::arg("values"), py::arg("max_norm"), py::arg("digits") = 40);

  m.def(
      "real_period",
      [](const std::string& t, const std::string& cycle, long digits) {
        const Precision p = work_bits(digits);
        return real_period(PeriodSpec{Real::parse(t, p), parse_cycle(cycle)}, p).str(digits);
      },
      py::arg("t"), py::arg("cycle"), py::arg("digits") = 40);
}
