#include <set>
#include <string>

#include "doctest.h"
#include "hyperlog/catalog.hpp"
#include "hyperlog/errors.hpp"
#include "hyperlog/functions.hpp"
#include "hyperlog/hypergeometric.hpp"
#include "test_support.hpp"

using namespace hyperlog;
using hyperlog::testing::agreement_digits;
using hyperlog::testing::close;

namespace {

const std::vector<std::string> kIds{"l2-q12", "l3-q13", "l3-q23", "l4-q14", "l4-q34",
                                    "l5-k1",  "l5-k2",  "l5-k3",  "l5-k4"};

}  // namespace

TEST_CASE("built-in catalog ids") {
  const auto& cat = builtin_catalog();
  REQUIRE(cat.size() == kIds.size());
  for (std::size_t k = 0; k < kIds.size(); ++k) CHECK(cat[k].id == kIds[k]);
  CHECK(find_entry(cat, "l4-q34").formula.lhs_scale.has_value());
  CHECK_THROWS_AS(find_entry(cat, "l6-q16"), PreconditionError);
  CHECK(find_entry(cat, "l5-k3").lhs_kind == LhsKind::kComplex);
}

TEST_CASE("every entry passes at 50 and at 100 digits") {
  for (long digits : {50L, 100L}) {
    for (const auto& r : verify_all(builtin_catalog(), digits)) {
      CAPTURE(r.id);
      CAPTURE(digits);
      CAPTURE(r.error);
      CHECK(r.pass);
      CHECK(r.achieved_digits >= digits);
      CHECK_FALSE(r.branch_sensitive);
      CHECK(r.method_agreement_digits >= 25);
    }
  }
}

TEST_CASE("weak tolerance passes too") {
  for (const auto& r : verify_all(builtin_catalog(), 10)) {
    CAPTURE(r.id);
    CHECK(r.pass);
  }
  CHECK_THROWS_AS(verify_entry(builtin_catalog().front(), 9), PreconditionError);
}

TEST_CASE("l2-q12 with 7 in place of 6 fails by F/6") {
  CatalogEntry bad = find_entry(builtin_catalog(), "l2-q12");
  bad.id = "l2-q12-corrupted";
  // (3 sqrt3 / 2 pi) log(2+sqrt3) = 6 (sqrt3 / 4 pi) log(2+sqrt3); replace the 6 by 7.
  bad.formula.rhs = {{AlgExpr::parse("7*sqrt(3)/(4*pi)"), TransTerm::parse("log(2 + sqrt(3))")}};
  const auto r = verify_entry(bad, 30);
  CHECK_FALSE(r.pass);
  const Precision p = r.delta.precision();
  const Real f = euler_transform_3f2(Rational(1, 6), Rational(5, 6), Rational(1, 2), p).value;
  CHECK(agreement_digits(r.delta, f / 6) >= 25);
  CHECK(r.delta.str(4) == "0.1815");
}

TEST_CASE("l5 with zeta^j on every term of e_j fails") {
  for (long k = 1; k <= 4; ++k) {
    CatalogEntry e = builtin_catalog()[4 + k];
    for (std::size_t j = 0; j < 4; ++j) e.formula.rhs[j].term = TransTerm::log(l5_e_all_zeta_j(static_cast<long>(j)));
    const auto r = verify_entry(e, 20);
    CAPTURE(k);
    CHECK_FALSE(r.pass);
    CHECK(r.delta > Real::parse("1e-3", 64));
  }
}

TEST_CASE("l5 family structure") {
  const auto& cat = builtin_catalog();
  const Precision p = 200;
  for (long k = 1; k <= 4; ++k) {
    const auto& f = cat[4 + k].formula;
    const auto& g = cat[9 - k].formula;  // k <-> 5 - k
    CAPTURE(k);
    CHECK(close(f.lhs_scale->conj().eval(p), g.lhs_scale->eval(p), 190));
    for (std::size_t j = 0; j < f.rhs.size(); ++j) {
      CHECK(close(f.rhs[j].coeff.conj().eval(p), g.rhs[j].coeff.eval(p), 190));
    }
    // The Gamma-quotient prefactor 2 pi A_k / k is real.
    CHECK(f.prefactor.eval_real(p) > 0);
  }
  for (long k : {1L, 2L}) {
    const auto a = [&](long m) {
      const Rational q(m, 5);
      return gamma(q + Rational(1, 6), p) * gamma(q + Rational(5, 6), p) / pow(gamma(q, p), 2);
    };
    CHECK(a(k) * a(5 - k) > 0);
  }
  // w = alpha zeta20 zeta^(2j) satisfies w^10 = -1/24.
  const Complex w10 = pow(AlgExpr::parse("root(10, 1/24)*zeta(20)*zeta(5)^2").eval(p), 10);
  CHECK(close(w10, Complex(Real(Rational(-1, 24), p)), 190));
}

TEST_CASE("JSON export and load round-trip") {
  const auto exported = export_catalog(builtin_catalog());
  REQUIRE(exported.is_array());
  CHECK(exported[0]["triple"]["q"] == "1/2");
  CHECK(exported[0]["lhs_scale"].is_null());
  CHECK(exported[4]["lhs_scale"] == "7*sqrt(3)/9");
  CHECK(exported[5]["rhs"][4]["kind"] == "pi_i");
  CHECK(exported[5]["rhs"][4]["arg"].is_null());
  const auto loaded = load_catalog(nlohmann::ordered_json::parse(exported.dump()));
  CHECK(export_catalog(loaded) == exported);
  for (const auto& r : verify_all(loaded, 20)) {
    CAPTURE(r.id);
    CHECK(r.pass);
  }
}

TEST_CASE("catalog schema violations") {
  auto entry = to_json(builtin_catalog().front());
  auto missing = entry;
  missing.erase("rhs");
  CHECK_THROWS_AS(entry_from_json(missing), PreconditionError);
  auto bad_expr = entry;
  bad_expr["prefactor"] = "2*(pi";
  CHECK_THROWS_AS(entry_from_json(bad_expr), ParseError);
  auto bad_triple = entry;
  bad_triple["triple"]["q"] = "1";
  CHECK_THROWS_AS(entry_from_json(bad_triple), PreconditionError);
  auto bad_kind = entry;
  bad_kind["rhs"][0]["kind"] = "exp";
  CHECK_THROWS_AS(entry_from_json(bad_kind), PreconditionError);
  auto arg_on_pi = entry;
  arg_on_pi["rhs"][0]["kind"] = "pi_i";
  CHECK_THROWS_AS(entry_from_json(arg_on_pi), PreconditionError);
  CHECK_THROWS_AS(load_catalog(nlohmann::ordered_json::array({entry, entry})), PreconditionError);
  CHECK_THROWS_AS(load_catalog_file("/nonexistent/catalog.json"), PreconditionError);
}

TEST_CASE("report JSON") {
  const auto r = verify_entry(builtin_catalog().front(), 20);
  const auto j = to_json(r);
  CHECK(j["id"] == "l2-q12");
  CHECK(j["pass"] == true);
  CHECK(j["digits_requested"] == 20);
  CHECK(std::stol(j["achieved"].get<std::string>()) >= 20);
  CHECK(j["delta_decimal_string"].is_string());
}
