#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperlog/algexpr.hpp"
#include "json.hpp"

namespace hyperlog {

enum class LhsKind { kReal, kComplex };

struct CatalogEntry {
  std::string id;
  LogFormula formula;
  LhsKind lhs_kind;
  std::string source;
};

/// The nine built-in identities for a = 1/6, b = 5/6: l2-q12, l3-q13,
/// l3-q23, l4-q14, l4-q34 and l5-k1 .. l5-k4.
const std::vector<CatalogEntry>& builtin_catalog();

/// e_j of the l = 5 family as an expression, j in Z.
AlgExpr l5_e(long j);
/// e_j with zeta^j on all three terms, a reading under which the l = 5
/// identities fail; kept for the regression test that documents it.
AlgExpr l5_e_all_zeta_j(long j);

/// Throws PreconditionError for an unknown id.
const CatalogEntry& find_entry(const std::vector<CatalogEntry>& entries, std::string_view id);

nlohmann::ordered_json to_json(const CatalogEntry& e);
/// Throws ParseError for malformed expressions and PreconditionError for
/// schema violations (missing fields, invalid triple, duplicate ids).
CatalogEntry entry_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json export_catalog(const std::vector<CatalogEntry>& entries);
std::vector<CatalogEntry> load_catalog(const nlohmann::ordered_json& j);
std::vector<CatalogEntry> load_catalog_file(const std::string& path);

struct VerifyReport {
  std::string id;
  bool pass = false;
  long digits_requested = 0;
  double achieved_digits = 0;
  Real delta;
  Complex lhs, rhs;
  /// 3F2 by the Euler integral (used for lhs) and by accelerated series.
  Real f_integral, f_series;
  double method_agreement_digits = 0;
  bool branch_sensitive = false;
  /// Set when evaluation failed; names the side ("lhs: ..." or "rhs: ...").
  std::string error;
};

/// Checks lhs_scale * prefactor * 3F2 = rhs. Passes iff
/// |lhs - rhs| < 10^-digits * max(1, |lhs|). Requires digits >= 10.
VerifyReport verify_entry(const CatalogEntry& e, long digits);
/// Entries run concurrently; the result keeps catalog order.
std::vector<VerifyReport> verify_all(const std::vector<CatalogEntry>& entries, long digits);

/// {id, pass, digits_requested, achieved, delta_decimal_string, ...}.
nlohmann::ordered_json to_json(const VerifyReport& r);

}  // namespace hyperlog
