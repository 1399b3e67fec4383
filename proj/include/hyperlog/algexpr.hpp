#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperlog/complex.hpp"
#include "hyperlog/condition.hpp"
#include "hyperlog/rational.hpp"

namespace hyperlog {

/// Expression tree over rationals, pi, i, zeta(n) = e^(2 pi i / n), real
/// n-th roots, Gamma at rational points and + - * / ^. Immutable; copies
/// share nodes.
///
/// Text grammar (whitespace-insensitive):
///   E := E + E | E - E | E * E | E / E | -E | E ^ [-]N | (E)
///      | N | pi | i | zeta(N) | sqrt(E) | root(N, E) | gamma(E)
/// where gamma's argument must reduce to a rational literal.
class AlgExpr {
 public:
  enum class Kind { kRational, kPi, kI, kZeta, kRoot, kGamma, kNeg, kAdd, kSub, kMul, kDiv, kPow };

  AlgExpr(const Rational& q);  // NOLINT(google-explicit-constructor)
  AlgExpr(long n) : AlgExpr(Rational(n)) {}  // NOLINT(google-explicit-constructor)

  static AlgExpr parse(std::string_view text);
  static AlgExpr pi();
  static AlgExpr i();
  static AlgExpr zeta(long n);
  static AlgExpr root(long n, const AlgExpr& x);
  static AlgExpr sqrt(const AlgExpr& x) { return root(2, x); }
  static AlgExpr gamma(const Rational& q);

  Kind kind() const;
  /// The value of a rational leaf.
  std::optional<Rational> as_rational() const;
  /// Round-trips through parse.
  std::string str() const;

  /// Evaluates at `prec` bits. Throws DomainError on division by zero, an
  /// even root of a negative value, a root of a non-real value, or a Gamma pole.
  Complex eval(Precision prec) const;
  /// eval() for trees expected to be real; DomainError when the imaginary
  /// part exceeds 2^-prec+g relative to the modulus.
  Real eval_real(Precision prec) const;

  /// Tree of the complex conjugate: zeta(n) -> zeta(n)^(n-1), i -> -i.
  AlgExpr conj() const;

  friend AlgExpr operator+(const AlgExpr& a, const AlgExpr& b);
  friend AlgExpr operator-(const AlgExpr& a, const AlgExpr& b);
  friend AlgExpr operator*(const AlgExpr& a, const AlgExpr& b);
  friend AlgExpr operator/(const AlgExpr& a, const AlgExpr& b);
  friend AlgExpr operator-(const AlgExpr& a);
  friend AlgExpr pow(const AlgExpr& a, long n);

  struct Node;

 private:
  explicit AlgExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// A transcendental basis function applied to an algebraic argument.
struct TransTerm {
  enum class Kind { kLog, kAtan, kAcos, kPiI, kOne };
  Kind kind;
  std::optional<AlgExpr> argument;  ///< absent for kPiI and kOne

  static TransTerm log(const AlgExpr& x) { return {Kind::kLog, x}; }
  static TransTerm atan(const AlgExpr& x) { return {Kind::kAtan, x}; }
  static TransTerm acos(const AlgExpr& x) { return {Kind::kAcos, x}; }
  static TransTerm pi_i() { return {Kind::kPiI, std::nullopt}; }
  static TransTerm one() { return {Kind::kOne, std::nullopt}; }

  /// Principal log, real atan and acos. Throws DomainError outside the domain.
  Complex eval(Precision prec) const;
  /// True for log terms whose argument lies within 2^-(prec/2) of the cut.
  bool branch_sensitive(Precision prec) const;

  /// "log(E)", "atan(E)", "acos(E)", "pi_i" or "1".
  std::string str() const;
  static TransTerm parse(std::string_view text);
};

const char* to_string(TransTerm::Kind k);
TransTerm::Kind parse_term_kind(std::string_view name);

struct FormulaTerm {
  AlgExpr coeff;
  TransTerm term;
};

/// lhs_scale * prefactor * 3F2(a, b, q; a+b, q+1; 1) = sum coeff_j * term_j.
struct LogFormula {
  HGTriple triple;
  AlgExpr prefactor;
  std::optional<AlgExpr> lhs_scale;  ///< absent means 1
  std::vector<FormulaTerm> rhs;
};

Complex eval_formula_rhs(const LogFormula& f, Precision prec);

}  // namespace hyperlog
