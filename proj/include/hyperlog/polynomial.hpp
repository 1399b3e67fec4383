#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hyperlog/rational.hpp"

namespace hyperlog {

/// Dense univariate polynomial with Rational coefficients, lowest degree
/// first. Trailing zero coefficients are never stored.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(std::initializer_list<Rational> coeffs);
  explicit Polynomial(std::vector<Rational> coeffs);

  /// The monomial x.
  static Polynomial x();

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int i) const;
  Rational leading() const;

  Rational operator()(const Rational& at) const;
  Polynomial derivative() const;
  Polynomial monic() const;
  /// Substitutes x -> 1 - x.
  Polynomial reflected() const { return affine(Rational(1), Rational(-1)); }
  /// Substitutes x -> origin + scale * x.
  Polynomial affine(const Rational& origin, const Rational& scale) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Euclidean division; throws DomainError on a zero divisor.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  /// Monic gcd; gcd(0, 0) = 0.
  friend Polynomial gcd(const Polynomial& a, const Polynomial& b);

  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient of polynomials, kept in lowest terms with a monic denominator so
/// that structural equality is mathematical equality.
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  RationalFunction(const Polynomial& p) : num_(p), den_(Rational(1)) {}  // NOLINT
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  Rational operator()(const Rational& at) const;
  RationalFunction derivative() const;

  RationalFunction operator-() const { return {-num_, den_}; }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

  std::string str(const std::string& var = "t") const;

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

}  // namespace hyperlog
