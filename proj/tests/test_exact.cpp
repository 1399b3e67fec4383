#include <map>
#include <numeric>
#include <optional>
#include <random>

#include "doctest.h"
#include "hyperlog/condition.hpp"
#include "hyperlog/errors.hpp"
#include "hyperlog/polynomial.hpp"

using namespace hyperlog;

namespace {

Rational R(const char* s) { return Rational::parse(s); }

Rational random_non_integer(std::mt19937& rng) {
  std::uniform_int_distribution<long> den(2, 24);
  std::uniform_int_distribution<long> num(-60, 60);
  for (;;) {
    Rational r(num(rng), den(rng));
    if (!r.is_integer()) return r;
  }
}

Polynomial random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> c(-9, 9);
  std::vector<Rational> coeffs;
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i) coeffs.emplace_back(c(rng), 1 + std::abs(c(rng)));
  return Polynomial(std::move(coeffs));
}

}  // namespace

TEST_CASE("rational parse and render") {
  CHECK(R("6/4").str() == "3/2");
  CHECK(R("-2/6").str() == "-1/3");
  CHECK(R("7").str() == "7");
  CHECK(R("+0/5").str() == "0");
  CHECK_THROWS_AS(R("1/0"), ParseError);
  CHECK_THROWS_AS(R("1.5"), ParseError);
  CHECK_THROWS_AS(R("a/2"), ParseError);
  CHECK_THROWS_AS(R(""), ParseError);
}

TEST_CASE("frac") {
  CHECK(frac(R("5/2")) == R("1/2"));
  CHECK(frac(R("-1/3")) == R("2/3"));
  CHECK(frac(R("2")) == R("0"));
  CHECK(frac(R("-7")) == R("0"));
}

TEST_CASE("frac(x) + frac(-x) = 1 for non-integers") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Rational x = random_non_integer(rng);
    CHECK(frac(x) + frac(-x) == Rational(1));
    CHECK(frac(x) >= Rational(0));
    CHECK(frac(x) < Rational(1));
  }
}

TEST_CASE("HGTriple rejects integral parameter combinations by name") {
  CHECK_THROWS_WITH_AS(HGTriple::make(R("1/2"), R("1/2"), R("1")), doctest::Contains("q must not"),
                       PreconditionError);
  CHECK_THROWS_WITH_AS(HGTriple::make(R("1/6"), R("5/6"), R("7/6")),
                       doctest::Contains("q-a must not"), PreconditionError);
  CHECK_THROWS_WITH_AS(HGTriple::make(R("1/3"), R("1/3"), R("2/3")),
                       doctest::Contains("q-a-b must not"), PreconditionError);
  CHECK_THROWS_WITH_AS(HGTriple::make(R("2"), R("1/3"), R("1/5")), doctest::Contains("a must not"),
                       PreconditionError);
}

TEST_CASE("condition for (1/6, 5/6, 1/2)") {
  const auto result = condition_holds(HGTriple::make(R("1/6"), R("5/6"), R("1/2")));
  CHECK(result.holds);
  REQUIRE(result.witnesses.size() == 2);
  CHECK(result.witnesses[0].s == 1);
  CHECK(result.witnesses[0].sum == Rational(2));
  CHECK(result.witnesses[1].s == 5);
  CHECK(result.witnesses[1].sum == Rational(2));
}

TEST_CASE("condition fails for q = 1/7") {
  const auto result = condition_holds(HGTriple::make(R("1/6"), R("5/6"), R("1/7")));
  CHECK_FALSE(result.holds);
  CHECK(result.witnesses.size() == 12);  // phi(42)
}

TEST_CASE("witness sums pair to 4 under s -> L - s") {
  std::mt19937 rng(5);
  int checked = 0;
  while (checked < 60) {
    const Rational a = random_non_integer(rng), b = random_non_integer(rng),
                   q = random_non_integer(rng);
    HGTriple t = [&] {
      try {
        return std::optional<HGTriple>(HGTriple::make(a, b, q));
      } catch (const PreconditionError&) {
        return std::optional<HGTriple>();
      }
    }()
                     .value_or(HGTriple::make(R("1/6"), R("5/6"), R("1/2")));
    const long period = t.common_denominator().get_si();
    const auto result = condition_holds(t);
    std::map<long, Rational> by_s;
    for (const auto& w : result.witnesses) by_s.emplace(w.s, w.sum);
    for (const auto& [s, sum] : by_s) {
      auto partner = by_s.find(period - s);
      REQUIRE(partner != by_s.end());
      CHECK(sum + partner->second == Rational(4));
    }
    ++checked;
  }
}

TEST_CASE("eligible q values") {
  const std::vector<Rational> expected{R("1/2"), R("1/3"), R("2/3"), R("1/4"), R("3/4"),
                                       R("1/5"), R("2/5"), R("3/5"), R("4/5")};
  CHECK(eligible_q_values(R("1/6"), R("5/6"), 5) == expected);
  CHECK(eligible_q_values(R("1/6"), R("5/6"), 60) == expected);
  CHECK(eligible_q_values(R("1/6"), R("5/6"), 1).empty());
  CHECK_THROWS_AS(eligible_q_values(R("1"), R("5/6"), 5), PreconditionError);
}

TEST_CASE("e-part eligibility") {
  auto e = e_part_eligibility(2, 1);
  CHECK(e.dimension == 1);
  CHECK(e.log_case);
  e = e_part_eligibility(6, 1);
  CHECK(e.dimension == 0);
  CHECK_FALSE(e.log_case);
  e = e_part_eligibility(12, 2);
  CHECK(e.dimension == 0);
  CHECK_FALSE(e.log_case);
  e = e_part_eligibility(7, 1);
  CHECK(e.dimension == 1);
  CHECK_FALSE(e.log_case);
  CHECK_THROWS_AS(e_part_eligibility(6, 4), PreconditionError);
  CHECK_THROWS_AS(e_part_eligibility(6, 0), PreconditionError);
}

TEST_CASE("condition agrees with the e-part log case for a=1/6, b=5/6") {
  for (long l = 2; l <= 60; ++l) {
    for (long k = 1; k < l; ++k) {
      if (std::gcd(k, l) != 1) continue;
      std::optional<HGTriple> t;
      try {
        t = HGTriple::make(R("1/6"), R("5/6"), Rational(k, l));
      } catch (const PreconditionError&) {
        continue;
      }
      CHECK_MESSAGE(condition_holds(*t).holds == e_part_eligibility(l, 1).log_case,
                    "q = " << k << "/" << l);
    }
  }
}

TEST_CASE("polynomial arithmetic") {
  const Polynomial t = Polynomial::x();
  const Polynomial p = t * t - Polynomial(Rational(1));
  auto [q, r] = divmod(p, t - Polynomial(Rational(1)));
  CHECK(q == t + Polynomial(Rational(1)));
  CHECK(r.is_zero());
  CHECK(gcd(p, t * t + t * Rational(-2) + Polynomial(Rational(1))) == t - Polynomial(Rational(1)));
  CHECK(p.str() == "t^2 - 1");
  CHECK(Polynomial{R("1"), R("-2")}.reflected() == Polynomial{R("-1"), R("2")});
  CHECK_THROWS_AS(divmod(p, Polynomial()), DomainError);
}

TEST_CASE("rational functions normalize to a monic denominator") {
  const Polynomial t = Polynomial::x();
  const RationalFunction f(t * Rational(2), t * Rational(6) - t * t * Rational(6));
  CHECK(f.numerator() == Polynomial(R("-1/3")));
  CHECK(f.denominator() == t - Polynomial(Rational(1)));
  CHECK(f(R("1/2")) == R("2/3"));
  CHECK_THROWS_AS(RationalFunction(t, Polynomial()), DomainError);
}

TEST_CASE("(f * g) / g == f for random rational functions") {
  std::mt19937 rng(3);
  for (int i = 0; i < 50; ++i) {
    Polynomial fd = random_poly(rng, 3), gd = random_poly(rng, 3), gn = random_poly(rng, 3);
    if (fd.is_zero() || gd.is_zero() || gn.is_zero()) continue;
    const RationalFunction f(random_poly(rng, 3), fd);
    const RationalFunction g(gn, gd);
    CHECK((f * g) / g == f);
    CHECK((f + g) - g == f);
  }
}
