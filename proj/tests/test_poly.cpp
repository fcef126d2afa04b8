#include "doctest.h"

#include "sasver/poly.hpp"

#include <random>

using sasver::alg::Poly;
using sasver::alg::Rational;

namespace {

Poly C(long long v) { return Poly::constant(v); }
Poly V(const char* n) { return Poly::var(n); }

// Small random polynomial over {c, a, alpha} for property tests.
Poly random_poly(std::mt19937_64& rng) {
  static const char* pool[3] = {"c", "a", "alpha"};
  Poly p;
  auto terms = 1 + rng() % 4;
  for (std::uint64_t t = 0; t < terms; ++t) {
    Poly mono = Poly::constant(
        Rational(static_cast<long long>(rng() % 11) - 5, 1 + static_cast<long long>(rng() % 4)));
    for (int v = 0; v < 3; ++v) {
      auto e = rng() % 3;
      for (std::uint64_t k = 0; k < e; ++k) mono *= V(pool[v]);
    }
    p += mono;
  }
  return p;
}

}  // namespace

TEST_CASE("rational arithmetic and normalization") {
  Rational half(1, 2), third(1, 3);
  CHECK(half + third == Rational(5, 6));
  CHECK(half * third == Rational(1, 6));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(-3, -6).str() == "1/2");
  CHECK(Rational::parse("-22/77") == Rational(-2, 7));
  CHECK(Rational(7, 3) > Rational(2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(Rational(1, 3).pow(3) == Rational(1, 27));
}

TEST_CASE("curvature coefficient sum collapses to c") {
  Poly c = V("c");
  Poly sum = (c + C(3)).scaled(Rational(1, 4)) + (c - C(1)).scaled(Rational(1, 4)) +
             (c - C(1)).scaled(Rational(1, 2));
  CHECK(sum == c);
  CHECK((sum - c).is_zero());
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(20260816);
  for (int iter = 0; iter < 60; ++iter) {
    Poly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK((p + q) * r == p * r + q * r);
    CHECK((p - p).is_zero());
    CHECK(p + Poly() == p);
    CHECK(p * C(1) == p);
    CHECK((p * Poly()).is_zero());
  }
}

TEST_CASE("canonical form is stable and readable") {
  Poly c = V("c");
  Poly p = c * c + C(2) * c - C(3);
  CHECK(p.str() == "c^2 + 2*c - 3");
  Poly rebuilt = C(-3) + c * C(2) + c.pow(2);
  CHECK(rebuilt == p);
  CHECK(rebuilt.str() == p.str());
  CHECK(Poly().str() == "0");
  CHECK((C(1) - V("c").scaled(Rational(1, 2))).str() == "-1/2*c + 1");
  // unused variables are dropped: c + a - a has only c
  Poly q = c + V("a") - V("a");
  CHECK(q.variables() == std::vector<std::string>{"c"});
}

TEST_CASE("eval binds every variable and reports the missing one") {
  Poly p = V("c") * V("alpha") + C(2);
  CHECK(p.eval({{"c", Rational(3)}, {"alpha", Rational(1, 2)}}) == Rational(7, 2));
  CHECK_THROWS_WITH_AS(static_cast<void>(p.eval({{"c", Rational(3)}})),
                       "Poly: unbound variable 'alpha'", std::invalid_argument);
  CHECK(((V("c") + C(3)).pow(2).scaled(Rational(1, 16))).eval({{"c", Rational(5)}}) ==
        Rational(4));
}

TEST_CASE("substitution replaces a variable exactly once") {
  Poly alpha = V("alpha"), s1 = V("s1"), s2 = V("s2");
  Poly p = alpha.pow(2) - C(3) * alpha;
  Poly sub = p.substitute("alpha", s1 + s2 + C(2));
  Poly expect = (s1 + s2 + C(2)).pow(2) - C(3) * (s1 + s2 + C(2));
  CHECK(sub == expect);
  CHECK(p.substitute("c", s1) == p);
}

TEST_CASE("formal derivative") {
  Poly c = V("c"), a = V("a");
  Poly p = c.pow(3) * a + C(4) * c;
  CHECK(p.derivative("c") == C(3) * c.pow(2) * a + C(4));
  CHECK(p.derivative("a") == c.pow(3));
  CHECK(p.derivative("alpha").is_zero());
}

TEST_CASE("coefficient extraction") {
  Poly c = V("c"), vol = V("Vol");
  Poly p = C(5) * c.pow(2) * vol + C(7) * vol - C(2);
  CHECK(p.coefficient({{"c", 2}, {"Vol", 1}}) == Rational(5));
  CHECK(p.coefficient({{"Vol", 1}}) == Rational(7));
  CHECK(p.coefficient({}) == Rational(-2));
  CHECK(p.coefficient({{"IA", 1}}) == Rational(0));
}

TEST_CASE("variable names are validated") {
  CHECK_THROWS_AS(Poly::var("q"), std::invalid_argument);
  CHECK_THROWS_AS(Poly::var("sigma"), std::invalid_argument);
  CHECK_NOTHROW(Poly::var("s3"));
  CHECK_NOTHROW(Poly::var("s2_7"));
  CHECK_NOTHROW(Poly::var("x8"));
}

TEST_CASE("exact polynomial division") {
  Poly c = V("c"), a = V("a");
  // single-variable: (c^2 + 2c - 3) / (c - 1) = c + 3
  CHECK((c.pow(2) + C(2) * c - C(3)).divided_by_exact(c - C(1)) == c + C(3));
  // monomial divisor across variables
  CHECK((C(6) * a.pow(3) * c).divided_by_exact(C(2) * a) == C(3) * a.pow(2) * c);
  // multivariate: (a+c)^2 / (a+c) = a+c
  CHECK(((a + c) * (a + c)).divided_by_exact(a + c) == a + c);
  // quotient of zero is zero
  CHECK(Poly().divided_by_exact(c).is_zero());
  // division by zero and inexact division both throw
  CHECK_THROWS_AS(c.divided_by_exact(Poly()), std::domain_error);
  CHECK_THROWS_AS((c + C(1)).divided_by_exact(a), std::domain_error);
  CHECK_THROWS_AS((c.pow(2) + C(1)).divided_by_exact(c - C(1)), std::domain_error);
}

TEST_CASE("generic component symbols are accepted") {
  CHECK_NOTHROW(Poly::var("y1"));
  CHECK_NOTHROW(Poly::var("z12"));
  CHECK_NOTHROW(Poly::var("w4"));
  CHECK_THROWS_AS(Poly::var("y"), std::invalid_argument);
  CHECK_THROWS_AS(Poly::var("w_2"), std::invalid_argument);
}

TEST_CASE("floating-point evaluation mirrors exact evaluation") {
  Poly p = V("c").pow(2) * V("a") - C(3) * V("c") + C(7);
  const double got = p.eval_double({{"c", 2.5}, {"a", -4.0}});
  CHECK(got == doctest::Approx(2.5 * 2.5 * -4.0 - 3 * 2.5 + 7).epsilon(1e-15));
  // unbound variable still throws
  CHECK_THROWS_AS(p.eval_double({{"c", 1.0}}), std::invalid_argument);
  // rational coefficients convert faithfully
  Poly q = V("a").scaled(Rational(1, 3));
  CHECK(q.eval_double({{"a", 3.0}}) == doctest::Approx(1.0).epsilon(1e-15));
}
