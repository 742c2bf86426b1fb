#include <doctest.h>

#include <random>

#include "gcf_forge/error.hpp"
#include "gcf_forge/expr.hpp"
#include "gcf_forge/poly.hpp"

using namespace gcf_forge;

namespace {

Polynomial P(const char* text) { return parse_polynomial(text); }

Polynomial random_polynomial(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> coeff(-20, 20);
  std::uniform_int_distribution<int> den(1, 6);
  std::uniform_int_distribution<int> degree(0, max_degree);
  std::vector<BigRational> cs;
  for (int k = degree(rng); k >= 0; --k) cs.push_back(make_rational(coeff(rng), den(rng)));
  return Polynomial(cs);
}

}  // namespace

TEST_CASE("canonical form") {
  CHECK(Polynomial({1, 2, 0, 0}).degree() == 1);
  CHECK(Polynomial({0, 0}).is_zero());
  CHECK(Polynomial().degree() == -1);
  CHECK(Polynomial({1, 2, 0}) == Polynomial({1, 2}));
  CHECK(P("2*n^2 - n").to_string() == "2*n^2 - n");
  CHECK(P("-n^2 + 1/2").to_string() == "-n^2 + 1/2");
  CHECK(Polynomial().to_string() == "0");
}

TEST_CASE("evaluate") {
  CHECK(evaluate(P("3*n^2+3*n+1"), 2) == 19);
  CHECK(evaluate(P("-(2*n^4 - n^3)"), 3) == -135);
  CHECK(evaluate(Polynomial(), 17) == 0);
}

TEST_CASE("shift") {
  CHECK(shift(P("n*(2*n-1)"), 1) == P("2*n^2+3*n+1"));
  const Polynomial p = P("5*n^3 - 2*n + 7");
  CHECK(shift(p, 0) == p);
  CHECK(shift(P("n^2"), 1) == P("n^2+2*n+1"));
  CHECK(shift(P("n^2"), -3) == P("n^2-6*n+9"));
}

TEST_CASE("arithmetic") {
  CHECK(P("n^2") + shift(P("n*(2*n-1)"), 1) == P("3*n^2+3*n+1"));
  CHECK(P("n^2") * P("n*(2*n-1)") == P("2*n^4-n^3"));
  const Polynomial p = P("4*n^3 - n + 2");
  CHECK((p - p).is_zero());
}

TEST_CASE("shift properties") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> offset(-12, 12);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial p = random_polynomial(rng, 6);
    const long a = offset(rng), b = offset(rng), n = offset(rng);
    CHECK(shift(shift(p, a), b) == shift(p, a + b));
    CHECK(evaluate(shift(p, a), n) == evaluate(p, n + a));
  }
}

TEST_CASE("factor_rational examples") {
  SUBCASE("2n^4 - n^3") {
    const auto f = factor_rational(P("2*n^4 - n^3"));
    CHECK(f.content == 2);
    CHECK(f.sign == 1);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == LinearFactor{0, 3});
    CHECK(f.factors[1] == LinearFactor{make_rational(1, 2), 1});
    CHECK_FALSE(f.residual.has_value());
  }
  SUBCASE("n^2 + 1") {
    const auto f = factor_rational(P("n^2 + 1"));
    CHECK(f.content == 1);
    CHECK(f.factors.empty());
    REQUIRE(f.residual.has_value());
    CHECK(*f.residual == P("n^2 + 1"));
  }
  SUBCASE("6n") {
    const auto f = factor_rational(P("6*n"));
    CHECK(f.content == 6);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0] == LinearFactor{0, 1});
  }
  SUBCASE("negative, repeated and rational roots with a residual") {
    const Polynomial p = P("-3*(n - 2)^2*(3*n + 1)*(n^2 - 2)/5");
    const auto f = factor_rational(p);
    CHECK(f.sign == -1);
    CHECK(f.content == make_rational(9, 5));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == LinearFactor{make_rational(-1, 3), 1});
    CHECK(f.factors[1] == LinearFactor{2, 2});
    REQUIRE(f.residual.has_value());
    CHECK(*f.residual == P("n^2 - 2"));
    CHECK(f.reconstruct() == p);
  }
  SUBCASE("constants") {
    const auto f = factor_rational(Polynomial::constant(-7));
    CHECK(f.scale() == -7);
    CHECK(f.factors.empty());
    CHECK_FALSE(f.residual.has_value());
  }
  CHECK_THROWS_AS(factor_rational(Polynomial()), Error);
}

TEST_CASE("factor_rational reconstructs products of random linear factors") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 5);
  std::uniform_int_distribution<int> count(0, 4);
  for (int trial = 0; trial < 60; ++trial) {
    int lead = num(rng);
    if (lead == 0) lead = 1;
    Polynomial p = Polynomial::constant(make_rational(lead, den(rng)));
    int linear = 0;
    for (int i = count(rng); i > 0; --i, ++linear) p = p * Polynomial::linear_factor(make_rational(num(rng), den(rng)));
    if (trial % 3 == 0) p = p * P("n^2 + n + 1");
    const auto f = factor_rational(p);
    CHECK(f.reconstruct() == p);
    int multiplicity_sum = 0;
    for (const auto& factor : f.factors) multiplicity_sum += factor.multiplicity;
    CHECK(multiplicity_sum == linear);
    CHECK(f.residual.has_value() == (trial % 3 == 0));
  }
}

TEST_CASE("integer roots and positivity") {
  CHECK(integer_roots_at_least(P("(n - 3)*(n + 2)*(2*n - 1)"), 1) == std::vector<BigInteger>{3});
  CHECK(integer_roots_at_least(P("n^2 + 1"), 1).empty());
  CHECK(positive_on_positive_integers(P("n*(2*n - 1)")));
  CHECK(positive_on_positive_integers(P("n^2 - 10*n + 26")));  // minimum 1 at n = 5
  CHECK_FALSE(positive_on_positive_integers(P("n^2 - 10*n + 25")));
  CHECK_FALSE(positive_on_positive_integers(P("-n")));
}

TEST_CASE("cauchy bound encloses rational roots") {
  const Polynomial p = P("(n - 7)*(2*n + 9)*(n - 1/3)");
  const BigRational bound = cauchy_root_bound(p);
  for (const auto& factor : factor_rational(p).factors) CHECK(abs(factor.root) < bound);
}
