#include <doctest.h>

#include "gcf_forge/error.hpp"
#include "gcf_forge/expr.hpp"
#include "gcf_forge/factorize.hpp"
#include "oracles.hpp"

using namespace gcf_forge;

namespace {

Polynomial P(const char* text) { return parse_polynomial(text); }

void check_sound(const Polynomial& a, const Polynomial& b, const std::vector<Coupling>& couplings) {
  for (const auto& coupling : couplings) {
    CHECK(verify_coupling(a, b, coupling));
    for (long n = 1; n <= 50; ++n) {
      CHECK(evaluate(coupling.c, n) + evaluate(coupling.d, n + 1) == evaluate(b, n));
      CHECK(evaluate(coupling.c, n) * evaluate(coupling.d, n) == -evaluate(a, n));
    }
  }
}

}  // namespace

TEST_CASE("8/pi^2 coupling is found and unique") {
  const Polynomial a = P("-(2*n^4 - n^3)");
  const Polynomial b = P("3*n^2 + 3*n + 1");
  const auto couplings = find_couplings(a, b);
  REQUIRE(couplings.size() == 1);
  CHECK(couplings[0].c == P("n^2"));
  CHECK(couplings[0].d == P("2*n^2 - n"));
  check_sound(a, b, couplings);
}

TEST_CASE("symmetric split") {
  const Polynomial a = P("-n^2");
  const Polynomial b = P("2*n + 1");
  const auto couplings = find_couplings(a, b);
  CHECK(std::find(couplings.begin(), couplings.end(), Coupling{P("n"), P("n")}) != couplings.end());
  check_sound(a, b, couplings);
}

TEST_CASE("no rational scalars") {
  // u + v = 1, u v = 1: discriminant of u^2 - u + 1 is -3
  CHECK(find_couplings(P("-1"), P("1")).empty());
}

TEST_CASE("rank-one systems with rational scalar pairs") {
  // c = u, d = v constants: u + v = 5, u v = 6 -> (2, 3) and (3, 2)
  const auto couplings = find_couplings(P("-6"), P("5"));
  REQUIRE(couplings.size() == 2);
  CHECK(couplings[0] == Coupling{P("2"), P("3")});
  CHECK(couplings[1] == Coupling{P("3"), P("2")});
  check_sound(P("-6"), P("5"), couplings);
}

TEST_CASE("residual factor goes wholly to one side") {
  // c = n^2 + 1, d = 2: c + d(n+1) = n^2 + 3, c d = 2n^2 + 2
  const Polynomial a = P("-(2*n^2 + 2)");
  const Polynomial b = P("n^2 + 3");
  const auto couplings = find_couplings(a, b);
  REQUIRE(couplings.size() == 1);
  CHECK(couplings[0] == Coupling{P("n^2 + 1"), P("2")});
  check_sound(a, b, couplings);
}

TEST_CASE("couplings from known constructions are recovered") {
  // Build (a, b) from chosen (c, d) and confirm the search finds that pair.
  const std::vector<std::pair<const char*, const char*>> pairs = {
      {"n^2", "n*(2*n - 1)"}, {"n", "2*n"}, {"(n + 1)^2", "3*n + 2"}, {"n*(n - 1/2)", "4*n^2"},
      {"-n^3", "n + 5"},      {"2*n", "n^2 + 1"},
  };
  for (const auto& [c_text, d_text] : pairs) {
    const Coupling expected{P(c_text), P(d_text)};
    const Polynomial b = expected.c + shift(expected.d, 1);
    const Polynomial a = -(expected.c * expected.d);
    const auto couplings = find_couplings(a, b);
    CHECK_MESSAGE(std::find(couplings.begin(), couplings.end(), expected) != couplings.end(), c_text);
    check_sound(a, b, couplings);
    CHECK(std::is_sorted(couplings.begin(), couplings.end(), [](const Coupling& x, const Coupling& y) {
      return x.c.degree() < y.c.degree() || (x.c.degree() == y.c.degree() && coefficient_less(x.c, y.c));
    }));
    CHECK(find_couplings(a, b) == couplings);
  }
}

TEST_CASE("verify_coupling") {
  const Polynomial a = P("-(2*n^4 - n^3)");
  const Polynomial b = P("3*n^2 + 3*n + 1");
  CHECK(verify_coupling(a, b, oracle::paper_coupling()));
  CHECK_FALSE(verify_coupling(a, b, {P("n^2"), P("n^2")}));
  CHECK_FALSE(verify_coupling(a, b, {P("2*n^2 - n"), P("n^2")}));
}

TEST_CASE("zero partial numerator") {
  try {
    find_couplings(Polynomial(), P("n"));
    FAIL("expected ZeroPartialNumerator");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroPartialNumerator);
  }
}
