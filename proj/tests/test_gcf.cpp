#include <doctest.h>

#include "gcf_forge/error.hpp"
#include "gcf_forge/gcf.hpp"
#include "oracles.hpp"

using namespace gcf_forge;

TEST_CASE("convergents of the 8/pi^2 fraction") {
  const auto table = convergents(oracle::paper_problem(), 2);
  REQUIRE(table.rows.size() == 3);
  CHECK(table.rows[0] == ConvergentTriple{0, 1, 1, BigRational(1)});
  CHECK(table.rows[1] == ConvergentTriple{1, 6, 7, make_rational(6, 7)});
  // a(2) = -(32 - 8) = -24, b(2) = 19: A_2 = 19*6 - 24*1, B_2 = 19*7 - 24*1
  CHECK(table.rows[2] == ConvergentTriple{2, 90, 109, make_rational(90, 109)});
  CHECK(table.zero_denominator_at.empty());
}

TEST_CASE("convergents match the nested fraction evaluated bottom-up") {
  const GcfProblem problem = oracle::paper_problem();
  const auto table = convergents(problem, 12);
  for (long n = 0; n <= 12; ++n) {
    BigRational tail = 0;
    for (long j = n; j >= 1; --j) tail = problem.a(BigRational(j)) / (problem.b(BigRational(j)) + tail);
    CHECK(*table.rows[static_cast<std::size_t>(n)].x == problem.b0 + tail);
  }
}

TEST_CASE("zero denominators are reported and skipped") {
  GcfProblem problem;
  problem.b0 = 1;
  problem.a = Polynomial::constant(-1);
  problem.b = Polynomial::constant(1);
  // B: 0, 1, 1, 0, -1, -1, 0, ...
  const auto table = convergents(problem, 6);
  CHECK(table.zero_denominator_at == std::vector<long>{2, 5});
  CHECK_FALSE(table.rows[2].x.has_value());
  CHECK(table.rows[3].x.has_value());
}

TEST_CASE("casoratian") {
  const GcfProblem problem = oracle::paper_problem();
  const auto w = casoratian(problem, 100);
  CHECK(w[0] == -1);
  CHECK(w[1] == -1);
  CHECK(w[2] == -24);
  for (long n = 1; n <= 100; ++n) {
    const auto i = static_cast<std::size_t>(n);
    CHECK(w[i] == -problem.a(BigRational(n)) * w[i - 1]);
    CHECK(w[i] != 0);
  }
}

TEST_CASE("both frames satisfy the recurrence through one iterator") {
  const GcfProblem problem = oracle::paper_problem();
  for (const auto& y : {numerator_trajectory(problem, 40), denominator_trajectory(problem, 40),
                        solve_recurrence(problem, 3, make_rational(-2, 5), 40)}) {
    for (long n = 1; n <= 40; ++n) {
      const BigRational index(n);
      CHECK(y.at(n) == problem.b(index) * y.at(n - 1) + problem.a(index) * y.at(n - 2));
    }
  }
}

TEST_CASE("validate_problem") {
  GcfProblem problem = oracle::paper_problem();
  CHECK_NOTHROW(validate_problem(problem));
  problem.a = Polynomial();
  try {
    validate_problem(problem);
    FAIL("expected ZeroPartialNumerator");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroPartialNumerator);
  }
  problem.a = parse_polynomial("n - 3");
  CHECK_THROWS_AS(validate_problem(problem), Error);
  problem.a = parse_polynomial("n + 3");
  CHECK_NOTHROW(validate_problem(problem));
}
