#include "gcf_forge/gcf.hpp"

#include "gcf_forge/error.hpp"

namespace gcf_forge {

void validate_problem(const GcfProblem& problem) {
  if (problem.a.is_zero()) {
    throw Error(ErrorCode::ZeroPartialNumerator, "partial numerator polynomial a is identically zero");
  }
  const auto roots = integer_roots_at_least(problem.a, 1);
  if (!roots.empty()) {
    throw Error(ErrorCode::Precondition,
                "partial numerator a(n) vanishes at n = " + roots.front().get_str());
  }
}

const BigRational& Trajectory::at(long n) const {
  if (n == -1) return before_start_;
  if (n < -1 || n > last()) throw Error(ErrorCode::Precondition, "trajectory index out of range");
  return values_[static_cast<std::size_t>(n)];
}

Trajectory solve_recurrence(const GcfProblem& problem, const BigRational& y_minus1,
                            const BigRational& y0, long depth) {
  if (depth < 0) throw Error(ErrorCode::Precondition, "depth must be nonnegative");
  std::vector<BigRational> values;
  values.reserve(static_cast<std::size_t>(depth) + 1);
  values.push_back(y0);
  BigRational previous = y_minus1;
  for (long n = 1; n <= depth; ++n) {
    const BigRational index(n);
    BigRational next = problem.b(index) * values.back() + problem.a(index) * previous;
    previous = values.back();
    values.push_back(std::move(next));
  }
  return Trajectory(y_minus1, std::move(values));
}

Trajectory numerator_trajectory(const GcfProblem& problem, long depth) {
  return solve_recurrence(problem, 1, problem.b0, depth);
}

Trajectory denominator_trajectory(const GcfProblem& problem, long depth) {
  return solve_recurrence(problem, 0, 1, depth);
}

ConvergentTable convergents(const GcfProblem& problem, long depth) {
  const Trajectory numerators = numerator_trajectory(problem, depth);
  const Trajectory denominators = denominator_trajectory(problem, depth);
  ConvergentTable table;
  table.rows.reserve(static_cast<std::size_t>(depth) + 1);
  for (long n = 0; n <= depth; ++n) {
    ConvergentTriple row{n, numerators.at(n), denominators.at(n), std::nullopt};
    if (row.B != 0) {
      row.x = BigRational(row.A / row.B);
    } else {
      table.zero_denominator_at.push_back(n);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::vector<BigRational> casoratian(const GcfProblem& problem, long upto) {
  const Trajectory numerators = numerator_trajectory(problem, upto);
  const Trajectory denominators = denominator_trajectory(problem, upto);
  std::vector<BigRational> w;
  w.reserve(static_cast<std::size_t>(upto) + 1);
  for (long n = 0; n <= upto; ++n) {
    w.emplace_back(numerators.at(n) * denominators.at(n - 1) - numerators.at(n - 1) * denominators.at(n));
  }
  return w;
}

}  // namespace gcf_forge
