#pragma once

// Convergents of b0 + K(a(n) / b(n)) via the three-term recurrence
//   y_n = b(n) y_{n-1} + a(n) y_{n-2},  n >= 1,
// with numerator frame (A_{-1}, A_0) = (1, b0) and denominator frame
// (B_{-1}, B_0) = (0, 1).

#include <optional>
#include <string>
#include <vector>

#include "gcf_forge/expr.hpp"
#include "gcf_forge/numerics.hpp"
#include "gcf_forge/poly.hpp"

namespace gcf_forge {

inline constexpr int kDefaultDepth = 512;

struct GcfProblem {
  std::string name;
  BigRational b0;
  Polynomial a;  // partial numerators a_n = a(n), n >= 1
  Polynomial b;  // partial denominators b_n = b(n), n >= 1
  std::optional<ConstantExpr> target;

  friend bool operator==(const GcfProblem&, const GcfProblem&) = default;
};

/// Throws ZeroPartialNumerator if a = 0, Precondition if a has an integer root >= 1.
void validate_problem(const GcfProblem& problem);

/// One solution of the recurrence, indexed from -1.
class Trajectory {
 public:
  Trajectory(BigRational before_start, std::vector<BigRational> values)
      : before_start_(std::move(before_start)), values_(std::move(values)) {}

  /// y_n for -1 <= n <= last().
  const BigRational& at(long n) const;
  long last() const { return static_cast<long>(values_.size()) - 1; }

 private:
  BigRational before_start_;
  std::vector<BigRational> values_;  // y_0 .. y_last
};

/// Iterates the recurrence of `problem` from an arbitrary frame (y_{-1}, y_0) up to y_depth.
Trajectory solve_recurrence(const GcfProblem& problem, const BigRational& y_minus1,
                            const BigRational& y0, long depth);

Trajectory numerator_trajectory(const GcfProblem& problem, long depth);
Trajectory denominator_trajectory(const GcfProblem& problem, long depth);

struct ConvergentTriple {
  long n = 0;
  BigRational A;
  BigRational B;
  std::optional<BigRational> x;  // A / B, absent when B = 0

  friend bool operator==(const ConvergentTriple&, const ConvergentTriple&) = default;
};

struct ConvergentTable {
  std::vector<ConvergentTriple> rows;       // n = 0..depth
  std::vector<long> zero_denominator_at;    // indices where B_n = 0
};

ConvergentTable convergents(const GcfProblem& problem, long depth);

/// W_n = A_n B_{n-1} - A_{n-1} B_n for n = 0..upto.
std::vector<BigRational> casoratian(const GcfProblem& problem, long upto);

}  // namespace gcf_forge
