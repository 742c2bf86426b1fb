#pragma once

// The reciprocal series induced by a coupling (c, d):
//   t_k = prod_{j=1..k} c(j) / prod_{j=1..k+1} d(j),   S = sum_{k>=0} t_k,
// with convergents x_n = 1 / (t_0 + ... + t_n) when b0 = d(1).

#include <optional>
#include <vector>

#include "gcf_forge/factorize.hpp"
#include "gcf_forge/numerics.hpp"
#include "gcf_forge/poly.hpp"

namespace gcf_forge {

/// Sequential exact generator of t_0, t_1, ...; one multiplication per
/// running product per step.
class TermStream {
 public:
  /// Throws ZeroDenominatorFactor if d(j) = 0 for some integer j >= 1.
  explicit TermStream(Coupling coupling);

  long index() const { return k_; }
  BigRational current() const { return BigRational(numerator_ / denominator_); }
  /// prod_{j=1..k} c(j)
  const BigRational& numerator_product() const { return numerator_; }
  /// prod_{j=1..k+1} d(j)
  const BigRational& denominator_product() const { return denominator_; }

  void advance();

 private:
  Coupling coupling_;
  long k_ = 0;
  BigRational numerator_ = 1;
  BigRational denominator_;
};

std::vector<BigRational> terms(const Coupling& coupling, long count);

/// S_n = t_0 + ... + t_n for n = 0..count-1.
std::vector<BigRational> partial_sums(const Coupling& coupling, long count);

enum class Convergence { Convergent, Divergent, Inconclusive };

const char* to_string(Convergence classification);

/// R(k) = t_{k+1} / t_k = c(k+1) / d(k+2) as an exact rational function.
struct RatioCertificate {
  Polynomial numerator;    // c(k+1)
  Polynomial denominator;  // d(k+2)
  /// lim |R(k)|; nullopt encodes an infinite limit.
  std::optional<BigRational> rho;
  Convergence classification = Convergence::Inconclusive;

  /// Throws DivisionByZero at a pole.
  BigRational at(long k) const;

  friend bool operator==(const RatioCertificate&, const RatioCertificate&) = default;
};

RatioCertificate ratio_certificate(const Coupling& coupling);

/// Smallest K >= 0 such that |R(k)| <= threshold for all integers k >= K.
/// Requires threshold > rho (finite).
long certified_ratio_index(const RatioCertificate& certificate, const BigRational& threshold);

struct SeriesSum {
  PrecisionReal value;
  long terms_used = 0;
  BigRational partial_sum;   // exact sum of the terms used
  BigRational tail_bound;    // rigorous bound on |S - partial_sum|
  long certified_from = 0;   // K with |R(k)| <= (rho + 1) / 2 for k >= K
};

/// Returns S~ with |S~ - S| <= 10^-digits. Throws NotConvergent unless rho < 1.
SeriesSum sum_to_precision(const Coupling& coupling, int digits);

/// sum_{m>=1} z^m / (m^2 C(2m, m)) to within 10^-digits. Throws OutOfDomain
/// unless 0 <= z < 4.
PrecisionReal central_binomial_sum(const BigRational& z, int digits);

}  // namespace gcf_forge
