#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcf_forge/factorize.hpp"
#include "gcf_forge/gcf.hpp"
#include "gcf_forge/numerics.hpp"
#include "gcf_forge/series.hpp"

namespace gcf_forge {

enum class Frame { Numerator, Denominator };

const char* to_string(Frame frame);

/// w_k = y_k - d(k+1) y_{k-1} along one convergent frame, k = 0..depth.
struct AuxiliaryTrace {
  Frame frame = Frame::Numerator;
  std::vector<BigRational> w;
};

AuxiliaryTrace auxiliary_trace(const GcfProblem& problem, const Coupling& coupling, Frame frame,
                               long depth);

/// b0 = d(1): the numerator frame then lies in the kernel of the decoupling.
bool check_boundary_selection(const GcfProblem& problem, const Coupling& coupling);

/// Largest n <= depth with A_m = prod_{j=1..m+1} d(j) for all m <= n; -1 if n = 0 already fails.
long check_numerator_product(const GcfProblem& problem, const Coupling& coupling, long depth);

/// Largest n <= depth with x_n * S_n = 1 exactly for all m <= n; -1 if n = 0 fails.
/// Throws Precondition unless b0 = d(1).
long check_reciprocal_identity(const GcfProblem& problem, const Coupling& coupling, long depth);

/// Largest n <= depth with W_0 = -1 and W_m = -a(m) W_{m-1} != 0 for all 1 <= m <= n; -1 if W_0 fails.
long check_casoratian_law(const GcfProblem& problem, long depth);

struct PincherleEvidence {
  bool monotone = false;  // x_n strictly decreasing on 0..depth
  int cauchy_digits = 0;  // leading digits shared by x_depth and x_{depth/2}
};

/// Throws Precondition unless the coupling's ratio test is convergent.
PincherleEvidence pincherle_evidence(const GcfProblem& problem, const Coupling& coupling, long depth,
                                     int digits);

enum class Verdict { Verified, RefutedAtDepth, Inconclusive };

const char* to_string(Verdict verdict);

struct VerificationReport {
  GcfProblem problem;
  int digits_requested = 0;
  long depth = 0;
  mpfr_prec_t precision_bits = 0;

  std::optional<Coupling> coupling;
  std::vector<Coupling> alternative_couplings;
  bool boundary_rule_holds = false;
  long exact_identity_depth = -1;
  long numerator_product_depth = -1;
  long casoratian_depth = -1;

  std::optional<RatioCertificate> ratio;
  long terms_used = 0;
  std::optional<PrecisionReal> series_value;
  std::optional<PrecisionReal> gcf_value;
  std::optional<PrecisionReal> target_value;
  int digits_matched = 0;
  bool monotone_convergents = false;
  int cauchy_digits = 0;

  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::string> notes;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Runs the full pipeline: coupling search, boundary selection, exact
/// structural identities to `depth`, ratio certificate, certified summation
/// and target comparison. Requires digits >= 1 and depth >= 4.
VerificationReport verify_conjecture(const GcfProblem& problem, int digits, long depth);

}  // namespace gcf_forge
