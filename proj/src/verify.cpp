#include "gcf_forge/verify.hpp"

#include <algorithm>
#include <cmath>

#include "gcf_forge/error.hpp"

namespace gcf_forge {

const char* to_string(Frame frame) { return frame == Frame::Numerator ? "numerator" : "denominator"; }

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Verified: return "verified";
    case Verdict::RefutedAtDepth: return "refuted-at-depth";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

AuxiliaryTrace auxiliary_trace(const GcfProblem& problem, const Coupling& coupling, Frame frame,
                               long depth) {
  const Trajectory y = frame == Frame::Numerator ? numerator_trajectory(problem, depth)
                                                 : denominator_trajectory(problem, depth);
  AuxiliaryTrace trace{frame, {}};
  trace.w.reserve(static_cast<std::size_t>(depth) + 1);
  for (long k = 0; k <= depth; ++k) {
    trace.w.emplace_back(y.at(k) - evaluate(coupling.d, k + 1) * y.at(k - 1));
  }
  return trace;
}

bool check_boundary_selection(const GcfProblem& problem, const Coupling& coupling) {
  return problem.b0 == evaluate(coupling.d, 1);
}

long check_numerator_product(const GcfProblem& problem, const Coupling& coupling, long depth) {
  const Trajectory numerators = numerator_trajectory(problem, depth);
  BigRational product = evaluate(coupling.d, 1);
  for (long m = 0; m <= depth; ++m) {
    if (numerators.at(m) != product) return m - 1;
    product *= evaluate(coupling.d, m + 2);
  }
  return depth;
}

long check_reciprocal_identity(const GcfProblem& problem, const Coupling& coupling, long depth) {
  if (!check_boundary_selection(problem, coupling)) {
    throw Error(ErrorCode::Precondition, "reciprocal identity requires b0 = d(1)");
  }
  const ConvergentTable table = convergents(problem, depth);
  const std::vector<BigRational> sums = partial_sums(coupling, depth + 1);
  for (long n = 0; n <= depth; ++n) {
    const auto& x = table.rows[static_cast<std::size_t>(n)].x;
    if (!x) {
      throw Error(ErrorCode::ZeroDenominatorConvergent, "B_" + std::to_string(n) + " = 0");
    }
    if (*x * sums[static_cast<std::size_t>(n)] != 1) return n - 1;
  }
  return depth;
}

long check_casoratian_law(const GcfProblem& problem, long depth) {
  const std::vector<BigRational> w = casoratian(problem, depth);
  if (w.front() != -1) return -1;
  for (long n = 1; n <= depth; ++n) {
    const auto i = static_cast<std::size_t>(n);
    if (w[i] == 0 || w[i] != -problem.a(BigRational(n)) * w[i - 1]) return n - 1;
  }
  return depth;
}

namespace {

// Leading digits on which two convergents agree, judged at enough precision for `cap` digits.
int convergent_agreement(const BigRational& x, const BigRational& y, int cap) {
  const mpfr_prec_t bits = working_precision_bits(cap);
  return matched_digits(rational_to_real(x, bits), rational_to_real(y, bits), cap);
}

}  // namespace

PincherleEvidence pincherle_evidence(const GcfProblem& problem, const Coupling& coupling, long depth,
                                     int digits) {
  if (ratio_certificate(coupling).classification != Convergence::Convergent) {
    throw Error(ErrorCode::Precondition, "Pincherle evidence requires a convergent ratio certificate");
  }
  const ConvergentTable table = convergents(problem, depth);
  PincherleEvidence evidence;
  evidence.monotone = table.zero_denominator_at.empty();
  for (long n = 1; evidence.monotone && n <= depth; ++n) {
    const auto i = static_cast<std::size_t>(n);
    evidence.monotone = *table.rows[i].x < *table.rows[i - 1].x;
  }
  const auto& last = table.rows.back().x;
  const auto& middle = table.rows[static_cast<std::size_t>(depth / 2)].x;
  if (last && middle) evidence.cauchy_digits = convergent_agreement(*last, *middle, digits);
  return evidence;
}

namespace {

// Direct convergent estimate when the series route is unavailable.
void numerical_fallback(VerificationReport& report) {
  const ConvergentTable table = convergents(report.problem, report.depth);
  const auto& last = table.rows.back().x;
  const auto& middle = table.rows[static_cast<std::size_t>(report.depth / 2)].x;
  if (!last) {
    report.notes.push_back("B_" + std::to_string(report.depth) + " = 0; no convergent estimate");
    return;
  }
  const mpfr_prec_t bits = report.precision_bits;
  report.gcf_value = rational_to_real(*last, bits);
  if (!report.gcf_value->is_zero()) {
    report.series_value = PrecisionReal(1, bits) / *report.gcf_value;
  }
  report.cauchy_digits = middle ? convergent_agreement(*last, *middle, report.digits_requested) : 0;
  if (report.target_value) {
    report.digits_matched = matched_digits(*report.gcf_value, *report.target_value, report.cauchy_digits);
  }
  report.notes.push_back("numerical estimate from x_" + std::to_string(report.depth) + ", agreeing with x_" +
                         std::to_string(report.depth / 2) + " to " + std::to_string(report.cauchy_digits) +
                         " digits");
}

// Digits of 1/S~ guaranteed by |S~ - S| <= 10^-digits: the reciprocal scales errors by ~1/S^2.
int reciprocal_certified_digits(const PrecisionReal& sum, int digits) {
  const double magnitude = std::fabs(sum.to_double());
  const int loss = magnitude >= 1 ? 0 : static_cast<int>(std::ceil(-2 * std::log10(magnitude)));
  return std::max(digits - loss - 1, 0);
}

}  // namespace

VerificationReport verify_conjecture(const GcfProblem& problem, int digits, long depth) {
  if (digits < 1) throw Error(ErrorCode::Precondition, "digits must be at least 1");
  if (depth < 4) throw Error(ErrorCode::Precondition, "depth must be at least 4");
  validate_problem(problem);

  VerificationReport report;
  report.problem = problem;
  report.digits_requested = digits;
  report.depth = depth;
  report.precision_bits = working_precision_bits(digits);
  if (problem.target) report.target_value = eval_const_expr(*problem.target, report.precision_bits);

  std::vector<Coupling> couplings = find_couplings(problem.a, problem.b);
  if (couplings.empty()) {
    report.notes.push_back("no coupling within linear-split search space");
    numerical_fallback(report);
    return report;
  }
  const auto selected = std::find_if(couplings.begin(), couplings.end(), [&](const Coupling& c) {
    return check_boundary_selection(problem, c);
  });
  report.boundary_rule_holds = selected != couplings.end();
  report.coupling = report.boundary_rule_holds ? *selected : couplings.front();
  for (const auto& c : couplings) {
    if (c != *report.coupling) report.alternative_couplings.push_back(c);
  }
  report.ratio = ratio_certificate(*report.coupling);
  if (!report.boundary_rule_holds) {
    report.notes.push_back("no coupling satisfies the boundary rule b0 = d(1)");
    numerical_fallback(report);
    return report;
  }

  const Coupling& coupling = *report.coupling;
  report.exact_identity_depth = check_reciprocal_identity(problem, coupling, depth);
  report.numerator_product_depth = check_numerator_product(problem, coupling, depth);
  report.casoratian_depth = check_casoratian_law(problem, depth);
  const bool structural = report.exact_identity_depth == depth &&
                          report.numerator_product_depth == depth && report.casoratian_depth == depth;

  if (report.ratio->classification != Convergence::Convergent) {
    report.notes.push_back(std::string("ratio test ") + to_string(report.ratio->classification) +
                           "; series value not certified");
    numerical_fallback(report);
    if (!structural) report.verdict = Verdict::RefutedAtDepth;
    return report;
  }

  const PincherleEvidence evidence =
      pincherle_evidence(problem, coupling, depth, digits + static_cast<int>(depth));
  report.monotone_convergents = evidence.monotone;
  report.cauchy_digits = evidence.cauchy_digits;

  const int sum_digits = std::max(digits, evidence.cauchy_digits) + 5;
  SeriesSum series = sum_to_precision(coupling, sum_digits);
  report.terms_used = series.terms_used;
  report.precision_bits = series.value.precision_bits();
  report.gcf_value = PrecisionReal(1, report.precision_bits) / series.value;
  report.series_value = std::move(series.value);

  if (!structural) {
    report.verdict = Verdict::RefutedAtDepth;
    report.notes.push_back("exact structural identity failed below the requested depth");
  }
  if (!problem.target) {
    report.notes.push_back("no target constant to compare against");
    return report;
  }
  report.target_value = eval_const_expr(*problem.target, report.precision_bits);
  report.digits_matched = matched_digits(*report.gcf_value, *report.target_value,
                                         reciprocal_certified_digits(*report.series_value, sum_digits));
  if (structural) {
    report.verdict = report.digits_matched >= digits ? Verdict::Verified : Verdict::RefutedAtDepth;
  }
  return report;
}

}  // namespace gcf_forge
