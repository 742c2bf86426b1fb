// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <unistd.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "../oracles.hpp"
#include "gcf_forge/cli.hpp"
#include "gcf_forge/factorize.hpp"
#include "gcf_forge/gcf.hpp"
#include "gcf_forge/series.hpp"
#include "gcf_forge/verify.hpp"

using namespace gcf_forge;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out.precision(3);
  out << s << " s";
  return out.str();
}

Polynomial P(const char* text) { return parse_polynomial(text); }

// 1. x_n * S_n = 1 exactly for n <= 200 in under 5 s.
Outcome exact_reciprocal_identity() {
  const auto start = Clock::now();
  const GcfProblem problem = oracle::paper_problem();
  const ConvergentTable table = convergents(problem, 200);
  const auto sums = partial_sums(oracle::paper_coupling(), 201);
  long failures = 0;
  for (long n = 0; n <= 200; ++n) {
    const auto& x = table.rows[static_cast<std::size_t>(n)].x;
    if (!x || *x * sums[static_cast<std::size_t>(n)] != 1) ++failures;
  }
  const double elapsed = seconds_since(start);
  return {failures == 0 && elapsed < 5.0,
          std::to_string(201 - failures) + "/201 exact identities, " + fmt_seconds(elapsed) + " (limit 5 s)"};
}

// 2. The coupling search returns exactly c = n^2, d = 2n^2 - n.
Outcome coupling_recovery() {
  const GcfProblem problem = oracle::paper_problem();
  const auto couplings = find_couplings(problem.a, problem.b);
  const bool unique = couplings.size() == 1 && couplings[0].c == P("n^2") && couplings[0].d == P("2*n^2 - n");
  const bool identities = unique && verify_coupling(problem.a, problem.b, couplings[0]);
  std::string found;
  for (const auto& c : couplings) found += "[c = " + c.c.to_string() + "; d = " + c.d.to_string() + "] ";
  return {unique && identities, std::to_string(couplings.size()) + " coupling(s): " + found};
}

// 3. `verify --digits 50` exits 0 with >= 50 matched digits, <= 400 terms, under 10 s.
Outcome constant_verification() {
  const auto dir = std::filesystem::temp_directory_path() / ("gcf_forge_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const std::string problem_path = (dir / "paper.json").string();
  const std::string report_path = (dir / "report.json").string();
  std::ofstream(problem_path) << R"j({"name": "eight_over_pi_squared", "b0": "1", "a": "-(2*n^4 - n^3)",
                                    "b": "3*n^2 + 3*n + 1", "target": "8/pi^2"})j";
  const std::vector<std::string> args = {"gcf-forge", "verify", problem_path, "--digits", "50", "--json", report_path};
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());

  const auto start = Clock::now();
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  const double elapsed = seconds_since(start);

  std::ifstream in(report_path);
  const nlohmann::json report = nlohmann::json::parse(in, nullptr, false);
  std::filesystem::remove_all(dir);
  if (report.is_discarded()) return {false, "no JSON report written; exit " + std::to_string(code)};
  const int digits = report.at("digits_matched").get<int>();
  const long terms_used = report.at("terms_used").get<long>();
  const bool ok = code == 0 && report.at("verdict") == "verified" && digits >= 50 && terms_used <= 400 &&
                  elapsed < 10.0;
  return {ok, "exit " + std::to_string(code) + ", digits_matched " + std::to_string(digits) + ", terms " +
                  std::to_string(terms_used) + ", " + fmt_seconds(elapsed) + " (limit 10 s)"};
}

// 4. R(k) = (k+1)^2 / ((k+2)(2k+3)), rho = 1/2, and t_{k+1}/t_k = R(k) for k <= 100.
Outcome ratio_certificate_check() {
  const RatioCertificate cert = ratio_certificate(oracle::paper_coupling());
  const bool shape = cert.numerator == P("(n + 1)^2") && cert.denominator == P("(n + 2)*(2*n + 3)");
  const bool rho = cert.rho && *cert.rho == make_rational(1, 2) && cert.classification == Convergence::Convergent;
  const auto t = terms(oracle::paper_coupling(), 102);
  long matches = 0;
  for (long k = 0; k <= 100; ++k) {
    const auto i = static_cast<std::size_t>(k);
    if (t[i + 1] / t[i] == cert.at(k)) ++matches;
  }
  return {shape && rho && matches == 101,
          "R(k) = (" + cert.numerator.to_string("k") + ")/(" + cert.denominator.to_string("k") + "), rho = " +
              (cert.rho ? cert.rho->get_str() : std::string("infinity")) + ", " + std::to_string(matches) +
              "/101 term ratios exact"};
}

// 5. t_k = 2^(k+1) (k!)^2 / (2k+2)! for k <= 100 against an independent factorial oracle.
Outcome closed_form_terms() {
  const auto t = terms(oracle::paper_coupling(), 101);
  long matches = 0;
  for (unsigned long k = 0; k <= 100; ++k) {
    if (t[k] == oracle::closed_form_term(k)) ++matches;
  }
  return {matches == 101, std::to_string(matches) + "/101 terms equal the closed form"};
}

// 6. central_binomial_sum(2, 50) = pi^2/8 and central_binomial_sum(1, 30) = 2 (pi/6)^2.
Outcome central_binomial_cross_check() {
  const BigRational pi = oracle::pi(120);
  const mpfr_prec_t bits = 512;
  const PrecisionReal pi2_over_8 = rational_to_real(BigRational(pi * pi / 8), bits);
  const PrecisionReal pi2_over_18 = rational_to_real(BigRational(2 * (pi / 6) * (pi / 6)), bits);
  const PrecisionReal z2 = central_binomial_sum(2, 50);
  const PrecisionReal z1 = central_binomial_sum(1, 30);
  const bool ok2 = agree_to_digits(z2, pi2_over_8, 50);
  const bool ok1 = agree_to_digits(z1, pi2_over_18, 30);
  return {ok2 && ok1, std::string("z=2 vs pi^2/8 to 50 digits: ") + (ok2 ? "yes" : "no") +
                          " (matched " + std::to_string(matched_digits(z2, pi2_over_8, 60)) + "), " +
                          "z=1 vs 2(pi/6)^2 to 30 digits: " + (ok1 ? "yes" : "no") + " (matched " +
                          std::to_string(matched_digits(z1, pi2_over_18, 40)) + ")"};
}

// 7. W_0 = -1 and W_n = -a(n) W_{n-1} exactly for n <= 100.
Outcome casoratian_law() {
  const GcfProblem problem = oracle::paper_problem();
  const auto w = casoratian(problem, 100);
  long holds = 0;
  for (long n = 1; n <= 100; ++n) {
    const auto i = static_cast<std::size_t>(n);
    if (w[i] == -problem.a(BigRational(n)) * w[i - 1]) ++holds;
  }
  return {w[0] == -1 && holds == 100, "W_0 = " + w[0].get_str() + ", law holds for " + std::to_string(holds) + "/100"};
}

// 8. Numerator trace is zero and A_n = prod d(j); denominator trace w_0 = 1, w_k = c(k) w_{k-1}.
Outcome minimal_solution_collapse() {
  const GcfProblem problem = oracle::paper_problem();
  const Coupling coupling = oracle::paper_coupling();
  const auto numerator = auxiliary_trace(problem, coupling, Frame::Numerator, 100);
  const bool zero_trace = std::all_of(numerator.w.begin(), numerator.w.end(), [](const BigRational& w) { return w == 0; });

  const Trajectory a = numerator_trajectory(problem, 100);
  BigRational product = 1;
  long product_matches = 0;
  for (long n = 0; n <= 100; ++n) {
    product *= evaluate(coupling.d, n + 1);
    if (a.at(n) == product) ++product_matches;
  }

  const auto denominator = auxiliary_trace(problem, coupling, Frame::Denominator, 100);
  long propagation = 0;
  for (long k = 1; k <= 100; ++k) {
    const auto i = static_cast<std::size_t>(k);
    if (denominator.w[i] == evaluate(coupling.c, k) * denominator.w[i - 1]) ++propagation;
  }
  const bool ok = zero_trace && product_matches == 101 && denominator.w[0] == 1 && propagation == 100;
  return {ok, std::string("numerator trace zero: ") + (zero_trace ? "yes" : "no") + ", A_n product form " +
                  std::to_string(product_matches) + "/101, w_0 = " + denominator.w[0].get_str() +
                  ", propagation " + std::to_string(propagation) + "/100"};
}

// 9. x_n strictly decreasing for n <= 64; |x_65 - K| / |x_64 - K| within 0.05 of 1/2.
Outcome convergence_behavior() {
  const ConvergentTable table = convergents(oracle::paper_problem(), 65);
  bool decreasing = true;
  for (long n = 1; n <= 64; ++n) {
    const auto i = static_cast<std::size_t>(n);
    decreasing = decreasing && *table.rows[i].x < *table.rows[i - 1].x;
  }
  const BigRational pi = oracle::pi(100);
  const BigRational k_value = 8 / (pi * pi);
  const BigRational ratio = abs(*table.rows[65].x - k_value) / abs(*table.rows[64].x - k_value);
  const BigRational gap = abs(ratio - make_rational(1, 2));
  const bool ok = decreasing && gap <= make_rational(1, 20);
  std::ostringstream detail;
  detail << "strictly decreasing: " << (decreasing ? "yes" : "no") << ", error ratio at n = 64: "
         << ratio.get_d() << " (|ratio - 1/2| = " << gap.get_d() << ", limit 0.05)";
  return {ok, detail.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 exact reciprocal identity", exact_reciprocal_identity},
      {"AC2 coupling recovery", coupling_recovery},
      {"AC3 constant verification", constant_verification},
      {"AC4 ratio certificate", ratio_certificate_check},
      {"AC5 closed-form term reduction", closed_form_terms},
      {"AC6 central-binomial cross-check", central_binomial_cross_check},
      {"AC7 casoratian law", casoratian_law},
      {"AC8 minimal-solution collapse", minimal_solution_collapse},
      {"AC9 convergence behavior", convergence_behavior},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome outcome{false, ""};
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failed;
    std::cout << (outcome.pass ? "PASS  " : "FAIL  ") << name << "  --  " << outcome.detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " acceptance criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
