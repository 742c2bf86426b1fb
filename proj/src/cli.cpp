#include "gcf_forge/cli.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gcf_forge/problem_file.hpp"
#include "gcf_forge/report_json.hpp"

namespace gcf_forge {

int exit_code_for(Verdict verdict) {
  switch (verdict) {
    case Verdict::Verified: return kExitOk;
    case Verdict::RefutedAtDepth: return kExitRefuted;
    case Verdict::Inconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

int exit_code_for(ErrorCode code) { return is_input_error(code) ? kExitInputError : kExitPrecondition; }

namespace {

struct Options {
  std::string file;
  long depth = 256;
  int digits = 30;
  bool exact = false;
  std::string json_path;
};

std::string preview(const BigRational& q, int digits) {
  return rational_to_real(q, working_precision_bits(digits)).to_decimal(digits);
}

std::string describe_coupling(const Coupling& coupling) {
  return "c = " + coupling.c.to_string() + "; d = " + coupling.d.to_string();
}

std::string describe_ratio(const RatioCertificate& ratio) {
  return "R(k) = (" + ratio.numerator.to_string("k") + ")/(" + ratio.denominator.to_string("k") +
         "), rho = " + (ratio.rho ? ratio.rho->get_str() : std::string("infinity")) + " (" +
         to_string(ratio.classification) + ")";
}

int cmd_eval(const Options& options, std::ostream& out, std::ostream& err) {
  const GcfProblem problem = load_problem_file(options.file);
  if (options.depth < 0) throw Error(ErrorCode::Precondition, "--depth must be nonnegative");
  const ConvergentTable table = convergents(problem, options.depth);
  out << "n\tA_n\tB_n\tx_n\n";
  for (const auto& row : table.rows) {
    out << row.n << '\t';
    if (options.exact) {
      out << row.A.get_str() << '\t' << row.B.get_str() << '\t' << (row.x ? row.x->get_str() : "undefined");
    } else {
      out << preview(row.A, 6) << '\t' << preview(row.B, 6) << '\t'
          << (row.x ? preview(*row.x, options.digits) : "undefined");
    }
    out << '\n';
  }
  for (long n : table.zero_denominator_at) err << "ZeroDenominatorConvergent: B_" << n << " = 0\n";
  return kExitOk;
}

int cmd_factorize(const Options& options, std::ostream& out) {
  const GcfProblem problem = load_problem_file(options.file);
  const auto couplings = find_couplings(problem.a, problem.b);
  if (couplings.empty()) {
    out << "no coupling within linear-split search space\n";
    return kExitOk;
  }
  for (const auto& coupling : couplings) {
    out << describe_coupling(coupling) << "  ["
        << (verify_coupling(problem.a, problem.b, coupling) ? "verified" : "FAILED") << "; b0 = d(1): "
        << (check_boundary_selection(problem, coupling) ? "yes" : "no") << "]\n";
  }
  return kExitOk;
}

int cmd_series(const Options& options, std::ostream& out, std::ostream& err) {
  const GcfProblem problem = load_problem_file(options.file);
  validate_problem(problem);
  const auto couplings = find_couplings(problem.a, problem.b);
  if (couplings.empty()) {
    out << "no coupling within linear-split search space\n";
    return kExitInconclusive;
  }
  auto chosen = std::find_if(couplings.begin(), couplings.end(),
                             [&](const Coupling& c) { return check_boundary_selection(problem, c); });
  if (chosen == couplings.end()) chosen = couplings.begin();
  const Coupling& coupling = *chosen;
  out << "coupling: " << describe_coupling(coupling) << '\n';
  const RatioCertificate ratio = ratio_certificate(coupling);
  out << "ratio: " << describe_ratio(ratio) << '\n';

  const long shown = std::min<long>(options.depth + 1, 8);
  const auto t = terms(coupling, shown);
  const auto s = partial_sums(coupling, shown);
  for (long k = 0; k < shown; ++k) {
    const auto i = static_cast<std::size_t>(k);
    out << "t_" << k << " = " << t[i].get_str() << "\tS_" << k << " = " << s[i].get_str() << '\n';
  }
  if (ratio.classification != Convergence::Convergent) {
    err << "NotConvergent: series value not certified\n";
    return kExitPrecondition;
  }
  const SeriesSum sum = sum_to_precision(coupling, options.digits);
  out << "sum: " << sum.value.to_decimal(options.digits + 5) << "  (terms used: " << sum.terms_used
      << ", |error| <= 1e-" << options.digits << ")\n";
  out << "reciprocal: " << (PrecisionReal(1, sum.value.precision_bits()) / sum.value).to_decimal(options.digits + 5)
      << '\n';
  return kExitOk;
}

void print_report(const VerificationReport& report, std::ostream& out) {
  const int shown = (report.problem.target ? report.digits_matched : report.digits_requested) + 5;
  const auto depth_line = [&](long value) { return std::to_string(value) + "/" + std::to_string(report.depth); };
  out << "problem: " << report.problem.name << '\n';
  if (report.coupling) out << "coupling: " << describe_coupling(*report.coupling) << '\n';
  for (const auto& c : report.alternative_couplings) out << "alternative coupling: " << describe_coupling(c) << '\n';
  out << "boundary_rule_holds: " << (report.boundary_rule_holds ? "true" : "false") << '\n';
  out << "exact_identity_depth: " << depth_line(report.exact_identity_depth) << '\n';
  out << "numerator_product_depth: " << depth_line(report.numerator_product_depth) << '\n';
  out << "casoratian_depth: " << depth_line(report.casoratian_depth) << '\n';
  if (report.ratio) out << "ratio: " << describe_ratio(*report.ratio) << '\n';
  if (report.terms_used > 0) out << "terms_used: " << report.terms_used << '\n';
  if (report.series_value) out << "series_value: " << report.series_value->to_decimal(shown) << '\n';
  if (report.gcf_value) out << "gcf_value: " << report.gcf_value->to_decimal(shown) << '\n';
  if (report.target_value) out << "target_value: " << report.target_value->to_decimal(shown) << '\n';
  out << "digits_matched: " << report.digits_matched << '\n';
  out << "monotone_convergents: " << (report.monotone_convergents ? "true" : "false") << '\n';
  out << "cauchy_digits: " << report.cauchy_digits << '\n';
  for (const auto& note : report.notes) out << "note: " << note << '\n';
  out << "verdict: " << to_string(report.verdict) << '\n';
}

int cmd_verify(const Options& options, std::ostream& out) {
  const GcfProblem problem = load_problem_file(options.file);
  const VerificationReport report = verify_conjecture(problem, options.digits, options.depth);
  print_report(report, out);
  if (!options.json_path.empty()) {
    std::ofstream file(options.json_path);
    if (!file) throw Error(ErrorCode::InvalidInput, "cannot write '" + options.json_path + "'");
    file << report_to_json(report).dump(2) << '\n';
  }
  return exit_code_for(report.verdict);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verify polynomial continued fraction conjectures", "gcf-forge"};
  app.require_subcommand(1);
  Options options;

  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", options.file, "problem file (JSON)")->required();
  };
  auto* eval = app.add_subcommand("eval", "print the convergent table");
  add_file(eval);
  eval->add_option("--depth", options.depth, "last index n")->capture_default_str();
  eval->add_option("--digits", options.digits, "significant digits in decimal previews")->check(CLI::PositiveNumber);
  eval->add_flag("--exact", options.exact, "print exact A_n, B_n, x_n");

  auto* factorize = app.add_subcommand("factorize", "search couplings c, d");
  add_file(factorize);

  auto* series = app.add_subcommand("series", "ratio certificate and certified series value");
  add_file(series);
  series->add_option("--depth", options.depth, "terms to list are min(depth + 1, 8)");
  series->add_option("--digits", options.digits, "decimal digits of accuracy")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "run the full verification pipeline");
  add_file(verify);
  verify->add_option("--depth", options.depth, "exact identity depth")->capture_default_str();
  verify->add_option("--digits", options.digits, "decimal digits to confirm")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--json", options.json_path, "write the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream usage_out;
    std::ostringstream usage_err;
    const int code = app.exit(e, usage_out, usage_err);
    out << usage_out.str();
    err << usage_err.str();
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (eval->parsed()) return cmd_eval(options, out, err);
    if (factorize->parsed()) return cmd_factorize(options, out);
    if (series->parsed()) return cmd_series(options, out, err);
    return cmd_verify(options, out);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code_for(e.code());
  }
}

}  // namespace gcf_forge
