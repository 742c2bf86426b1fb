#include "gcf_forge/report_json.hpp"

#include "gcf_forge/error.hpp"

namespace gcf_forge {

using nlohmann::json;

json polynomial_to_json(const Polynomial& p) {
  json coefficients = json::array();
  for (const auto& a : p.coefficients()) coefficients.push_back(to_fraction_string(a));
  return {{"text", p.to_string()}, {"coefficients", coefficients}};
}

Polynomial polynomial_from_json(const json& j) {
  std::vector<BigRational> coefficients;
  for (const auto& a : j.at("coefficients")) coefficients.push_back(parse_rational(a.get<std::string>()));
  return Polynomial(std::move(coefficients));
}

json real_to_json(const PrecisionReal& x) {
  return {{"decimal", x.to_round_trip_string()}, {"precision_bits", x.precision_bits()}};
}

PrecisionReal real_from_json(const json& j) {
  return PrecisionReal::from_string(j.at("decimal").get<std::string>(),
                                    j.at("precision_bits").get<mpfr_prec_t>());
}

namespace {

template <class T, class F>
json optional_to_json(const std::optional<T>& value, F&& convert) {
  return value ? convert(*value) : json(nullptr);
}

template <class T, class F>
std::optional<T> optional_from_json(const json& j, F&& convert) {
  if (j.is_null()) return std::nullopt;
  return convert(j);
}

json coupling_to_json(const Coupling& coupling) {
  return {{"c", polynomial_to_json(coupling.c)}, {"d", polynomial_to_json(coupling.d)}};
}

Coupling coupling_from_json(const json& j) {
  return {polynomial_from_json(j.at("c")), polynomial_from_json(j.at("d"))};
}

std::string rho_text(const std::optional<BigRational>& rho) {
  return rho ? to_fraction_string(*rho) : "infinity";
}

std::optional<BigRational> rho_from_text(const std::string& text) {
  if (text == "infinity") return std::nullopt;
  return parse_rational(text);
}

Convergence convergence_from_text(const std::string& text) {
  for (auto c : {Convergence::Convergent, Convergence::Divergent, Convergence::Inconclusive}) {
    if (text == to_string(c)) return c;
  }
  throw Error(ErrorCode::InvalidInput, "unknown classification '" + text + "'");
}

Verdict verdict_from_text(const std::string& text) {
  for (auto v : {Verdict::Verified, Verdict::RefutedAtDepth, Verdict::Inconclusive}) {
    if (text == to_string(v)) return v;
  }
  throw Error(ErrorCode::InvalidInput, "unknown verdict '" + text + "'");
}

json ratio_to_json(const RatioCertificate& ratio) {
  return {{"numerator", polynomial_to_json(ratio.numerator)},
          {"denominator", polynomial_to_json(ratio.denominator)},
          {"rho", rho_text(ratio.rho)},
          {"classification", to_string(ratio.classification)}};
}

RatioCertificate ratio_from_json(const json& j) {
  return {polynomial_from_json(j.at("numerator")), polynomial_from_json(j.at("denominator")),
          rho_from_text(j.at("rho").get<std::string>()),
          convergence_from_text(j.at("classification").get<std::string>())};
}

json problem_to_json(const GcfProblem& problem) {
  return {{"name", problem.name},
          {"b0", to_fraction_string(problem.b0)},
          {"a", polynomial_to_json(problem.a)},
          {"b", polynomial_to_json(problem.b)},
          {"target", optional_to_json(problem.target, [](const ConstantExpr& e) { return json(e.to_string()); })}};
}

GcfProblem problem_from_json(const json& j) {
  GcfProblem problem;
  problem.name = j.at("name").get<std::string>();
  problem.b0 = parse_rational(j.at("b0").get<std::string>());
  problem.a = polynomial_from_json(j.at("a"));
  problem.b = polynomial_from_json(j.at("b"));
  problem.target = optional_from_json<ConstantExpr>(
      j.at("target"), [](const json& t) { return parse_const_expr(t.get<std::string>()); });
  return problem;
}

}  // namespace

json report_to_json(const VerificationReport& report) {
  json alternatives = json::array();
  for (const auto& c : report.alternative_couplings) alternatives.push_back(coupling_to_json(c));
  return {
      {"problem", problem_to_json(report.problem)},
      {"digits_requested", report.digits_requested},
      {"depth", report.depth},
      {"precision_bits", report.precision_bits},
      {"coupling", optional_to_json(report.coupling, coupling_to_json)},
      {"alternative_couplings", alternatives},
      {"boundary_rule_holds", report.boundary_rule_holds},
      {"exact_identity_depth", report.exact_identity_depth},
      {"numerator_product_depth", report.numerator_product_depth},
      {"casoratian_depth", report.casoratian_depth},
      {"ratio", optional_to_json(report.ratio, ratio_to_json)},
      {"rho", report.ratio ? json(rho_text(report.ratio->rho)) : json(nullptr)},
      {"terms_used", report.terms_used},
      {"series_value", optional_to_json(report.series_value, real_to_json)},
      {"gcf_value", optional_to_json(report.gcf_value, real_to_json)},
      {"target_value", optional_to_json(report.target_value, real_to_json)},
      {"digits_matched", report.digits_matched},
      {"monotone_convergents", report.monotone_convergents},
      {"cauchy_digits", report.cauchy_digits},
      {"verdict", to_string(report.verdict)},
      {"notes", report.notes},
  };
}

VerificationReport report_from_json(const json& j) {
  try {
    VerificationReport report;
    report.problem = problem_from_json(j.at("problem"));
    report.digits_requested = j.at("digits_requested").get<int>();
    report.depth = j.at("depth").get<long>();
    report.precision_bits = j.at("precision_bits").get<mpfr_prec_t>();
    report.coupling = optional_from_json<Coupling>(j.at("coupling"), coupling_from_json);
    for (const auto& c : j.at("alternative_couplings")) report.alternative_couplings.push_back(coupling_from_json(c));
    report.boundary_rule_holds = j.at("boundary_rule_holds").get<bool>();
    report.exact_identity_depth = j.at("exact_identity_depth").get<long>();
    report.numerator_product_depth = j.at("numerator_product_depth").get<long>();
    report.casoratian_depth = j.at("casoratian_depth").get<long>();
    report.ratio = optional_from_json<RatioCertificate>(j.at("ratio"), ratio_from_json);
    report.terms_used = j.at("terms_used").get<long>();
    report.series_value = optional_from_json<PrecisionReal>(j.at("series_value"), real_from_json);
    report.gcf_value = optional_from_json<PrecisionReal>(j.at("gcf_value"), real_from_json);
    report.target_value = optional_from_json<PrecisionReal>(j.at("target_value"), real_from_json);
    report.digits_matched = j.at("digits_matched").get<int>();
    report.monotone_convergents = j.at("monotone_convergents").get<bool>();
    report.cauchy_digits = j.at("cauchy_digits").get<int>();
    report.verdict = verdict_from_text(j.at("verdict").get<std::string>());
    report.notes = j.at("notes").get<std::vector<std::string>>();
    return report;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed report: ") + e.what());
  }
}

}  // namespace gcf_forge
