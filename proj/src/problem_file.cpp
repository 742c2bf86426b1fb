#include "gcf_forge/problem_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "gcf_forge/error.hpp"

namespace gcf_forge {

namespace {

std::string text_field(const nlohmann::json& document, const std::string& key) {
  const auto& value = document.at(key);
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return value.dump();
  throw Error(ErrorCode::InvalidInput, "field '" + key + "' must be a string");
}

// Re-raises parser errors with the field name, keeping code and offset.
template <class F>
auto parse_field(const std::string& key, F&& parse) {
  try {
    return parse();
  } catch (const Error& e) {
    const std::string message = "in field '" + key + "': " + e.what();
    if (e.offset()) throw Error(e.code(), message, *e.offset());
    throw Error(e.code(), message);
  }
}

}  // namespace

GcfProblem parse_problem(std::string_view json_text) {
  nlohmann::json document;
  try {
    document = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, std::string("problem file is not valid JSON: ") + e.what());
  }
  if (!document.is_object()) throw Error(ErrorCode::InvalidInput, "problem file must be a JSON object");

  static const std::set<std::string> known{"name", "b0", "a", "b", "target"};
  for (const auto& [key, value] : document.items()) {
    if (!known.contains(key)) throw Error(ErrorCode::InvalidInput, "unknown field '" + key + "'");
  }
  for (const char* key : {"b0", "a", "b"}) {
    if (!document.contains(key)) throw Error(ErrorCode::InvalidInput, std::string("missing field '") + key + "'");
  }

  GcfProblem problem;
  if (document.contains("name")) problem.name = text_field(document, "name");
  const Polynomial b0 = parse_field("b0", [&] { return parse_polynomial(text_field(document, "b0")); });
  if (b0.degree() >= 1) throw Error(ErrorCode::InvalidInput, "field 'b0' must be a constant");
  problem.b0 = b0.coefficient(0);
  problem.a = parse_field("a", [&] { return parse_polynomial(text_field(document, "a")); });
  problem.b = parse_field("b", [&] { return parse_polynomial(text_field(document, "b")); });
  if (document.contains("target") && !document.at("target").is_null()) {
    problem.target = parse_field("target", [&] { return parse_const_expr(text_field(document, "target")); });
  }
  return problem;
}

GcfProblem load_problem_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot read problem file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  GcfProblem problem = parse_problem(buffer.str());
  if (problem.name.empty()) problem.name = path.stem().string();
  return problem;
}

}  // namespace gcf_forge
