#pragma once

// Problem files are JSON objects:
//   {"name": "...", "b0": "1", "a": "-(2*n^4 - n^3)", "b": "3*n^2 + 3*n + 1", "target": "8/pi^2"}
// name and target are optional; any other key is rejected. Expressions stay
// as text and go through the expr grammars.

#include <filesystem>
#include <string_view>

#include "gcf_forge/gcf.hpp"

namespace gcf_forge {

GcfProblem parse_problem(std::string_view json_text);

/// Throws Error{InvalidInput} when the file cannot be read.
GcfProblem load_problem_file(const std::filesystem::path& path);

}  // namespace gcf_forge
