#pragma once

#include <ostream>

#include "gcf_forge/error.hpp"
#include "gcf_forge/verify.hpp"

namespace gcf_forge {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitInconclusive = 4;

int exit_code_for(Verdict verdict);
int exit_code_for(ErrorCode code);

/// gcf-forge eval|factorize|series|verify <file> [--depth N] [--digits D] [--exact] [--json PATH]
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gcf_forge
