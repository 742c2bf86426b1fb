#pragma once

// JSON form of a VerificationReport. Rationals are "p/q" text, reals are
// {"decimal": ..., "precision_bits": ...} with round-trip-exact decimals,
// polynomials carry both display text and their "p/q" coefficient list.

#include <json.hpp>

#include "gcf_forge/verify.hpp"

namespace gcf_forge {

nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json real_to_json(const PrecisionReal& x);
PrecisionReal real_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerificationReport& report);

/// Throws Error{InvalidInput} on schema violations.
VerificationReport report_from_json(const nlohmann::json& j);

}  // namespace gcf_forge
