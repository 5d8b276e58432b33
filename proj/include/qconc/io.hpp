// io.hpp — JSON state/superposition files, JSON report serialization, and
// fixed-precision number formatting for CSV output.

#pragma once

#include "qconc/bounds.hpp"
#include "qconc/superposition.hpp"
#include "qconc/verify.hpp"

#include <json.hpp>

#include <string>

namespace qconc {

// State file schema:
//   { "dim_a": int, "dim_b": int, "amplitudes": [[re, im], ...] }
// with amplitude k belonging to |i>|j> at k = i*dim_b + j. Loading
// renormalizes; a deviation beyond 1e-9 is reported through `warning`.
PureState state_from_json(const nlohmann::json& j, std::string* warning = nullptr);
nlohmann::json state_to_json(const PureState& s);

// Superposition file schema:
//   { "coefficients": [[re, im], ...], "states": [<state>, ...] }
Superposition superposition_from_json(const nlohmann::json& j, std::string* warning = nullptr);
nlohmann::json superposition_to_json(const Superposition& s);

PureState load_state_file(const std::string& path, std::string* warning = nullptr);
Superposition load_superposition_file(const std::string& path, std::string* warning = nullptr);

nlohmann::json bounds_report_to_json(const BoundsReport& r);
nlohmann::json verification_report_to_json(const VerificationReport& r);

// Shortest-of-10-significant-digits rendering used in CSV output.
std::string format_sig(double v);

}  // namespace qconc
