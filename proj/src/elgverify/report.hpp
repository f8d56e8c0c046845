#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "elg/cone.hpp"
#include "elg/function_vector.hpp"
#include "elgverify/verify.hpp"

namespace elg::verify {

/// Versioned JSON verification report; byte-identical for identical
/// configurations.
std::string report_json(const std::string& suite, const VerifyConfig& cfg,
                        const std::vector<PropertyResult>& results);

/// {"family": [[p, q], ...], "values": [...]} in family order.
nlohmann::ordered_json function_vector_json(const FunctionVector& fv);
FunctionVector function_vector_from_json(const nlohmann::json& j);

/// Cone points for the pairing table: {"type": "interior", "x":, "y":, "c":}
/// (c defaults to 1), {"type": "boundary", "a":, "b":} or {"type": "zero"}.
std::vector<ConePoint> parse_cone_points(const nlohmann::json& j);

}  // namespace elg::verify
