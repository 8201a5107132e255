// SPDX-License-Identifier: MIT
//
// CSV and JSON forms of scan, classification and root reports.
#pragma once

#include "mtwsphere/classifier.hpp"
#include "mtwsphere/mtw_oracle.hpp"

#include <json.hpp>

#include <string>

namespace mtwsphere {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::json;

/// Header d,P1..P4,O1..O4,degenerate; 17 significant digits; degenerate rows leave values empty.
std::string scan_csv(const ScanReport& r);

Json to_json(const ScanReport& r);
Json to_json(const ClassificationReport& c);
Json to_json(const BifurcationResult& b);
Json to_json(const OracleComparison& c);

/// Wraps a report body as {"schema_version": 1, "kind": kind, "report": body}.
Json envelope(const std::string& kind, Json body);

ScanReport scan_from_json(const Json& j);
ClassificationReport classification_from_json(const Json& j);
BifurcationResult bifurcation_from_json(const Json& j);

}  // namespace mtwsphere
