#pragma once

// JSON encodings of the result records. +infinity is the string "inf".
// Schemas are listed in docs/formats.md.

#include <json.hpp>

#include "gmext/certifier.hpp"
#include "gmext/core.hpp"
#include "gmext/explorer.hpp"
#include "gmext/oracle.hpp"
#include "gmext/stationarity.hpp"

namespace gmext {

nlohmann::json to_json(const ExtendedReal& v);
ExtendedReal extended_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ExtremumProblem& p);
nlohmann::json to_json(const ExtremumResult& r);
nlohmann::json to_json(const CriticalPoint& cp);
nlohmann::json to_json(const CriticalPointSet& set);
nlohmann::json to_json(const OracleEstimate& e);
nlohmann::json to_json(const CrosscheckReport& r);
nlohmann::json to_json(const CertificationReport& r);
nlohmann::json to_json(const BelowThresholdReport& r);

// Per-(alpha, n) aggregates over lambda.
nlohmann::json scan_summary(const std::vector<ScanRow>& rows);

}  // namespace gmext
