#pragma once

// JSON and CSV forms of reports. Field names are part of the CLI contract.

#include "sgforge/classify.hpp"
#include "sgforge/ideal.hpp"
#include "sgforge/search.hpp"
#include "sgforge/verify.hpp"

#include "json.hpp"

#include <string>

namespace sgforge {

nlohmann::json to_json(const NumericalSemigroup& h, const CoreInvariants& core);
nlohmann::json to_json(const RelativeIdeal& e);
nlohmann::json to_json(const ClassificationReport& r);
nlohmann::json to_json(const BgBounds& bg);
nlohmann::json to_json(const SurveyRow& row);
nlohmann::json to_json(const VerificationOutcome& outcome);

/// Column order of `enumerate --format csv`.
std::string report_csv_header();
std::string to_csv(const ClassificationReport& r);

}  // namespace sgforge
