#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lotwise/scenario.hpp"

namespace lotwise {

using Json = nlohmann::json;

// Scenario documents ----------------------------------------------------------
//
//   { "name": "...",
//     "piece":    { "id", "setup_cost", "unit_cost", "cycle_time_min", "lot_multiple"? },
//     "order":    { "ordered_qty" },
//     "holding":  { "annual_rate", "storage_days" },
//     "forecast": { "sale_probability", "target_extra_qty" },
//     "capacity": { "available_min" },
//     "annual_demand"? }
//
// Unknown keys, missing keys and mistyped values throw InputError carrying
// the dotted path of the key. Range checks are left to validate_scenario.

Scenario scenario_from_json(const Json& doc);

/// Parses UTF-8 text; malformed JSON throws InputError with code
/// "parse_error".
Scenario scenario_from_text(std::string_view text);

Json to_json(const Scenario& s);

// Result documents (numbers at full precision) --------------------------------

Json to_json(const PushEvaluation& e);
Json to_json(const Recommendation& r);
Json to_json(const SweepTable& t);
Json to_json(const EoqComparison& c);
Json to_json(const std::vector<Violation>& violations);

/// Recommendation, the evaluation behind it and advisories, as returned by
/// `lotwise evaluate --format json` and POST /api/v1/evaluate.
Json evaluation_document(const Scenario& s, const Recommendation& r,
                         const std::vector<Violation>& violations);

/// {"axis": "p"|"sale_probability"|..., "values": [...]}; throws InputError.
SweepSpec sweep_spec_from_json(const Json& doc, const std::string& path_prefix = "");

}  // namespace lotwise
