#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lotwise/scenario.hpp"

namespace lotwise {

enum class OutputFormat { table, csv, json };

std::optional<OutputFormat> parse_output_format(std::string_view text);

// `table` rounds for reading (currency 2 places, unit costs 3, rates as a
// 1-place percentage); `csv` and `json` carry full precision. All formats
// use "." as the decimal separator.

std::string render_evaluation(const Scenario& s, const Recommendation& r,
                              const std::vector<Violation>& violations, OutputFormat format);

/// Header: axis_value,pull_unit_cost,push_unit_cost,holding_cost,threshold,
/// r_if_sold,r_prime,pr,gain,break_even_p
std::string render_sweep(const SweepTable& t, OutputFormat format);

std::string render_breakeven(const Scenario& s, const PushEvaluation& e);

std::string render_eoq(const Scenario& s, const EoqComparison& c, OutputFormat format);

std::string render_golden(const std::vector<GoldenFixture>& fixtures);

/// "requested 20000 → capacity 6666 → lot 0"
std::string render_trail(const std::vector<ConstraintStep>& trail);

}  // namespace lotwise
