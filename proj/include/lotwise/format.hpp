#pragma once

#include <string>

namespace lotwise {

/// Rounds half away from zero at `decimals` places. A value whose binary
/// representation sits a few ulps below a decimal half (0.0735 is stored
/// as 0.07349999...) is treated as the half it denotes.
double round_half_away(double value, int decimals);

/// 2 decimals, e.g. "178.08". Never prints "-0.00".
std::string format_currency(double value);

/// 3 decimals, e.g. "0.074".
std::string format_unit_cost(double value);

/// Fraction as a percentage with `decimals` places, e.g. 0.037 -> "3.7%".
std::string format_percent(double fraction, int decimals = 1);

/// Shortest text that parses back to the identical double.
std::string format_full(double value);

}  // namespace lotwise
