#include "lotwise/format.hpp"

#include <cmath>

#include <fmt/format.h>

namespace lotwise {

double round_half_away(double value, int decimals) {
    if (!std::isfinite(value)) return value;
    const double scale = std::pow(10.0, decimals);
    const double scaled = std::abs(value) * scale;
    double whole = std::floor(scaled);
    const double slack = std::max(1e-9, scaled * 1e-12);
    if (scaled - whole >= 0.5 - slack) whole += 1.0;
    const double out = std::copysign(whole / scale, value);
    return out == 0.0 ? 0.0 : out;
}

std::string format_currency(double value) { return fmt::format("{:.2f}", round_half_away(value, 2)); }

std::string format_unit_cost(double value) { return fmt::format("{:.3f}", round_half_away(value, 3)); }

std::string format_percent(double fraction, int decimals) {
    return fmt::format("{:.{}f}%", round_half_away(fraction * 100.0, decimals), decimals);
}

std::string format_full(double value) { return fmt::format("{}", value); }

}  // namespace lotwise
