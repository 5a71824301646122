#include "lotwise/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include <fmt/format.h>

namespace lotwise {

namespace {

constexpr double kIndustryRateLow = 0.15;
constexpr double kIndustryRateHigh = 0.35;

bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0.0; }

}  // namespace

std::vector<Violation> validate_scenario(const Scenario& s) {
    std::vector<Violation> out;
    auto error = [&](const char* code, const char* field, std::string message) {
        out.push_back({code, field, std::move(message), Severity::error});
    };

    if (s.name.empty()) error("empty_name", "name", "scenario name is empty");
    if (s.piece.id.empty()) error("empty_piece_id", "piece.id", "piece id is empty");
    if (!finite_nonneg(s.piece.setup_cost))
        error("negative_setup_cost", "piece.setup_cost", "setup cost must be >= 0");
    if (!finite_nonneg(s.piece.unit_cost_excl_setup))
        error("negative_unit_cost", "piece.unit_cost", "unit cost must be >= 0");
    if (!(std::isfinite(s.piece.cycle_time_min) && s.piece.cycle_time_min > 0.0))
        error("invalid_cycle_time", "piece.cycle_time_min", "invalid cycle time");
    if (s.piece.lot_multiple < 1)
        error("invalid_lot_multiple", "piece.lot_multiple", "lot multiple must be >= 1");
    if (s.order.ordered_qty < 1) error("empty_order", "order.ordered_qty", "empty order");

    const double rate = s.holding.annual_rate;
    if (!(rate >= 0.0 && rate <= 1.0)) {
        error("annual_rate_out_of_range", "holding.annual_rate",
              "annual holding rate must lie in [0, 1]");
    } else if (rate < kIndustryRateLow) {
        out.push_back({"rate_below_industry_range", "holding.annual_rate",
                       "rate below industry range 15–35%", Severity::advisory});
    } else if (rate > kIndustryRateHigh) {
        out.push_back({"rate_above_industry_range", "holding.annual_rate",
                       "rate above industry range 15–35%", Severity::advisory});
    }
    if (!(std::isfinite(s.holding.storage_days) && s.holding.storage_days > 0.0))
        error("invalid_storage_days", "holding.storage_days", "storage days must be > 0");

    const double p = s.forecast.sale_probability;
    if (!(p >= 0.0 && p <= 1.0))
        error("probability_out_of_range", "forecast.sale_probability",
              "sale probability must lie in [0, 1]");
    if (s.forecast.target_extra_qty < 0)
        error("negative_extra_qty", "forecast.target_extra_qty", "extra quantity must be >= 0");
    if (!finite_nonneg(s.capacity.available_min))
        error("negative_available_time", "capacity.available_min",
              "available time must be >= 0");
    if (s.annual_demand && !finite_nonneg(*s.annual_demand))
        error("negative_annual_demand", "annual_demand", "annual demand must be >= 0");
    return out;
}

bool has_errors(const std::vector<Violation>& violations) {
    return std::any_of(violations.begin(), violations.end(),
                       [](const Violation& v) { return v.severity == Severity::error; });
}

PushEvaluation evaluate_target(const Scenario& s) {
    return evaluate_push(s.piece, s.order, s.holding, s.forecast.sale_probability,
                         s.forecast.target_extra_qty);
}

Recommendation recommend(const Scenario& s) {
    return recommend(s.piece, s.order, s.holding, s.forecast, s.capacity);
}

const char* to_string(SweepAxis axis) noexcept {
    switch (axis) {
        case SweepAxis::sale_probability: return "sale_probability";
        case SweepAxis::extra_qty: return "extra_qty";
        case SweepAxis::storage_days: return "storage_days";
    }
    return "?";
}

std::optional<SweepAxis> parse_sweep_axis(std::string_view text) {
    if (text == "p" || text == "sale_probability") return SweepAxis::sale_probability;
    if (text == "x" || text == "extra_qty") return SweepAxis::extra_qty;
    if (text == "days" || text == "storage_days") return SweepAxis::storage_days;
    return std::nullopt;
}

void validate_sweep(const SweepSpec& spec) {
    if (spec.values.empty()) throw DomainError("sweep needs at least one value");
    for (std::size_t k = 0; k < spec.values.size(); ++k) {
        const double v = spec.values[k];
        const bool in_domain = [&] {
            if (!std::isfinite(v)) return false;
            switch (spec.axis) {
                case SweepAxis::sale_probability: return v >= 0.0 && v <= 1.0;
                case SweepAxis::extra_qty: return v >= 0.0 && v == std::floor(v) && v < 9.0e15;
                case SweepAxis::storage_days: return v > 0.0;
            }
            return false;
        }();
        if (!in_domain) {
            throw DomainError(fmt::format("value {} outside the {} domain", v, to_string(spec.axis)));
        }
        if (k > 0 && !(v > spec.values[k - 1])) {
            throw DomainError("sweep values must be strictly increasing");
        }
    }
}

SweepTable run_sweep(const Scenario& s, const SweepSpec& spec) {
    validate_sweep(spec);
    SweepTable table{s.name, spec.axis, {}};
    table.rows.reserve(spec.values.size());
    for (const double v : spec.values) {
        Scenario point = s;
        switch (spec.axis) {
            case SweepAxis::sale_probability: point.forecast.sale_probability = v; break;
            case SweepAxis::extra_qty: point.forecast.target_extra_qty = static_cast<Pieces>(v); break;
            case SweepAxis::storage_days: point.holding.storage_days = v; break;
        }
        try {
            table.rows.push_back({v, evaluate_target(point)});
        } catch (const DomainError& e) {
            throw DomainError(fmt::format("{} at {}={}", e.what(), to_string(spec.axis), v));
        }
    }
    return table;
}

std::vector<double> expand_range(double start, double end, double step) {
    if (!(std::isfinite(start) && std::isfinite(end) && std::isfinite(step)) || step <= 0.0) {
        throw DomainError("range step must be > 0");
    }
    if (end < start) throw DomainError("range end lies before its start");
    const double span = (end - start) / step;
    if (span > 1.0e6) throw DomainError("range has too many points");
    // multiplying from the start avoids accumulating the step's rounding
    const auto count = static_cast<long>(std::floor(span + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long k = 0; k < count; ++k) {
        double v = start + static_cast<double>(k) * step;
        // snap to 12 significant digits so 0.1*3 reads back as 0.3
        const std::string text = fmt::format("{:.12g}", v);
        std::from_chars(text.data(), text.data() + text.size(), v);
        out.push_back(std::min(v, std::max(end, start)));
    }
    return out;
}

Pieces eoq_lot_size(double annual_demand, double setup_cost, double unit_cost,
                    double annual_rate) {
    if (!(annual_demand > 0.0 && setup_cost > 0.0 && unit_cost > 0.0 && annual_rate > 0.0) ||
        !std::isfinite(annual_demand * setup_cost / (unit_cost * annual_rate))) {
        throw DomainError("EOQ undefined");
    }
    return static_cast<Pieces>(
        std::llround(std::sqrt(2.0 * annual_demand * setup_cost / (unit_cost * annual_rate))));
}

EoqComparison compare_to_eoq(const Scenario& s) {
    if (!s.annual_demand) throw DomainError("EOQ undefined: scenario has no annual_demand");

    EoqComparison c;
    c.eoq_qty = eoq_lot_size(*s.annual_demand, s.piece.setup_cost, s.piece.unit_cost_excl_setup,
                             s.holding.annual_rate);
    c.eoq_extra_qty = std::max<Pieces>(c.eoq_qty - s.order.ordered_qty, 0);
    const double period_rate = period_holding_rate(s.holding.annual_rate, s.holding.storage_days);
    c.eoq_unit_cost = push_unit_cost(s.piece.setup_cost, s.piece.unit_cost_excl_setup,
                                     s.order.ordered_qty, c.eoq_extra_qty, period_rate);

    const Pieces cap = capacity_cap(s.capacity.available_min, s.piece.cycle_time_min);
    c.eoq_constrained_extra_qty = floor_to_lot(std::min(c.eoq_extra_qty, cap), s.piece.lot_multiple);
    // producing no extra lot saves and risks nothing
    c.eoq_gain = c.eoq_constrained_extra_qty == 0
                     ? 0.0
                     : evaluate_push(s.piece, s.order, s.holding, s.forecast.sale_probability,
                                     c.eoq_constrained_extra_qty)
                           .expected_gain;

    const Recommendation rec = recommend(s);
    c.model_recommended_qty = rec.recommended_extra_qty;
    c.model_gain = rec.gain_at_recommendation;
    c.delta_expected_gain = c.model_gain - c.eoq_gain;
    return c;
}

}  // namespace lotwise
