#include "lotwise/decision.hpp"

#include <algorithm>
#include <cmath>

namespace lotwise {

namespace {

void require(bool ok, const char* message) {
    if (!ok) throw DomainError(message);
}

void require_order(Pieces ordered_qty) { require(ordered_qty >= 1, "empty order"); }

void require_costs(double setup_cost, double unit_cost) {
    require(std::isfinite(setup_cost) && setup_cost >= 0.0, "setup cost must be >= 0");
    require(std::isfinite(unit_cost) && unit_cost >= 0.0, "unit cost must be >= 0");
}

void require_extra(Pieces extra_qty) { require(extra_qty >= 0, "extra quantity must be >= 0"); }

void require_rate(double period_rate) {
    require(std::isfinite(period_rate) && period_rate >= 0.0, "holding rate must be >= 0");
}

void require_probability(double p) {
    require(p >= 0.0 && p <= 1.0, "sale probability must lie in [0, 1]");
}

}  // namespace

const char* to_string(Strategy s) noexcept { return s == Strategy::push ? "push" : "pull"; }

const char* to_string(SlopeSign s) noexcept {
    switch (s) {
        case SlopeSign::decreasing: return "decreasing";
        case SlopeSign::flat: return "flat";
        case SlopeSign::increasing: return "increasing";
    }
    return "?";
}

const char* to_string(Constraint c) noexcept {
    switch (c) {
        case Constraint::requested: return "requested";
        case Constraint::capacity: return "capacity";
        case Constraint::lot_multiple: return "lot";
        case Constraint::expected_gain: return "gain";
    }
    return "?";
}

double pull_unit_cost(double setup_cost, double unit_cost, Pieces ordered_qty) {
    require_order(ordered_qty);
    require_costs(setup_cost, unit_cost);
    const auto qc = static_cast<double>(ordered_qty);
    return (setup_cost + unit_cost * qc) / qc;
}

double derive_unit_cost(double quoted_unit_cost, double setup_cost, Pieces ordered_qty) {
    require_order(ordered_qty);
    require(std::isfinite(setup_cost) && setup_cost >= 0.0, "setup cost must be >= 0");
    const double unit_cost = quoted_unit_cost - setup_cost / static_cast<double>(ordered_qty);
    // tolerate representation noise on an exact zero
    require(unit_cost >= -1e-15 * std::abs(quoted_unit_cost), "setup cost exceeds quoted total");
    return std::max(unit_cost, 0.0);
}

double period_holding_rate(double annual_rate, double storage_days) {
    require(annual_rate >= 0.0 && annual_rate <= 1.0, "annual holding rate must lie in [0, 1]");
    require(std::isfinite(storage_days) && storage_days > 0.0, "storage days must be > 0");
    return annual_rate * storage_days / 365.0;
}

double holding_cost(double unit_cost, Pieces extra_qty, double period_rate) {
    require_extra(extra_qty);
    require_rate(period_rate);
    require(std::isfinite(unit_cost) && unit_cost >= 0.0, "unit cost must be >= 0");
    return (unit_cost * static_cast<double>(extra_qty)) * period_rate;
}

double push_unit_cost(double setup_cost, double unit_cost, Pieces ordered_qty, Pieces extra_qty,
                      double period_rate) {
    require_order(ordered_qty);
    require_extra(extra_qty);
    require_costs(setup_cost, unit_cost);
    require_rate(period_rate);
    const auto qc = static_cast<double>(ordered_qty);
    const auto x = static_cast<double>(extra_qty);
    return (unit_cost * x * (period_rate + 1.0) + qc * unit_cost + setup_cost) / (qc + x);
}

SlopeSign cost_slope_sign(double setup_cost, double unit_cost, Pieces ordered_qty,
                          double period_rate) {
    require_order(ordered_qty);
    const double numerator = period_rate * unit_cost * static_cast<double>(ordered_qty) - setup_cost;
    if (numerator < 0.0) return SlopeSign::decreasing;
    if (numerator > 0.0) return SlopeSign::increasing;
    return SlopeSign::flat;
}

double stocking_rate_threshold(double setup_cost, double unit_cost, Pieces ordered_qty) {
    require_order(ordered_qty);
    require(unit_cost > 0.0, "threshold undefined for zero unit cost");
    return setup_cost / (static_cast<double>(ordered_qty) * unit_cost);
}

double result_if_sold_certain(double setup_cost, double holding_cost_total) {
    return setup_cost - holding_cost_total;
}

double expected_result_if_sold(double setup_cost, double unit_cost, Pieces extra_qty,
                               double period_rate, double sale_probability) {
    require_extra(extra_qty);
    require_probability(sale_probability);
    return (setup_cost - (unit_cost * static_cast<double>(extra_qty)) * period_rate) *
           sale_probability;
}

double expected_loss_if_unsold(double unit_cost, Pieces extra_qty, double period_rate,
                               double sale_probability) {
    require_extra(extra_qty);
    require_probability(sale_probability);
    return (unit_cost * static_cast<double>(extra_qty) * (1.0 + period_rate)) *
           (1.0 - sale_probability);
}

double expected_gain(double expected_result, double expected_loss) {
    return expected_result - expected_loss;
}

double break_even_probability(double setup_cost, double unit_cost, Pieces extra_qty,
                              double period_rate) {
    require_extra(extra_qty);
    const double lot_value = unit_cost * static_cast<double>(extra_qty);
    const double slope = setup_cost + lot_value;
    require(slope > 0.0, "gain identically zero");
    return std::clamp(lot_value * (1.0 + period_rate) / slope, 0.0, 1.0);
}

Pieces capacity_cap(double available_min, double cycle_time_min) {
    require(std::isfinite(cycle_time_min) && cycle_time_min > 0.0, "invalid cycle time");
    require(std::isfinite(available_min) && available_min >= 0.0, "available time must be >= 0");
    const double quotient = std::floor(available_min / cycle_time_min);
    require(quotient < 9.0e18, "capacity exceeds representable piece count");
    auto n = static_cast<Pieces>(quotient);
    // the quotient can land one ulp on the wrong side of an integer
    while (n > 0 && static_cast<double>(n) * cycle_time_min > available_min) --n;
    while (static_cast<double>(n + 1) * cycle_time_min <= available_min) ++n;
    return n;
}

Pieces floor_to_lot(Pieces qty, Pieces lot_multiple) {
    require(lot_multiple >= 1, "lot multiple must be >= 1");
    if (qty <= 0) return 0;
    return qty / lot_multiple * lot_multiple;
}

PushEvaluation evaluate_push(const PieceProfile& piece, const OrderContext& order,
                             const HoldingPolicy& holding, double sale_probability,
                             Pieces extra_qty) {
    const double cs = piece.setup_cost;
    const double cu = piece.unit_cost_excl_setup;
    const Pieces qc = order.ordered_qty;

    PushEvaluation e;
    e.extra_qty = extra_qty;
    e.period_rate = period_holding_rate(holding.annual_rate, holding.storage_days);
    e.pull_unit_cost = pull_unit_cost(cs, cu, qc);
    e.push_unit_cost = push_unit_cost(cs, cu, qc, extra_qty, e.period_rate);
    e.holding_cost_total = holding_cost(cu, extra_qty, e.period_rate);
    if (cu > 0.0) e.stocking_rate_threshold = stocking_rate_threshold(cs, cu, qc);
    e.result_if_sold_certain = result_if_sold_certain(cs, e.holding_cost_total);
    e.expected_result_if_sold =
        expected_result_if_sold(cs, cu, extra_qty, e.period_rate, sale_probability);
    e.expected_loss_if_unsold =
        expected_loss_if_unsold(cu, extra_qty, e.period_rate, sale_probability);
    e.expected_gain = expected_gain(e.expected_result_if_sold, e.expected_loss_if_unsold);
    if (cs + cu * static_cast<double>(extra_qty) > 0.0) {
        e.break_even_probability = break_even_probability(cs, cu, extra_qty, e.period_rate);
    }
    return e;
}

Recommendation recommend(const PieceProfile& piece, const OrderContext& order,
                         const HoldingPolicy& holding, const SaleForecast& forecast,
                         const CapacityWindow& capacity) {
    require_extra(forecast.target_extra_qty);

    Recommendation rec;
    const Pieces requested = forecast.target_extra_qty;
    rec.constraint_trail.push_back({Constraint::requested, requested, requested});

    rec.capacity_cap = capacity_cap(capacity.available_min, piece.cycle_time_min);
    const Pieces capped = std::min(requested, rec.capacity_cap);
    rec.constraint_trail.push_back({Constraint::capacity, requested, capped});

    rec.lot_rounded_qty = floor_to_lot(capped, piece.lot_multiple);
    rec.constraint_trail.push_back({Constraint::lot_multiple, capped, rec.lot_rounded_qty});

    rec.evaluation =
        evaluate_push(piece, order, holding, forecast.sale_probability, rec.lot_rounded_qty);
    rec.economic_ok = !rec.evaluation.stocking_rate_threshold ||
                      rec.evaluation.period_rate <= *rec.evaluation.stocking_rate_threshold;

    if (rec.lot_rounded_qty >= 1 && rec.evaluation.expected_gain > 0.0) {
        rec.strategy = Strategy::push;
        rec.recommended_extra_qty = rec.lot_rounded_qty;
        rec.gain_at_recommendation = rec.evaluation.expected_gain;
    } else {
        rec.strategy = Strategy::pull;
        rec.recommended_extra_qty = 0;
        rec.gain_at_recommendation = 0.0;
        if (rec.lot_rounded_qty >= 1) {
            rec.constraint_trail.push_back({Constraint::expected_gain, rec.lot_rounded_qty, 0});
        }
    }
    return rec;
}

}  // namespace lotwise
