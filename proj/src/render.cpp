#include "lotwise/render.hpp"

#include <fmt/format.h>

#include "lotwise/format.hpp"
#include "lotwise/json_io.hpp"

namespace lotwise {

namespace {

std::string opt_full(const std::optional<double>& v) { return v ? format_full(*v) : ""; }

std::string opt_percent(const std::optional<double>& v, int decimals = 1) {
    return v ? format_percent(*v, decimals) : "n/a";
}

std::string axis_label(SweepAxis axis, double value) {
    switch (axis) {
        case SweepAxis::sale_probability: return format_percent(value, 0);
        case SweepAxis::extra_qty: return fmt::format("{:.0f}", value);
        case SweepAxis::storage_days: return format_full(value);
    }
    return format_full(value);
}

void append_evaluation_lines(std::string& out, const PushEvaluation& e) {
    auto line = [&](std::string_view label, const std::string& value) {
        out += fmt::format("  {:<28}{:>14}\n", label, value);
    };
    line("period holding rate", format_percent(e.period_rate));
    line("pull unit cost", format_unit_cost(e.pull_unit_cost));
    line("push unit cost", format_unit_cost(e.push_unit_cost));
    line("holding cost", format_currency(e.holding_cost_total));
    line("stocking rate threshold", opt_percent(e.stocking_rate_threshold, 2));
    line("result if sold (certain)", format_currency(e.result_if_sold_certain));
    line("expected result if sold", format_currency(e.expected_result_if_sold));
    line("expected loss if unsold", format_currency(e.expected_loss_if_unsold));
    line("expected gain", format_currency(e.expected_gain));
    line("break-even probability", opt_percent(e.break_even_probability, 2));
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view text) {
    if (text == "table") return OutputFormat::table;
    if (text == "csv") return OutputFormat::csv;
    if (text == "json") return OutputFormat::json;
    return std::nullopt;
}

std::string render_trail(const std::vector<ConstraintStep>& trail) {
    std::string out;
    for (const auto& step : trail) {
        if (!out.empty()) out += " → ";
        out += fmt::format("{} {}", to_string(step.constraint), step.after);
    }
    return out;
}

std::string render_evaluation(const Scenario& s, const Recommendation& r,
                              const std::vector<Violation>& violations, OutputFormat format) {
    if (format == OutputFormat::json) {
        return evaluation_document(s, r, violations).dump(2) + "\n";
    }
    const PushEvaluation& e = r.evaluation;
    if (format == OutputFormat::csv) {
        std::string out =
            "scenario,strategy,recommended_extra_qty,capacity_cap,lot_rounded_qty,economic_ok,"
            "gain_at_recommendation,extra_qty,period_rate,pull_unit_cost,push_unit_cost,"
            "holding_cost,threshold,r_if_sold,r_prime,pr,gain,break_even_p\n";
        out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", s.name,
                           to_string(r.strategy), r.recommended_extra_qty, r.capacity_cap,
                           r.lot_rounded_qty, r.economic_ok, format_full(r.gain_at_recommendation),
                           e.extra_qty, format_full(e.period_rate), format_full(e.pull_unit_cost),
                           format_full(e.push_unit_cost), format_full(e.holding_cost_total),
                           opt_full(e.stocking_rate_threshold),
                           format_full(e.result_if_sold_certain),
                           format_full(e.expected_result_if_sold),
                           format_full(e.expected_loss_if_unsold), format_full(e.expected_gain),
                           opt_full(e.break_even_probability));
        return out;
    }

    std::string out = fmt::format("scenario: {}\n", s.name);
    out += fmt::format("strategy: {}, extra: {}, gain: {}\n", to_string(r.strategy),
                       r.recommended_extra_qty, format_currency(r.gain_at_recommendation));
    out += fmt::format("trail: {}\n", render_trail(r.constraint_trail));
    out += fmt::format("economic condition: {} (holding {} vs threshold {})\n",
                       r.economic_ok ? "met" : "not met", format_percent(e.period_rate),
                       opt_percent(e.stocking_rate_threshold, 2));
    out += fmt::format("evaluation at X = {}\n", e.extra_qty);
    append_evaluation_lines(out, e);
    if (!violations.empty()) {
        out += "warnings:\n";
        for (const auto& v : violations) out += fmt::format("  - {} ({})\n", v.message, v.field);
    }
    return out;
}

std::string render_sweep(const SweepTable& t, OutputFormat format) {
    if (format == OutputFormat::json) return to_json(t).dump(2) + "\n";
    if (format == OutputFormat::csv) {
        std::string out =
            "axis_value,pull_unit_cost,push_unit_cost,holding_cost,threshold,r_if_sold,r_prime,"
            "pr,gain,break_even_p\n";
        for (const auto& row : t.rows) {
            const auto& e = row.evaluation;
            out += fmt::format("{},{},{},{},{},{},{},{},{},{}\n", format_full(row.axis_value),
                               format_full(e.pull_unit_cost), format_full(e.push_unit_cost),
                               format_full(e.holding_cost_total),
                               opt_full(e.stocking_rate_threshold),
                               format_full(e.result_if_sold_certain),
                               format_full(e.expected_result_if_sold),
                               format_full(e.expected_loss_if_unsold),
                               format_full(e.expected_gain), opt_full(e.break_even_probability));
        }
        return out;
    }

    std::string out = fmt::format("sweep of {} over {}\n", t.scenario_name, to_string(t.axis));
    out += fmt::format("{:>10} {:>8} {:>8} {:>10} {:>9} {:>10} {:>10} {:>10} {:>11} {:>8}\n",
                       "value", "CR pull", "CR push", "holding", "thresh", "R", "R'", "PR", "G",
                       "P*");
    for (const auto& row : t.rows) {
        const auto& e = row.evaluation;
        out += fmt::format("{:>10} {:>8} {:>8} {:>10} {:>9} {:>10} {:>10} {:>10} {:>11} {:>8}\n",
                           axis_label(t.axis, row.axis_value), format_unit_cost(e.pull_unit_cost),
                           format_unit_cost(e.push_unit_cost),
                           format_currency(e.holding_cost_total),
                           opt_percent(e.stocking_rate_threshold, 2),
                           format_currency(e.result_if_sold_certain),
                           format_currency(e.expected_result_if_sold),
                           format_currency(e.expected_loss_if_unsold),
                           format_currency(e.expected_gain),
                           opt_percent(e.break_even_probability, 2));
    }
    return out;
}

std::string render_breakeven(const Scenario& s, const PushEvaluation& e) {
    const std::string pstar = opt_percent(e.break_even_probability, 2);
    std::string out = fmt::format("{} at X = {}: break-even sale probability {}\n", s.name,
                                  e.extra_qty, pstar);
    if (e.break_even_probability) {
        out += fmt::format("push profitable for P ≥ {}\n", pstar);
    } else {
        out += "gain is zero at every probability\n";
    }
    return out;
}

std::string render_eoq(const Scenario& s, const EoqComparison& c, OutputFormat format) {
    if (format == OutputFormat::json) return to_json(c).dump(2) + "\n";
    if (format == OutputFormat::csv) {
        return fmt::format(
                   "eoq_qty,eoq_unit_cost,eoq_extra_qty,eoq_constrained_extra_qty,eoq_gain,"
                   "model_recommended_qty,model_gain,delta_expected_gain\n") +
               fmt::format("{},{},{},{},{},{},{},{}\n", c.eoq_qty, format_full(c.eoq_unit_cost),
                           c.eoq_extra_qty, c.eoq_constrained_extra_qty, format_full(c.eoq_gain),
                           c.model_recommended_qty, format_full(c.model_gain),
                           format_full(c.delta_expected_gain));
    }
    std::string out = fmt::format("{}: EOQ Q* = {}\n", s.name, c.eoq_qty);
    out += fmt::format("  unit cost at Q*            {:>12}\n", format_unit_cost(c.eoq_unit_cost));
    out += fmt::format("  implied extra              {:>12}\n", c.eoq_extra_qty);
    out += fmt::format("  after capacity and lot     {:>12}\n", c.eoq_constrained_extra_qty);
    out += fmt::format("  expected gain (EOQ)        {:>12}\n", format_currency(c.eoq_gain));
    out += fmt::format("  model recommendation       {:>12}\n", c.model_recommended_qty);
    out += fmt::format("  expected gain (model)      {:>12}\n", format_currency(c.model_gain));
    out += fmt::format("  delta gain (model - EOQ)   {:>12}\n",
                       format_currency(c.delta_expected_gain));
    return out;
}

std::string render_golden(const std::vector<GoldenFixture>& fixtures) {
    std::string out;
    for (const auto& fx : fixtures) {
        out += fmt::format("piece {}: {} cells, {} errata, {} mismatches\n",
                           fx.piece == ReferencePiece::a ? "a" : "b", fx.cells.size(), fx.errata(),
                           fx.mismatches());
        for (const auto& cell : fx.cells) {
            const std::string where =
                cell.sale_probability ? " @ P=" + format_percent(*cell.sale_probability, 0) : "";
            std::string computed, printed;
            switch (cell.kind) {
                case CellKind::currency:
                    computed = format_currency(cell.computed);
                    printed = format_currency(cell.printed);
                    break;
                case CellKind::unit_cost:
                    computed = format_unit_cost(cell.computed);
                    printed = format_unit_cost(cell.printed);
                    break;
                case CellKind::rate:
                    computed = format_percent(cell.computed, 2);
                    printed = format_percent(cell.printed, 2);
                    break;
            }
            out += fmt::format("  {:<8} {:<32} computed {:>10}  printed {:>10}\n",
                               to_string(cell.status), cell.row + where, computed, printed);
        }
    }
    return out;
}

}  // namespace lotwise
