#include "lotwise/json_io.hpp"

#include <cmath>
#include <initializer_list>

namespace lotwise {

namespace {

std::string join_path(const std::string& prefix, const std::string& key) {
    return prefix.empty() ? key : prefix + "." + key;
}

class ObjectReader {
public:
    ObjectReader(const Json& obj, std::string path, std::initializer_list<const char*> allowed)
        : obj_(obj), path_(std::move(path)) {
        if (!obj_.is_object()) {
            throw InputError("invalid_type", path_,
                             (path_.empty() ? std::string("document") : path_) +
                                 " must be a JSON object");
        }
        for (const auto& item : obj_.items()) {
            bool known = false;
            for (const char* a : allowed) known = known || item.key() == a;
            if (!known) {
                const auto field = join_path(path_, item.key());
                throw InputError("unknown_key", field, "unknown key '" + field + "'");
            }
        }
    }

    bool has(const char* key) const { return obj_.contains(key) && !obj_.at(key).is_null(); }

    const Json& at(const char* key) const {
        if (!obj_.contains(key)) {
            const auto field = join_path(path_, key);
            throw InputError("missing_field", field, "missing field '" + field + "'");
        }
        return obj_.at(key);
    }

    std::string path(const char* key) const { return join_path(path_, key); }

    double number(const char* key) const {
        const Json& v = at(key);
        if (!v.is_number()) {
            throw InputError("invalid_type", path(key), "field '" + path(key) + "' must be a number");
        }
        return v.get<double>();
    }

    Pieces integer(const char* key) const {
        const Json& v = at(key);
        if (v.is_number_integer()) return v.get<Pieces>();
        if (v.is_number_float()) {
            const double d = v.get<double>();
            if (std::isfinite(d) && d == std::floor(d) && std::abs(d) < 9.0e15) {
                return static_cast<Pieces>(d);
            }
        }
        throw InputError("invalid_type", path(key), "field '" + path(key) + "' must be an integer");
    }

    std::string text(const char* key) const {
        const Json& v = at(key);
        if (!v.is_string()) {
            throw InputError("invalid_type", path(key), "field '" + path(key) + "' must be a string");
        }
        return v.get<std::string>();
    }

    ObjectReader child(const char* key, std::initializer_list<const char*> allowed) const {
        return ObjectReader(at(key), path(key), allowed);
    }

private:
    const Json& obj_;
    std::string path_;
};

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Scenario scenario_from_json(const Json& doc) {
    const ObjectReader root(doc, "",
                            {"name", "piece", "order", "holding", "forecast", "capacity",
                             "annual_demand"});
    Scenario s;
    s.name = root.text("name");

    const auto piece = root.child(
        "piece", {"id", "setup_cost", "unit_cost", "cycle_time_min", "lot_multiple"});
    s.piece.id = piece.text("id");
    s.piece.setup_cost = piece.number("setup_cost");
    s.piece.unit_cost_excl_setup = piece.number("unit_cost");
    s.piece.cycle_time_min = piece.number("cycle_time_min");
    s.piece.lot_multiple = piece.has("lot_multiple") ? piece.integer("lot_multiple") : 1;

    const auto order = root.child("order", {"ordered_qty"});
    s.order.ordered_qty = order.integer("ordered_qty");

    const auto holding = root.child("holding", {"annual_rate", "storage_days"});
    s.holding.annual_rate = holding.number("annual_rate");
    s.holding.storage_days = holding.number("storage_days");

    const auto forecast = root.child("forecast", {"sale_probability", "target_extra_qty"});
    s.forecast.sale_probability = forecast.number("sale_probability");
    s.forecast.target_extra_qty = forecast.integer("target_extra_qty");

    const auto capacity = root.child("capacity", {"available_min"});
    s.capacity.available_min = capacity.number("available_min");

    if (root.has("annual_demand")) s.annual_demand = root.number("annual_demand");
    return s;
}

Scenario scenario_from_text(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw InputError("parse_error", "", std::string("parse error: ") + e.what());
    }
    return scenario_from_json(doc);
}

Json to_json(const Scenario& s) {
    Json doc = {
        {"name", s.name},
        {"piece",
         {{"id", s.piece.id},
          {"setup_cost", s.piece.setup_cost},
          {"unit_cost", s.piece.unit_cost_excl_setup},
          {"cycle_time_min", s.piece.cycle_time_min},
          {"lot_multiple", s.piece.lot_multiple}}},
        {"order", {{"ordered_qty", s.order.ordered_qty}}},
        {"holding",
         {{"annual_rate", s.holding.annual_rate}, {"storage_days", s.holding.storage_days}}},
        {"forecast",
         {{"sale_probability", s.forecast.sale_probability},
          {"target_extra_qty", s.forecast.target_extra_qty}}},
        {"capacity", {{"available_min", s.capacity.available_min}}},
    };
    if (s.annual_demand) doc["annual_demand"] = *s.annual_demand;
    return doc;
}

Json to_json(const PushEvaluation& e) {
    return {
        {"extra_qty", e.extra_qty},
        {"period_rate", e.period_rate},
        {"pull_unit_cost", e.pull_unit_cost},
        {"push_unit_cost", e.push_unit_cost},
        {"holding_cost_total", e.holding_cost_total},
        {"stocking_rate_threshold", optional_number(e.stocking_rate_threshold)},
        {"result_if_sold_certain", e.result_if_sold_certain},
        {"expected_result_if_sold", e.expected_result_if_sold},
        {"expected_loss_if_unsold", e.expected_loss_if_unsold},
        {"expected_gain", e.expected_gain},
        {"break_even_probability", optional_number(e.break_even_probability)},
    };
}

Json to_json(const Recommendation& r) {
    Json trail = Json::array();
    for (const auto& step : r.constraint_trail) {
        trail.push_back({{"constraint", to_string(step.constraint)},
                         {"before", step.before},
                         {"after", step.after}});
    }
    return {
        {"strategy", to_string(r.strategy)},
        {"recommended_extra_qty", r.recommended_extra_qty},
        {"capacity_cap", r.capacity_cap},
        {"lot_rounded_qty", r.lot_rounded_qty},
        {"economic_ok", r.economic_ok},
        {"gain_at_recommendation", r.gain_at_recommendation},
        {"constraint_trail", std::move(trail)},
    };
}

Json to_json(const SweepTable& t) {
    Json rows = Json::array();
    for (const auto& row : t.rows) {
        rows.push_back({{"axis_value", row.axis_value}, {"evaluation", to_json(row.evaluation)}});
    }
    return {{"scenario_name", t.scenario_name}, {"axis", to_string(t.axis)}, {"rows", rows}};
}

Json to_json(const EoqComparison& c) {
    return {
        {"eoq_qty", c.eoq_qty},
        {"eoq_unit_cost", c.eoq_unit_cost},
        {"eoq_extra_qty", c.eoq_extra_qty},
        {"eoq_constrained_extra_qty", c.eoq_constrained_extra_qty},
        {"eoq_gain", c.eoq_gain},
        {"model_recommended_qty", c.model_recommended_qty},
        {"model_gain", c.model_gain},
        {"delta_expected_gain", c.delta_expected_gain},
    };
}

Json to_json(const std::vector<Violation>& violations) {
    Json out = Json::array();
    for (const auto& v : violations) {
        out.push_back({{"code", v.code},
                       {"field", v.field},
                       {"message", v.message},
                       {"severity", v.severity == Severity::error ? "error" : "advisory"}});
    }
    return out;
}

Json evaluation_document(const Scenario& s, const Recommendation& r,
                         const std::vector<Violation>& violations) {
    const auto sign = cost_slope_sign(s.piece.setup_cost, s.piece.unit_cost_excl_setup,
                                      s.order.ordered_qty, r.evaluation.period_rate);
    Json evaluation = to_json(r.evaluation);
    evaluation["cost_slope"] = to_string(sign);
    return {
        {"scenario", s.name},
        {"recommendation", to_json(r)},
        {"evaluation", std::move(evaluation)},
        {"warnings", to_json(violations)},
    };
}

SweepSpec sweep_spec_from_json(const Json& doc, const std::string& path_prefix) {
    if (!doc.is_object()) throw InputError("invalid_type", path_prefix, "sweep must be an object");
    const auto axis_field = join_path(path_prefix, "axis");
    const auto values_field = join_path(path_prefix, "values");
    if (!doc.contains("axis") || !doc.at("axis").is_string()) {
        throw InputError("missing_field", axis_field, "missing field '" + axis_field + "'");
    }
    const auto axis = parse_sweep_axis(doc.at("axis").get<std::string>());
    if (!axis) {
        throw InputError("invalid_axis", axis_field,
                         "unknown axis '" + doc.at("axis").get<std::string>() +
                             "' (valid: p, x, days)");
    }
    if (!doc.contains("values") || !doc.at("values").is_array()) {
        throw InputError("missing_field", values_field, "missing field '" + values_field + "'");
    }
    SweepSpec spec{*axis, {}};
    for (const auto& v : doc.at("values")) {
        if (!v.is_number()) {
            throw InputError("invalid_type", values_field, "sweep values must be numbers");
        }
        spec.values.push_back(v.get<double>());
    }
    try {
        validate_sweep(spec);
    } catch (const DomainError& e) {
        throw InputError("invalid_values", values_field, e.what());
    }
    return spec;
}

}  // namespace lotwise
