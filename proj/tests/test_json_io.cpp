#include "doctest.h"

#include "lotwise/json_io.hpp"

using namespace lotwise;

namespace {

const char* kPieceB = R"({
  "name": "piece-b",
  "piece": {"id": "b", "setup_cost": 2000, "unit_cost": 0.3, "cycle_time_min": 0.5,
            "lot_multiple": 20000},
  "order": {"ordered_qty": 20000},
  "holding": {"annual_rate": 0.09, "storage_days": 150},
  "forecast": {"sale_probability": 0.8, "target_extra_qty": 20000},
  "capacity": {"available_min": 12000}
})";

InputError capture(const Json& doc) {
    try {
        scenario_from_json(doc);
    } catch (const InputError& e) {
        return e;
    }
    FAIL("no InputError");
    return InputError("", "", "");
}

}  // namespace

TEST_CASE("scenario document parses") {
    const Scenario s = scenario_from_text(kPieceB);
    CHECK(s.name == "piece-b");
    CHECK(s.piece.setup_cost == 2000);
    CHECK(s.piece.unit_cost_excl_setup == 0.3);
    CHECK(s.piece.lot_multiple == 20000);
    CHECK(s.order.ordered_qty == 20000);
    CHECK(s.holding.storage_days == 150);
    CHECK(s.forecast.sale_probability == 0.8);
    CHECK(s.capacity.available_min == 12000);
    CHECK_FALSE(s.annual_demand);
}

TEST_CASE("scenario document round-trips") {
    Scenario s = scenario_from_text(kPieceB);
    s.annual_demand = 12000;
    const Json doc = to_json(s);
    CHECK(to_json(scenario_from_json(doc)) == doc);
    CHECK(to_json(scenario_from_text(doc.dump())) == doc);
}

TEST_CASE("lot multiple defaults to one") {
    Json doc = Json::parse(kPieceB);
    doc["piece"].erase("lot_multiple");
    CHECK(scenario_from_json(doc).piece.lot_multiple == 1);
}

TEST_CASE("unknown keys are rejected by name") {
    Json doc = Json::parse(kPieceB);
    doc["piece"]["colour"] = "red";
    const InputError e = capture(doc);
    CHECK(e.code() == "unknown_key");
    CHECK(e.field() == "piece.colour");
    CHECK(std::string(e.what()).find("colour") != std::string::npos);

    Json top = Json::parse(kPieceB);
    top["extra"] = 1;
    CHECK(capture(top).field() == "extra");
}

TEST_CASE("missing fields carry their path") {
    Json doc = Json::parse(kPieceB);
    doc["order"].erase("ordered_qty");
    const InputError e = capture(doc);
    CHECK(e.code() == "missing_field");
    CHECK(e.field() == "order.ordered_qty");

    Json no_holding = Json::parse(kPieceB);
    no_holding.erase("holding");
    CHECK(capture(no_holding).field() == "holding");
}

TEST_CASE("mistyped values carry their path") {
    Json doc = Json::parse(kPieceB);
    doc["forecast"]["sale_probability"] = "high";
    InputError e = capture(doc);
    CHECK(e.code() == "invalid_type");
    CHECK(e.field() == "forecast.sale_probability");

    Json frac = Json::parse(kPieceB);
    frac["order"]["ordered_qty"] = 2.5;
    CHECK(capture(frac).field() == "order.ordered_qty");

    Json integral = Json::parse(kPieceB);
    integral["order"]["ordered_qty"] = 20000.0;
    CHECK(scenario_from_json(integral).order.ordered_qty == 20000);

    CHECK(capture(Json::array()).code() == "invalid_type");
}

TEST_CASE("malformed text is a parse error") {
    for (const char* text : {"", "{", "not json", "{\"name\": }"}) {
        try {
            scenario_from_text(text);
            FAIL("accepted " << text);
        } catch (const InputError& e) {
            CHECK(e.code() == "parse_error");
            CHECK(std::string(e.what()).rfind("parse error", 0) == 0);
        }
    }
}

TEST_CASE("evaluation document") {
    const Scenario s = scenario_from_text(kPieceB);
    const auto violations = validate_scenario(s);
    const Json doc = evaluation_document(s, recommend(s), violations);
    CHECK(doc["recommendation"]["strategy"] == "push");
    CHECK(doc["recommendation"]["recommended_extra_qty"] == 20000);
    CHECK(doc["recommendation"]["capacity_cap"] == 24000);
    CHECK(doc["recommendation"]["gain_at_recommendation"].get<double>() ==
          doctest::Approx(178.0821917808219).epsilon(1e-12));
    CHECK(doc["recommendation"]["constraint_trail"].size() == 3);
    CHECK(doc["evaluation"]["push_unit_cost"].get<double>() ==
          doctest::Approx(0.3555479452054795).epsilon(1e-12));
    CHECK(doc["warnings"].size() == 1);
    CHECK(doc["warnings"][0]["code"] == "rate_below_industry_range");
}

TEST_CASE("undefined optionals are null") {
    Scenario s = scenario_from_text(kPieceB);
    s.piece.unit_cost_excl_setup = 0.0;
    s.piece.setup_cost = 0.0;
    const Json doc = to_json(evaluate_target(s));
    CHECK(doc["stocking_rate_threshold"].is_null());
    CHECK(doc["break_even_probability"].is_null());
}

TEST_CASE("sweep spec documents") {
    const SweepSpec spec = sweep_spec_from_json(Json{{"axis", "p"}, {"values", {0.1, 0.5}}});
    CHECK(spec.axis == SweepAxis::sale_probability);
    CHECK(spec.values == std::vector<double>{0.1, 0.5});
    try {
        sweep_spec_from_json(Json{{"axis", "rate"}, {"values", {0.1}}});
        FAIL("accepted axis");
    } catch (const InputError& e) {
        CHECK(e.code() == "invalid_axis");
        CHECK(e.field() == "axis");
        CHECK(std::string(e.what()).find("p, x, days") != std::string::npos);
    }
    try {
        sweep_spec_from_json(Json{{"axis", "p"}, {"values", {0.5, 0.1}}});
        FAIL("accepted values");
    } catch (const InputError& e) {
        CHECK(e.code() == "invalid_values");
    }
}
