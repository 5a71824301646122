#include <algorithm>
#include <array>
#include <cmath>

#include "lotwise/format.hpp"
#include "lotwise/scenario.hpp"

namespace lotwise {

namespace {

constexpr double kCurrencyTolerance = 0.01;
constexpr double kRateTolerance = 0.001;

// Printed figures of the two published result tables, by P = 10%..100%.
struct PrintedTable {
    double pull_unit_cost;
    double period_rate;
    double push_unit_cost;
    double threshold;
    bool push_cost_erratum;
    bool threshold_erratum;
    std::array<double, 10> expected_result;
    std::array<double, 10> expected_loss;
    std::array<double, 10> gain;
};

const PrintedTable kPieceA{
    0.074, 0.037, 0.068, 0.225, false, false,
    {22.56, 45.12, 67.68, 90.25, 112.81, 135.37, 157.93, 180.49, 203.05, 225.62},
    {1119.95, 995.51, 871.07, 746.63, 622.19, 497.75, 373.32, 248.88, 124.44, 0.0},
    {-1097.38, -950.38, -803.38, -656.38, -509.38, -362.38, -215.38, -68.38, 78.62, 225.62},
};

// CR 0.333 and threshold 35.55% do not follow from CS 2000, CU 0.3,
// QC = X = 20000 (recomputed: 0.3555 and 33.33%).
const PrintedTable kPieceB{
    0.400, 0.037, 0.333, 0.3555, true, true,
    {177.81, 355.62, 533.42, 711.23, 889.04, 1066.85, 1244.66, 1422.47, 1600.27, 1778.08},
    {5599.73, 4977.53, 4355.34, 3733.15, 3110.96, 2488.77, 1866.58, 1244.38, 622.19, 0.0},
    {-5421.92, -4621.92, -3821.92, -3021.92, -2221.92, -1421.92, -621.92, 178.08, 978.08, 1778.08},
};

bool agrees(CellKind kind, double computed, double printed) {
    switch (kind) {
        case CellKind::currency: return std::abs(computed - printed) <= kCurrencyTolerance;
        case CellKind::unit_cost: return round_half_away(computed, 3) == round_half_away(printed, 3);
        case CellKind::rate: return std::abs(computed - printed) <= kRateTolerance;
    }
    return false;
}

FixtureCell make_cell(std::string row, std::optional<double> p, CellKind kind, double computed,
                      double printed, bool documented_erratum) {
    FixtureCell cell{std::move(row), p, kind, computed, printed, documented_erratum,
                     CellStatus::match};
    const bool ok = agrees(kind, computed, printed);
    if (documented_erratum) {
        cell.status = ok ? CellStatus::mismatch : CellStatus::erratum;
    } else {
        cell.status = ok ? CellStatus::match : CellStatus::mismatch;
    }
    return cell;
}

}  // namespace

const char* to_string(CellStatus status) noexcept {
    switch (status) {
        case CellStatus::match: return "match";
        case CellStatus::erratum: return "erratum";
        case CellStatus::mismatch: return "MISMATCH";
    }
    return "?";
}

std::optional<ReferencePiece> parse_reference_piece(std::string_view text) {
    if (text == "a") return ReferencePiece::a;
    if (text == "b") return ReferencePiece::b;
    return std::nullopt;
}

Scenario reference_scenario(ReferencePiece piece) {
    Scenario s;
    if (piece == ReferencePiece::a) {
        s.name = "piece-a";
        s.piece = {"a", 270.0, 0.06, 0.3, 20000};
        s.forecast = {0.9, 20000};
        s.capacity = {2000.0};
    } else {
        s.name = "piece-b";
        s.piece = {"b", 2000.0, 0.3, 0.5, 20000};
        s.forecast = {0.8, 20000};
        s.capacity = {12000.0};
    }
    s.order = {20000};
    s.holding = {0.09, 150.0};
    return s;
}

int GoldenFixture::errata() const {
    return static_cast<int>(std::count_if(cells.begin(), cells.end(), [](const FixtureCell& c) {
        return c.status == CellStatus::erratum;
    }));
}

int GoldenFixture::mismatches() const {
    return static_cast<int>(std::count_if(cells.begin(), cells.end(), [](const FixtureCell& c) {
        return c.status == CellStatus::mismatch;
    }));
}

bool GoldenFixture::consistent() const { return mismatches() == 0; }

GoldenFixture golden_fixture(ReferencePiece piece) {
    const PrintedTable& printed = piece == ReferencePiece::a ? kPieceA : kPieceB;

    GoldenFixture fx;
    fx.piece = piece;
    fx.scenario = reference_scenario(piece);

    SweepSpec spec{SweepAxis::sale_probability, {}};
    for (int k = 1; k <= 10; ++k) spec.values.push_back(k / 10.0);
    fx.table = run_sweep(fx.scenario, spec);

    // rows that do not depend on P are reported once
    const PushEvaluation& first = fx.table.rows.front().evaluation;
    fx.cells.push_back(make_cell("pull unit cost", std::nullopt, CellKind::unit_cost,
                                 first.pull_unit_cost, printed.pull_unit_cost, false));
    fx.cells.push_back(make_cell("period holding rate", std::nullopt, CellKind::rate,
                                 first.period_rate, printed.period_rate, false));
    fx.cells.push_back(make_cell("push unit cost", std::nullopt, CellKind::unit_cost,
                                 first.push_unit_cost, printed.push_unit_cost,
                                 printed.push_cost_erratum));
    fx.cells.push_back(make_cell("stocking rate threshold", std::nullopt, CellKind::rate,
                                 first.stocking_rate_threshold.value_or(0.0), printed.threshold,
                                 printed.threshold_erratum));

    for (std::size_t k = 0; k < fx.table.rows.size(); ++k) {
        const auto& row = fx.table.rows[k];
        fx.cells.push_back(make_cell("expected result if sold", row.axis_value, CellKind::currency,
                                     row.evaluation.expected_result_if_sold,
                                     printed.expected_result[k], false));
        fx.cells.push_back(make_cell("expected loss if unsold", row.axis_value, CellKind::currency,
                                     row.evaluation.expected_loss_if_unsold,
                                     printed.expected_loss[k], false));
        fx.cells.push_back(make_cell("expected gain", row.axis_value, CellKind::currency,
                                     row.evaluation.expected_gain, printed.gain[k], false));
    }
    return fx;
}

}  // namespace lotwise
