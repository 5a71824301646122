#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lotwise/decision.hpp"

namespace lotwise {

struct Scenario {
    std::string name;
    PieceProfile piece;
    OrderContext order;
    HoldingPolicy holding;
    SaleForecast forecast;
    CapacityWindow capacity;
    std::optional<double> annual_demand;  // EOQ baseline only
};

enum class Severity { error, advisory };

struct Violation {
    std::string code;
    std::string field;  // dotted path in the scenario document
    std::string message;
    Severity severity = Severity::error;
};

/// Every violated invariant plus non-fatal advisories. Never throws.
std::vector<Violation> validate_scenario(const Scenario& s);

bool has_errors(const std::vector<Violation>& violations);

/// Evaluates the scenario's own target quantity, without capacity or lot
/// constraints.
PushEvaluation evaluate_target(const Scenario& s);

/// recommend() applied to the scenario's components.
Recommendation recommend(const Scenario& s);

// ---- sweeps ----------------------------------------------------------------

enum class SweepAxis { sale_probability, extra_qty, storage_days };

const char* to_string(SweepAxis axis) noexcept;

/// Accepts the long names and the short aliases p, x and days.
std::optional<SweepAxis> parse_sweep_axis(std::string_view text);

struct SweepSpec {
    SweepAxis axis = SweepAxis::sale_probability;
    std::vector<double> values;
};

struct SweepRow {
    double axis_value = 0.0;
    PushEvaluation evaluation;
};

struct SweepTable {
    std::string scenario_name;
    SweepAxis axis = SweepAxis::sale_probability;
    std::vector<SweepRow> rows;
};

/// Throws DomainError naming the first problem: empty list, values not
/// strictly increasing, or a value outside the axis domain.
void validate_sweep(const SweepSpec& spec);

/// One evaluation per axis value with every other parameter held fixed.
SweepTable run_sweep(const Scenario& s, const SweepSpec& spec);

/// Start, end and step expanded into a grid that includes `end` when it
/// lies on the grid (within a small fraction of the step).
std::vector<double> expand_range(double start, double end, double step);

// ---- EOQ baseline ----------------------------------------------------------

/// Wilson lot size round(sqrt(2*A*CS / (CU*i))) with holding CU*i per
/// piece-year.
Pieces eoq_lot_size(double annual_demand, double setup_cost, double unit_cost,
                    double annual_rate);

struct EoqComparison {
    Pieces eoq_qty = 0;
    /// Push unit cost at X = max(eoq_qty - QC, 0).
    double eoq_unit_cost = 0.0;
    Pieces eoq_extra_qty = 0;              // before capacity and lot rounding
    Pieces eoq_constrained_extra_qty = 0;  // after
    double eoq_gain = 0.0;
    Pieces model_recommended_qty = 0;
    double model_gain = 0.0;
    double delta_expected_gain = 0.0;  // model_gain - eoq_gain
};

EoqComparison compare_to_eoq(const Scenario& s);

// ---- reference fixtures ----------------------------------------------------

enum class ReferencePiece { a, b };

std::optional<ReferencePiece> parse_reference_piece(std::string_view text);

/// The two worked shop cases: piece a (CS 270, CU 0.06, TC 0.3, TD 2000,
/// P 0.9) and piece b (CS 2000, CU 0.3, TC 0.5, TD 12000, P 0.8); both
/// QC = X = 20000, lots of 20000, 9%/year held 150 days.
Scenario reference_scenario(ReferencePiece piece);

enum class CellKind { currency, unit_cost, rate };
enum class CellStatus { match, erratum, mismatch };

const char* to_string(CellStatus status) noexcept;

struct FixtureCell {
    std::string row;
    std::optional<double> sale_probability;  // empty for rows constant across P
    CellKind kind = CellKind::currency;
    double computed = 0.0;
    double printed = 0.0;
    /// The printed value is known not to follow from the inputs.
    bool documented_erratum = false;
    CellStatus status = CellStatus::match;
};

struct GoldenFixture {
    ReferencePiece piece = ReferencePiece::a;
    Scenario scenario;
    SweepTable table;
    std::vector<FixtureCell> cells;

    int errata() const;
    int mismatches() const;
    /// No unexpected mismatch and every documented erratum still differs.
    bool consistent() const;
};

/// Live recomputation of the published result table for one piece, each
/// cell compared with the printed figure.
GoldenFixture golden_fixture(ReferencePiece piece);

}  // namespace lotwise
