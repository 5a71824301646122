#pragma once

// Push-vs-pull decision model for a make-to-order shop.
//
// Symbols used in the comments below:
//   CS  setup (changeover) cost          CU  unit cost excluding setup
//   QC  ordered quantity                 X   speculative extra quantity
//   i   holding rate for the period      P   probability the extra lot sells
//   TD  free minutes on the bottleneck   TC  cycle time per piece
//
// Every function is pure. Domain violations throw lotwise::DomainError.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lotwise/error.hpp"

namespace lotwise {

using Pieces = std::int64_t;

struct PieceProfile {
    std::string id;
    double setup_cost = 0.0;            // CS
    double unit_cost_excl_setup = 0.0;  // CU
    double cycle_time_min = 1.0;        // TC
    Pieces lot_multiple = 1;
};

struct OrderContext {
    Pieces ordered_qty = 1;  // QC, delivered immediately, never held
};

struct HoldingPolicy {
    double annual_rate = 0.0;  // fraction per year
    double storage_days = 365.0;
};

struct SaleForecast {
    double sale_probability = 0.0;  // all-or-nothing sale of the extra lot
    Pieces target_extra_qty = 0;
};

struct CapacityWindow {
    double available_min = 0.0;
};

struct PushEvaluation {
    Pieces extra_qty = 0;
    double period_rate = 0.0;
    double pull_unit_cost = 0.0;
    double push_unit_cost = 0.0;
    double holding_cost_total = 0.0;
    /// Empty when CU = 0 (no holding rate can raise the unit cost).
    std::optional<double> stocking_rate_threshold;
    double result_if_sold_certain = 0.0;
    double expected_result_if_sold = 0.0;
    double expected_loss_if_unsold = 0.0;
    double expected_gain = 0.0;
    /// Empty when CS + CU*X = 0 (gain identically zero in P).
    std::optional<double> break_even_probability;
};

enum class Strategy { pull, push };

enum class SlopeSign { decreasing, flat, increasing };

enum class Constraint { requested, capacity, lot_multiple, expected_gain };

struct ConstraintStep {
    Constraint constraint = Constraint::requested;
    Pieces before = 0;
    Pieces after = 0;
};

struct Recommendation {
    Strategy strategy = Strategy::pull;
    Pieces recommended_extra_qty = 0;
    Pieces capacity_cap = 0;
    Pieces lot_rounded_qty = 0;
    bool economic_ok = false;
    /// Gain of the speculative lot actually recommended; 0 for pull.
    double gain_at_recommendation = 0.0;
    std::vector<ConstraintStep> constraint_trail;
    /// Full evaluation at the capacity-capped, lot-rounded quantity.
    PushEvaluation evaluation;
};

const char* to_string(Strategy s) noexcept;
const char* to_string(SlopeSign s) noexcept;
const char* to_string(Constraint c) noexcept;

// ---- unit cost -------------------------------------------------------------

/// Unit cost when producing exactly the order: (CS + CU*QC) / QC.
double pull_unit_cost(double setup_cost, double unit_cost, Pieces ordered_qty);

/// Inverse of pull_unit_cost: CU = CR - CS/QC.
double derive_unit_cost(double quoted_unit_cost, double setup_cost, Pieces ordered_qty);

/// Linear day-count proration of an annual holding rate.
double period_holding_rate(double annual_rate, double storage_days);

/// Holding cost of the extra pieces over the period: (CU*X)*i.
/// The setup cost is not held; it is sold with the ordered pieces.
double holding_cost(double unit_cost, Pieces extra_qty, double period_rate);

/// Unit cost over QC + X pieces including holding of the X extra pieces:
/// (CU*X*(i+1) + QC*CU + CS) / (QC + X).
double push_unit_cost(double setup_cost, double unit_cost, Pieces ordered_qty, Pieces extra_qty,
                      double period_rate);

/// Sign of d(push_unit_cost)/dX, i.e. of i*CU*QC - CS. Independent of X.
SlopeSign cost_slope_sign(double setup_cost, double unit_cost, Pieces ordered_qty,
                          double period_rate);

/// Largest period holding rate at which stocking does not raise the unit
/// cost: CS / (QC*CU).
double stocking_rate_threshold(double setup_cost, double unit_cost, Pieces ordered_qty);

// ---- expected gain ---------------------------------------------------------

/// R = CS - CP. Negative when holding eats the saved setup.
double result_if_sold_certain(double setup_cost, double holding_cost_total);

/// R' = (CS - (CU*X)*i) * P.
double expected_result_if_sold(double setup_cost, double unit_cost, Pieces extra_qty,
                               double period_rate, double sale_probability);

/// PR = CU*X*(1+i) * (1-P): the unsold lot is written off with its holding.
double expected_loss_if_unsold(double unit_cost, Pieces extra_qty, double period_rate,
                               double sale_probability);

/// G = R' - PR.
double expected_gain(double expected_result, double expected_loss);

/// P* with G(P*) = 0, i.e. CU*X*(1+i) / (CS + CU*X), clamped to [0, 1].
double break_even_probability(double setup_cost, double unit_cost, Pieces extra_qty,
                              double period_rate);

// ---- capacity and decision -------------------------------------------------

/// Largest X with X*TC <= TD.
Pieces capacity_cap(double available_min, double cycle_time_min);

/// Largest multiple of `lot_multiple` not above `qty` (0 if none).
Pieces floor_to_lot(Pieces qty, Pieces lot_multiple);

/// Every model quantity at one extra quantity X.
PushEvaluation evaluate_push(const PieceProfile& piece, const OrderContext& order,
                             const HoldingPolicy& holding, double sale_probability,
                             Pieces extra_qty);

/// Caps the target quantity by bottleneck capacity, floors it to the lot
/// multiple, evaluates the gain there and pushes only on strictly positive
/// gain.
Recommendation recommend(const PieceProfile& piece, const OrderContext& order,
                         const HoldingPolicy& holding, const SaleForecast& forecast,
                         const CapacityWindow& capacity);

}  // namespace lotwise
