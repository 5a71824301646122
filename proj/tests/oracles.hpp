#pragma once

// Independent reference computations for the test suites. Nothing here
// calls into the library's arithmetic; each oracle re-derives its answer
// from the raw model expressions by a different route.

#include <cmath>
#include <cstdint>
#include <algorithm>
#include <functional>
#include <limits>
#include <random>

namespace lotwise::oracle {

// Unit cost expressed as setup amortization plus holding share.
inline double push_cost_form_a(double cs, double cu, double qc, double x, double i) {
    const double cp = (cu * x) * i;
    return (cs + cu * (qc + x)) / (qc + x) + cp / (qc + x);
}

inline double push_cost_form_b(double cs, double cu, double qc, double x, double i) {
    return (cs + cu * (qc + x)) / (qc + x) + ((cu * x) * i) / (qc + x);
}

// Gain written directly from the sold / unsold scenario outcomes.
inline double gain_by_outcomes(double cs, double cu, double x, double i, double p) {
    const double if_sold = cs - cu * x * i;
    const double if_unsold = -(cu * x * (1.0 + i));
    return p * if_sold + (1.0 - p) * if_unsold;
}

/// Bisection for the root of an increasing function on [lo, hi].
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     int iterations = 200) {
    for (int k = 0; k < iterations; ++k) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Integer Q minimizing A/Q*CS + Q/2*CU*i over [1, q_max] by enumeration.
inline std::int64_t eoq_grid_search(double annual_demand, double cs, double cu, double i_annual,
                                    std::int64_t q_max = 200000) {
    std::int64_t best_q = 1;
    double best_cost = std::numeric_limits<double>::infinity();
    for (std::int64_t q = 1; q <= q_max; ++q) {
        const double qd = static_cast<double>(q);
        const double cost = annual_demand / qd * cs + qd / 2.0 * cu * i_annual;
        if (cost < best_cost) {
            best_cost = cost;
            best_q = q;
        }
    }
    return best_q;
}

/// Largest integer count n with n*tc <= td, found by stepping.
inline std::int64_t capacity_by_counting(double td, double tc) {
    auto n = static_cast<std::int64_t>(td / tc) + 2;
    while (n > 0 && static_cast<double>(n) * tc > td) --n;
    return n;
}

inline bool rel_close(double a, double b, double rel) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= rel * scale;
}

}  // namespace lotwise::oracle
