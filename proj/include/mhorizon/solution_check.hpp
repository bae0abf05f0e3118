#pragma once

#include <vector>

#include "mhorizon/simplex.hpp"
#include "mhorizon/sparse_lp.hpp"

namespace mhorizon::lp {

struct ResidualReport {
    double max_row_residual = 0.0;     // worst sense violation across rows
    double max_bound_violation = 0.0;  // worst column bound violation
    double duality_gap = 0.0;          // |primal objective - dual objective|
    double complementarity_gap = 0.0;  // worst |dual| * |slack| product
    double primal_objective = 0.0;
    double dual_objective = 0.0;
    std::vector<double> row_residual;  // signed violation per row (>0 = violated)

    bool within(double tol) const {
        return max_row_residual <= tol && max_bound_violation <= tol &&
               duality_gap <= tol * (1.0 + std::abs(primal_objective));
    }
};

// Recomputes residuals, the dual objective from sol.y, and complementary
// slackness gaps. Throws DimensionMismatch when sol does not fit lp.
ResidualReport check_solution(const SparseLP& lp, const Solution& sol);

} // namespace mhorizon::lp
