#include "mhorizon/solution_check.hpp"

#include <cmath>

#include "mhorizon/errors.hpp"

namespace mhorizon::lp {

ResidualReport check_solution(const SparseLP& input, const Solution& sol) {
    const SparseLP lp = canonicalize(input);
    if (static_cast<int>(sol.x.size()) != lp.n_cols ||
        static_cast<int>(sol.y.size()) != lp.n_rows)
        fail(Errc::DimensionMismatch,
             "solution sized " + std::to_string(sol.x.size()) + "x" + std::to_string(sol.y.size()) +
                 " against LP " + std::to_string(lp.n_cols) + "x" + std::to_string(lp.n_rows));

    ResidualReport rep;
    rep.row_residual.assign(lp.n_rows, 0.0);

    std::vector<double> activity(lp.n_rows, 0.0);
    for (const Triplet& t : lp.triplets) activity[t.row] += t.value * sol.x[t.col];

    for (int r = 0; r < lp.n_rows; ++r) {
        const double diff = activity[r] - lp.rhs[r];
        double viol = 0.0;
        double slack = 0.0;
        switch (lp.row_sense[r]) {
            case Sense::LE: viol = diff; slack = -diff; break;
            case Sense::GE: viol = -diff; slack = diff; break;
            case Sense::EQ: viol = std::abs(diff); slack = 0.0; break;
        }
        rep.row_residual[r] = viol;
        rep.max_row_residual = std::max(rep.max_row_residual, viol);
        rep.complementarity_gap =
            std::max(rep.complementarity_gap, std::abs(sol.y[r]) * std::max(slack, 0.0));
    }

    double primal = 0.0;
    for (int j = 0; j < lp.n_cols; ++j) {
        primal += lp.objective[j] * sol.x[j];
        if (std::isfinite(lp.col_lower[j]))
            rep.max_bound_violation = std::max(rep.max_bound_violation, lp.col_lower[j] - sol.x[j]);
        if (std::isfinite(lp.col_upper[j]))
            rep.max_bound_violation = std::max(rep.max_bound_violation, sol.x[j] - lp.col_upper[j]);
    }
    rep.primal_objective = primal;

    // Dual objective for bounded columns: y^T b plus each column's reduced
    // cost applied at the bound it pins. A reduced cost pushing against an
    // infinite bound is a dual infeasibility; it surfaces through the gap.
    std::vector<double> reduced(lp.objective.begin(), lp.objective.end());
    for (const Triplet& t : lp.triplets) reduced[t.col] -= sol.y[t.row] * t.value;

    double dual = 0.0;
    for (int r = 0; r < lp.n_rows; ++r) dual += sol.y[r] * lp.rhs[r];
    for (int j = 0; j < lp.n_cols; ++j) {
        const double d = reduced[j];
        if (d > 0.0) {
            if (std::isfinite(lp.col_lower[j])) {
                dual += d * lp.col_lower[j];
                rep.complementarity_gap = std::max(
                    rep.complementarity_gap, d * std::abs(sol.x[j] - lp.col_lower[j]));
            }
        } else if (d < 0.0) {
            if (std::isfinite(lp.col_upper[j])) {
                dual += d * lp.col_upper[j];
                rep.complementarity_gap = std::max(
                    rep.complementarity_gap, -d * std::abs(lp.col_upper[j] - sol.x[j]));
            }
        }
    }
    rep.dual_objective = dual;
    rep.duality_gap = std::abs(primal - dual);
    return rep;
}

} // namespace mhorizon::lp
