#pragma once

#include <string>
#include <vector>

#include "mhorizon/sparse_lp.hpp"

namespace mhorizon::lp {

enum class SolveStatus { Optimal, Infeasible, Unbounded, IterationLimit };

const char* status_name(SolveStatus status) noexcept;

struct SimplexOptions {
    int max_iters = 50000;
    double tol = 1e-7;        // internal feasibility/optimality tolerance
    double pivot_tol = 1e-10; // smallest acceptable pivot magnitude
    int refactor_every = 100; // pivots between basis refactorizations
    int bland_after = 50;     // consecutive degenerate pivots before Bland's rule
};

struct Solution {
    SolveStatus status = SolveStatus::IterationLimit;
    std::vector<double> x;            // primal values per column
    std::vector<double> y;            // dual value per row
    std::vector<double> reduced_cost; // per column
    double objective = 0.0;
    int iterations = 0;
    double max_primal_residual = 0.0;
    double max_dual_residual = 0.0;
};

// Primal simplex over bounded variables with a product-form basis inverse.
// Deterministic: Dantzig pricing, Bland's rule after a degeneracy streak,
// no randomness or time dependence. Phase 1 minimizes total bound
// infeasibility of the logical basis.
Solution solve_simplex(const SparseLP& lp, const SimplexOptions& opts = {});

} // namespace mhorizon::lp
