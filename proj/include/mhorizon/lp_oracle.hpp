#pragma once

#include <vector>

#include "mhorizon/sparse_lp.hpp"

namespace mhorizon::lp {

struct OracleResult {
    bool feasible = false;
    double objective = 0.0;
    std::vector<double> point;
};

// Brute-force reference for small LPs: enumerates every basic point formed
// by n active constraints chosen from the rows (taken as equalities) and
// finite variable bounds, filters the feasible ones, and returns the best
// objective. Independent of the simplex code path. Throws TooLarge beyond
// 10 columns / 12 rows.
OracleResult vertex_enumeration_oracle(const SparseLP& lp);

} // namespace mhorizon::lp
