#include "mhorizon/lp_oracle.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "mhorizon/errors.hpp"

namespace mhorizon::lp {

namespace {

constexpr double kFeasTol = 1e-9;

struct ActiveConstraint {
    Eigen::VectorXd coeffs;
    double rhs;
};

bool point_feasible(const SparseLP& lp, const std::vector<Eigen::VectorXd>& rows,
                    const Eigen::VectorXd& x) {
    for (int j = 0; j < lp.n_cols; ++j) {
        const double scale = 1.0 + std::abs(x[j]);
        if (x[j] < lp.col_lower[j] - kFeasTol * scale) return false;
        if (x[j] > lp.col_upper[j] + kFeasTol * scale) return false;
    }
    for (int r = 0; r < lp.n_rows; ++r) {
        const double ax = rows[r].dot(x);
        const double scale = 1.0 + std::abs(lp.rhs[r]);
        switch (lp.row_sense[r]) {
            case Sense::LE:
                if (ax > lp.rhs[r] + kFeasTol * scale) return false;
                break;
            case Sense::GE:
                if (ax < lp.rhs[r] - kFeasTol * scale) return false;
                break;
            case Sense::EQ:
                if (std::abs(ax - lp.rhs[r]) > kFeasTol * scale) return false;
                break;
        }
    }
    return true;
}

} // namespace

OracleResult vertex_enumeration_oracle(const SparseLP& input) {
    const SparseLP lp = canonicalize(input);
    if (lp.n_cols > 10 || lp.n_rows > 12)
        fail(Errc::TooLarge, "oracle limited to 10 columns and 12 rows, got " +
                                 std::to_string(lp.n_cols) + "x" + std::to_string(lp.n_rows));
    const int n = lp.n_cols;

    std::vector<Eigen::VectorXd> rows(lp.n_rows, Eigen::VectorXd::Zero(n));
    for (const Triplet& t : lp.triplets) rows[t.row][t.col] = t.value;

    std::vector<ActiveConstraint> candidates;
    for (int r = 0; r < lp.n_rows; ++r) candidates.push_back({rows[r], lp.rhs[r]});
    for (int j = 0; j < n; ++j) {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
        e[j] = 1.0;
        if (std::isfinite(lp.col_lower[j])) candidates.push_back({e, lp.col_lower[j]});
        if (std::isfinite(lp.col_upper[j]) && lp.col_upper[j] != lp.col_lower[j])
            candidates.push_back({e, lp.col_upper[j]});
    }

    Eigen::VectorXd objective = Eigen::VectorXd::Zero(n);
    for (int j = 0; j < n; ++j) objective[j] = lp.objective[j];

    OracleResult best;
    const int m = static_cast<int>(candidates.size());
    if (n == 0) {
        best.feasible = true; // vacuous: no columns, rows must hold with ax = 0
        for (int r = 0; r < lp.n_rows; ++r) {
            const double scale = 1.0 + std::abs(lp.rhs[r]);
            bool ok = true;
            switch (lp.row_sense[r]) {
                case Sense::LE: ok = 0.0 <= lp.rhs[r] + kFeasTol * scale; break;
                case Sense::GE: ok = 0.0 >= lp.rhs[r] - kFeasTol * scale; break;
                case Sense::EQ: ok = std::abs(lp.rhs[r]) <= kFeasTol * scale; break;
            }
            if (!ok) best.feasible = false;
        }
        return best;
    }

    std::vector<int> pick(n);
    // Enumerate all n-subsets of the candidate constraints.
    auto evaluate = [&]() {
        Eigen::MatrixXd A(n, n);
        Eigen::VectorXd b(n);
        for (int k = 0; k < n; ++k) {
            A.row(k) = candidates[pick[k]].coeffs.transpose();
            b[k] = candidates[pick[k]].rhs;
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
        lu.setThreshold(1e-10);
        if (lu.rank() < n) return;
        Eigen::VectorXd x = lu.solve(b);
        if (!x.allFinite()) return;
        if (!point_feasible(lp, rows, x)) return;
        const double z = objective.dot(x);
        if (!best.feasible || z < best.objective) {
            best.feasible = true;
            best.objective = z;
            best.point.assign(x.data(), x.data() + n);
        }
    };

    // Iterative combination generator to keep the stack shallow.
    if (m >= n) {
        for (int k = 0; k < n; ++k) pick[k] = k;
        while (true) {
            evaluate();
            int k = n - 1;
            while (k >= 0 && pick[k] == m - n + k) --k;
            if (k < 0) break;
            ++pick[k];
            for (int j = k + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return best;
}

} // namespace mhorizon::lp
