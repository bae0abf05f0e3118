#include "mhorizon/simplex.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

#include "mhorizon/errors.hpp"

namespace mhorizon::lp {

const char* status_name(SolveStatus status) noexcept {
    switch (status) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::Infeasible: return "infeasible";
        case SolveStatus::Unbounded: return "unbounded";
        case SolveStatus::IterationLimit: return "iteration-limit";
    }
    return "unknown";
}

namespace {

enum class VarState : char { Basic, AtLower, AtUpper, Free };

struct Eta {
    int pos;
    Eigen::VectorXd column; // column `pos` of the inverse update matrix
};

class Simplex {
public:
    Simplex(const SparseLP& lp, const SimplexOptions& opts)
        : canon_(canonicalize(lp)), opts_(opts) {
        n_ = canon_.n_cols;
        m_ = canon_.n_rows;
        total_ = n_ + m_;
        build_columns();
        build_bounds();
    }

    Solution run();

private:
    SparseLP canon_;
    const SimplexOptions& opts_;
    int n_ = 0, m_ = 0, total_ = 0;

    std::vector<int> col_start_, col_row_; // structural columns, CSC
    std::vector<double> col_val_;

    std::vector<double> lower_, upper_, cost_;
    std::vector<double> x_;
    std::vector<VarState> state_;
    std::vector<int> basic_;     // variable index per basis position
    std::vector<int> basis_pos_; // position in basis or -1
    std::vector<char> skip_;     // columns excluded after pivot breakdown

    Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
    std::vector<Eta> etas_;
    int pivots_since_refactor_ = 0;

    int degenerate_streak_ = 0;
    bool bland_ = false;

    void build_columns() {
        std::vector<int> count(n_, 0);
        for (const Triplet& t : canon_.triplets) ++count[t.col];
        col_start_.assign(n_ + 1, 0);
        for (int j = 0; j < n_; ++j) col_start_[j + 1] = col_start_[j] + count[j];
        col_row_.resize(canon_.triplets.size());
        col_val_.resize(canon_.triplets.size());
        std::vector<int> fill(col_start_.begin(), col_start_.end() - 1);
        for (const Triplet& t : canon_.triplets) {
            col_row_[fill[t.col]] = t.row;
            col_val_[fill[t.col]] = t.value;
            ++fill[t.col];
        }
    }

    void build_bounds() {
        lower_.resize(total_);
        upper_.resize(total_);
        cost_.assign(total_, 0.0);
        for (int j = 0; j < n_; ++j) {
            lower_[j] = canon_.col_lower[j];
            upper_[j] = canon_.col_upper[j];
            cost_[j] = canon_.objective[j];
        }
        for (int r = 0; r < m_; ++r) {
            const int j = n_ + r;
            switch (canon_.row_sense[r]) {
                case Sense::LE: lower_[j] = 0.0; upper_[j] = kInf; break;
                case Sense::GE: lower_[j] = -kInf; upper_[j] = 0.0; break;
                case Sense::EQ: lower_[j] = 0.0; upper_[j] = 0.0; break;
            }
        }
    }

    void scatter_column(int j, Eigen::VectorXd& out) const {
        out.setZero();
        if (j < n_) {
            for (int k = col_start_[j]; k < col_start_[j + 1]; ++k) out[col_row_[k]] = col_val_[k];
        } else {
            out[j - n_] = 1.0;
        }
    }

    double column_dot(int j, const Eigen::VectorXd& y) const {
        if (j >= n_) return y[j - n_];
        double s = 0.0;
        for (int k = col_start_[j]; k < col_start_[j + 1]; ++k) s += col_val_[k] * y[col_row_[k]];
        return s;
    }

    // v <- B^{-1} v through the factorization and the eta file
    void ftran(Eigen::VectorXd& v) const {
        v = lu_.solve(v);
        for (const Eta& e : etas_) {
            const double piv = v[e.pos];
            if (piv == 0.0) continue;
            v += e.column * piv;
            v[e.pos] = e.column[e.pos] * piv;
        }
    }

    // v <- B^{-T} v: etas in reverse, then the transposed factorization
    void btran(Eigen::VectorXd& v) const {
        for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) v[it->pos] = it->column.dot(v);
        // B0 = P^{-1} L U, so B0^T y = v solves as U^T z = v, L^T w = z, y = P^T w
        const auto& plu = lu_.matrixLU();
        Eigen::VectorXd z = plu.triangularView<Eigen::Upper>().transpose().solve(v);
        Eigen::VectorXd w = plu.triangularView<Eigen::UnitLower>().transpose().solve(z);
        v = lu_.permutationP().transpose() * w;
    }

    void refactor() {
        Eigen::MatrixXd B(m_, m_);
        Eigen::VectorXd col(m_);
        for (int i = 0; i < m_; ++i) {
            scatter_column(basic_[i], col);
            B.col(i) = col;
        }
        lu_.compute(B);
        etas_.clear();
        pivots_since_refactor_ = 0;
        recompute_basics();
    }

    void recompute_basics() {
        Eigen::VectorXd r(m_);
        for (int i = 0; i < m_; ++i) r[i] = canon_.rhs[i];
        for (int j = 0; j < total_; ++j) {
            if (state_[j] == VarState::Basic || x_[j] == 0.0) continue;
            if (j < n_) {
                for (int k = col_start_[j]; k < col_start_[j + 1]; ++k)
                    r[col_row_[k]] -= col_val_[k] * x_[j];
            } else {
                r[j - n_] -= x_[j];
            }
        }
        ftran(r);
        for (int i = 0; i < m_; ++i) x_[basic_[i]] = r[i];
    }

    double infeasibility() const {
        double sum = 0.0;
        for (int i = 0; i < m_; ++i) {
            const int j = basic_[i];
            if (x_[j] < lower_[j]) sum += lower_[j] - x_[j];
            if (x_[j] > upper_[j]) sum += x_[j] - upper_[j];
        }
        return sum;
    }

    void phase1_costs(Eigen::VectorXd& cb) const {
        for (int i = 0; i < m_; ++i) {
            const int j = basic_[i];
            if (x_[j] < lower_[j] - opts_.tol)
                cb[i] = -1.0;
            else if (x_[j] > upper_[j] + opts_.tol)
                cb[i] = 1.0;
            else
                cb[i] = 0.0;
        }
    }

    struct Entering {
        int var = -1;
        int direction = 0; // +1 rises off the lower bound, -1 falls off the upper
        double violation = 0.0;
        bool any_skipped = false;
    };

    Entering price(const Eigen::VectorXd& y, bool phase1) const {
        Entering best;
        for (int j = 0; j < total_; ++j) {
            if (state_[j] == VarState::Basic) continue;
            if (lower_[j] == upper_[j]) continue;
            const double cj = phase1 ? 0.0 : cost_[j];
            const double d = cj - column_dot(j, y);
            int dir = 0;
            double viol = 0.0;
            if (state_[j] == VarState::AtLower && d < -opts_.tol) {
                dir = +1;
                viol = -d;
            } else if (state_[j] == VarState::AtUpper && d > opts_.tol) {
                dir = -1;
                viol = d;
            } else if (state_[j] == VarState::Free && std::abs(d) > opts_.tol) {
                dir = d < 0 ? +1 : -1;
                viol = std::abs(d);
            }
            if (dir == 0) continue;
            if (skip_[j]) {
                best.any_skipped = true;
                continue;
            }
            if (bland_) {
                best.var = j;
                best.direction = dir;
                best.violation = viol;
                return best; // smallest index
            }
            if (viol > best.violation) {
                best.var = j;
                best.direction = dir;
                best.violation = viol;
            }
        }
        return best;
    }

    struct RatioResult {
        bool blocked = false;
        bool bound_flip = false;
        int position = -1;
        double step = kInf;
        bool to_upper = false;
    };

    RatioResult ratio_test(int entering, int direction, const Eigen::VectorXd& alpha,
                           bool phase1) const {
        double best_step = kInf;
        double best_pivot = 0.0;
        int best_pos = -1;
        bool best_to_upper = false;

        for (int i = 0; i < m_; ++i) {
            const double rate = -direction * alpha[i]; // d x_basic / d t
            if (std::abs(rate) <= opts_.pivot_tol) continue;
            const int j = basic_[i];
            const double v = x_[j];
            double step = kInf;
            bool to_upper = false;
            if (phase1 && v < lower_[j] - opts_.tol) {
                // infeasible below: blocks when it climbs back to its lower bound
                if (rate > 0) step = (lower_[j] - v) / rate;
            } else if (phase1 && v > upper_[j] + opts_.tol) {
                if (rate < 0) {
                    step = (upper_[j] - v) / rate;
                    to_upper = true;
                }
            } else if (rate > 0 && std::isfinite(upper_[j])) {
                step = (upper_[j] - v) / rate;
                to_upper = true;
            } else if (rate < 0 && std::isfinite(lower_[j])) {
                step = (lower_[j] - v) / rate;
            }
            if (step == kInf) continue;
            if (step < 0) step = 0;
            bool better;
            if (best_pos < 0) {
                better = true;
            } else if (bland_) {
                better = step < best_step - 1e-12 ||
                         (std::abs(step - best_step) <= 1e-12 && j < basic_[best_pos]);
            } else {
                better = step < best_step - 1e-12 ||
                         (std::abs(step - best_step) <= 1e-12 && std::abs(alpha[i]) > best_pivot);
            }
            if (better) {
                best_step = std::min(step, best_step);
                best_pivot = std::abs(alpha[i]);
                best_pos = i;
                best_to_upper = to_upper;
            }
        }

        RatioResult res;
        const double range = upper_[entering] - lower_[entering];
        if (std::isfinite(range) && range < best_step) {
            res.blocked = true;
            res.bound_flip = true;
            res.step = range;
            return res;
        }
        if (best_pos >= 0) {
            res.blocked = true;
            res.position = best_pos;
            res.step = best_step;
            res.to_upper = best_to_upper;
        }
        return res;
    }

    void apply_step(int entering, int direction, const Eigen::VectorXd& alpha, double step) {
        if (step == 0.0) return;
        for (int i = 0; i < m_; ++i) {
            const double rate = -direction * alpha[i];
            if (rate != 0.0) x_[basic_[i]] += rate * step;
        }
        x_[entering] += direction * step;
    }

    void pivot(int entering, int position, const Eigen::VectorXd& alpha, bool to_upper) {
        const int leaving = basic_[position];
        x_[leaving] = to_upper ? upper_[leaving] : lower_[leaving];
        state_[leaving] = to_upper ? VarState::AtUpper : VarState::AtLower;
        basis_pos_[leaving] = -1;

        Eta eta;
        eta.pos = position;
        const double piv = alpha[position];
        eta.column = -alpha / piv;
        eta.column[position] = 1.0 / piv;
        etas_.push_back(std::move(eta));

        basic_[position] = entering;
        basis_pos_[entering] = position;
        state_[entering] = VarState::Basic;
        ++pivots_since_refactor_;
    }

    Solution finish(SolveStatus status, int iterations);
};

Solution Simplex::run() {
    for (int j = 0; j < total_; ++j)
        if (lower_[j] > upper_[j]) {
            x_.assign(total_, 0.0);
            state_.assign(total_, VarState::AtLower);
            basic_.clear();
            return finish(SolveStatus::Infeasible, 0);
        }

    x_.assign(total_, 0.0);
    state_.assign(total_, VarState::AtLower);
    basic_.resize(m_);
    basis_pos_.assign(total_, -1);
    skip_.assign(total_, 0);
    for (int j = 0; j < n_; ++j) {
        if (std::isfinite(lower_[j])) {
            state_[j] = VarState::AtLower;
            x_[j] = lower_[j];
        } else if (std::isfinite(upper_[j])) {
            state_[j] = VarState::AtUpper;
            x_[j] = upper_[j];
        } else {
            state_[j] = VarState::Free;
        }
    }
    for (int r = 0; r < m_; ++r) {
        basic_[r] = n_ + r;
        basis_pos_[n_ + r] = r;
        state_[n_ + r] = VarState::Basic;
    }

    if (m_ == 0) {
        for (int j = 0; j < n_; ++j) {
            if (cost_[j] > 0.0) {
                if (!std::isfinite(lower_[j])) return finish(SolveStatus::Unbounded, 0);
                x_[j] = lower_[j];
            } else if (cost_[j] < 0.0) {
                if (!std::isfinite(upper_[j])) return finish(SolveStatus::Unbounded, 0);
                x_[j] = upper_[j];
            }
        }
        return finish(SolveStatus::Optimal, 0);
    }

    refactor();

    bool phase1 = infeasibility() > opts_.tol;
    int iter = 0;
    Eigen::VectorXd y(m_), cb(m_), alpha(m_);

    while (true) {
        if (iter >= opts_.max_iters) return finish(SolveStatus::IterationLimit, iter);
        if (pivots_since_refactor_ >= opts_.refactor_every) refactor();

        if (phase1 && infeasibility() <= opts_.tol) {
            phase1 = false;
            degenerate_streak_ = 0;
            bland_ = false;
        }

        if (phase1)
            phase1_costs(cb);
        else
            for (int i = 0; i < m_; ++i) cb[i] = cost_[basic_[i]];
        y = cb;
        btran(y);

        Entering ent = price(y, phase1);
        if (ent.var < 0) {
            if (ent.any_skipped)
                fail(Errc::NumericalBreakdown,
                     "all improving columns rejected by the pivot threshold");
            if (phase1) {
                if (infeasibility() > 10 * opts_.tol) return finish(SolveStatus::Infeasible, iter);
                phase1 = false;
                continue;
            }
            return finish(SolveStatus::Optimal, iter);
        }

        scatter_column(ent.var, alpha);
        ftran(alpha);

        RatioResult ratio = ratio_test(ent.var, ent.direction, alpha, phase1);
        if (!ratio.blocked) {
            if (phase1)
                fail(Errc::NumericalBreakdown, "phase-1 direction lost every blocking pivot");
            return finish(SolveStatus::Unbounded, iter);
        }

        ++iter;
        if (ratio.step <= opts_.tol * 1e-2) {
            if (++degenerate_streak_ >= opts_.bland_after) bland_ = true;
        } else {
            degenerate_streak_ = 0;
            bland_ = false;
        }

        if (ratio.bound_flip) {
            apply_step(ent.var, ent.direction, alpha, ratio.step);
            x_[ent.var] = ent.direction > 0 ? upper_[ent.var] : lower_[ent.var];
            state_[ent.var] = ent.direction > 0 ? VarState::AtUpper : VarState::AtLower;
            std::fill(skip_.begin(), skip_.end(), 0);
            continue;
        }

        if (std::abs(alpha[ratio.position]) < opts_.pivot_tol) {
            if (!etas_.empty()) {
                refactor(); // stale inverse may be to blame; retry
                continue;
            }
            skip_[ent.var] = 1; // fresh basis and still no usable pivot
            continue;
        }

        apply_step(ent.var, ent.direction, alpha, ratio.step);
        pivot(ent.var, ratio.position, alpha, ratio.to_upper);
        std::fill(skip_.begin(), skip_.end(), 0);
    }
}

Solution Simplex::finish(SolveStatus status, int iterations) {
    Solution sol;
    sol.status = status;
    sol.iterations = iterations;
    sol.x.assign(x_.begin(), x_.begin() + n_);
    sol.y.assign(m_, 0.0);
    sol.reduced_cost.assign(n_, 0.0);

    double z = 0.0;
    for (int j = 0; j < n_; ++j) z += cost_[j] * sol.x[j];
    sol.objective = z;

    if (status != SolveStatus::Optimal && status != SolveStatus::IterationLimit) return sol;

    if (m_ > 0 && !basic_.empty()) {
        Eigen::VectorXd cb(m_);
        for (int i = 0; i < m_; ++i) cb[i] = cost_[basic_[i]];
        Eigen::VectorXd y = cb;
        btran(y);
        for (int r = 0; r < m_; ++r) sol.y[r] = y[r];
        for (int j = 0; j < n_; ++j)
            sol.reduced_cost[j] = state_[j] == VarState::Basic ? 0.0 : cost_[j] - column_dot(j, y);
    } else {
        for (int j = 0; j < n_; ++j) sol.reduced_cost[j] = cost_[j];
    }

    std::vector<double> activity(m_, 0.0);
    for (int j = 0; j < n_; ++j) {
        if (sol.x[j] == 0.0) continue;
        for (int k = col_start_[j]; k < col_start_[j + 1]; ++k)
            activity[col_row_[k]] += col_val_[k] * sol.x[j];
    }
    double pres = 0.0;
    for (int r = 0; r < m_; ++r) {
        const double diff = activity[r] - canon_.rhs[r];
        switch (canon_.row_sense[r]) {
            case Sense::LE: pres = std::max(pres, diff); break;
            case Sense::GE: pres = std::max(pres, -diff); break;
            case Sense::EQ: pres = std::max(pres, std::abs(diff)); break;
        }
    }
    for (int j = 0; j < n_; ++j) {
        pres = std::max(pres, lower_[j] - sol.x[j]);
        pres = std::max(pres, sol.x[j] - upper_[j]);
    }
    sol.max_primal_residual = std::max(0.0, pres);

    double dres = 0.0;
    for (int j = 0; j < n_; ++j) {
        const double d = sol.reduced_cost[j];
        switch (state_[j]) {
            case VarState::AtLower: dres = std::max(dres, -d); break;
            case VarState::AtUpper: dres = std::max(dres, d); break;
            case VarState::Free: dres = std::max(dres, std::abs(d)); break;
            case VarState::Basic: break;
        }
    }
    sol.max_dual_residual = std::max(0.0, dres);
    return sol;
}

} // namespace

Solution solve_simplex(const SparseLP& lp, const SimplexOptions& opts) {
    Simplex solver(lp, opts);
    return solver.run();
}

} // namespace mhorizon::lp
