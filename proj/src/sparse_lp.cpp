#include "mhorizon/sparse_lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "mhorizon/errors.hpp"

namespace mhorizon::lp {

int SparseLP::add_col(const std::string& cname, double lower, double upper, double obj) {
    if (lower > upper)
        fail(Errc::DimensionMismatch, "column '" + cname + "' has lower bound above upper bound");
    col_name.push_back(cname);
    col_lower.push_back(lower);
    col_upper.push_back(upper);
    objective.push_back(obj);
    return n_cols++;
}

int SparseLP::add_row(const std::string& rname, Sense sense, double rhs_value) {
    row_name.push_back(rname);
    row_sense.push_back(sense);
    rhs.push_back(rhs_value);
    return n_rows++;
}

void SparseLP::add_coeff(int row, int col, double value) {
    triplets.push_back({row, col, value});
}

bool SparseLP::equals(const SparseLP& other) const {
    return name == other.name && n_cols == other.n_cols && n_rows == other.n_rows &&
           objective == other.objective && triplets == other.triplets &&
           row_sense == other.row_sense && rhs == other.rhs &&
           col_lower == other.col_lower && col_upper == other.col_upper &&
           col_name == other.col_name && row_name == other.row_name;
}

SparseLP canonicalize(const SparseLP& input) {
    SparseLP out = input;
    for (const Triplet& t : out.triplets) {
        if (t.row < 0 || t.row >= out.n_rows || t.col < 0 || t.col >= out.n_cols)
            fail(Errc::DimensionMismatch, "triplet index (" + std::to_string(t.row) + "," +
                                              std::to_string(t.col) + ") out of range");
        if (!std::isfinite(t.value))
            fail(Errc::NonFiniteCoefficient, "at (" + std::to_string(t.row) + "," +
                                                 std::to_string(t.col) + ")");
    }
    for (double r : out.rhs)
        if (!std::isfinite(r)) fail(Errc::NonFiniteCoefficient, "non-finite rhs");
    for (double c : out.objective)
        if (!std::isfinite(c)) fail(Errc::NonFiniteCoefficient, "non-finite objective entry");

    std::stable_sort(out.triplets.begin(), out.triplets.end(),
                     [](const Triplet& a, const Triplet& b) {
                         return a.row != b.row ? a.row < b.row : a.col < b.col;
                     });
    std::vector<Triplet> merged;
    merged.reserve(out.triplets.size());
    for (const Triplet& t : out.triplets) {
        if (!merged.empty() && merged.back().row == t.row && merged.back().col == t.col)
            merged.back().value += t.value;
        else
            merged.push_back(t);
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const Triplet& t) { return t.value == 0.0; }),
                 merged.end());
    out.triplets = std::move(merged);
    return out;
}

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

} // namespace mhorizon::lp
