#pragma once

#include <limits>
#include <string>
#include <vector>

namespace mhorizon::lp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Sense : char { LE = 'L', EQ = 'E', GE = 'G' };

struct Triplet {
    int row;
    int col;
    double value;

    friend bool operator==(const Triplet&, const Triplet&) = default;
};

// Sparse LP in triplet form, always a minimization.
// Column bounds default to [0, +inf); rows carry a sense and rhs.
struct SparseLP {
    std::string name = "LP";
    int n_cols = 0;
    int n_rows = 0;
    std::vector<double> objective;           // per column
    std::vector<Triplet> triplets;
    std::vector<Sense> row_sense;
    std::vector<double> rhs;
    std::vector<double> col_lower;
    std::vector<double> col_upper;
    std::vector<std::string> col_name;
    std::vector<std::string> row_name;

    int add_col(const std::string& name, double lower, double upper, double obj = 0.0);
    int add_row(const std::string& name, Sense sense, double rhs_value);
    void add_coeff(int row, int col, double value);

    // Exact field-by-field equality (names, structure, bit-equal values).
    bool equals(const SparseLP& other) const;
};

// Sums duplicate (row, col) entries, drops exact zeros, orders triplets
// row-major then by column. Validates indices and finiteness. Idempotent.
SparseLP canonicalize(const SparseLP& lp);

// %.12g formatting shared by MPS export and report emission.
std::string format_value(double v);

} // namespace mhorizon::lp
