#pragma once

#include <string>

#include "mhorizon/sparse_lp.hpp"

namespace mhorizon::lp {

// Fixed-format MPS with sections NAME, ROWS, COLUMNS, RHS, RANGES, BOUNDS,
// ENDATA. The objective is the free row OBJ. Values use 12 significant
// digits, so export -> parse -> export is byte-identical.
std::string export_mps(const SparseLP& lp);

// Parses bytes produced by export_mps (or any whitespace-aligned MPS using
// the same sections). Returns a canonicalized LP.
SparseLP parse_mps(const std::string& bytes);

} // namespace mhorizon::lp
