#include "mhorizon/mps.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <vector>

#include "mhorizon/errors.hpp"

namespace mhorizon::lp {

namespace {

constexpr int kMaxNameLength = 255;
// Classic fixed-format field offsets (0-based); long names push later
// fields right by at least one space.
constexpr int kFieldStart[6] = {1, 4, 14, 24, 39, 49};

std::string mangle(const std::string& name) {
    std::string out = name;
    for (char& c : out)
        if (c == ' ' || c == '\t') c = '_';
    if (out.size() > kMaxNameLength)
        fail(Errc::NameTooLong, "'" + out.substr(0, 32) + "...' exceeds 255 characters");
    return out;
}

void put_field(std::string& line, int field, const std::string& text) {
    const int target = kFieldStart[field];
    if (static_cast<int>(line.size()) < target)
        line.append(target - line.size(), ' ');
    else if (!line.empty())
        line.push_back(' ');
    line += text;
}

struct ColumnEntry {
    int row; // -1 means objective
    double value;
};

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

double parse_number(const std::string& tok) {
    char* end = nullptr;
    double v = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0')
        fail(Errc::SchemaMismatch, "bad numeric field '" + tok + "' in MPS stream");
    return v;
}

} // namespace

std::string export_mps(const SparseLP& input) {
    const SparseLP lp = canonicalize(input);
    std::string out;
    {
        std::string line = "NAME";
        put_field(line, 2, mangle(lp.name));
        out += line + "\n";
    }

    out += "ROWS\n";
    {
        std::string line;
        put_field(line, 0, "N");
        put_field(line, 1, "OBJ");
        out += line + "\n";
    }
    for (int r = 0; r < lp.n_rows; ++r) {
        std::string line;
        put_field(line, 0, std::string(1, static_cast<char>(lp.row_sense[r])));
        put_field(line, 1, mangle(lp.row_name[r]));
        out += line + "\n";
    }

    // Per-column entries: objective first, then rows ascending. Columns with
    // no entries at all are pinned into the file with an explicit zero
    // objective coefficient so they survive a round trip.
    std::vector<std::vector<ColumnEntry>> cols(lp.n_cols);
    for (int c = 0; c < lp.n_cols; ++c)
        if (lp.objective[c] != 0.0) cols[c].push_back({-1, lp.objective[c]});
    for (const Triplet& t : lp.triplets) cols[t.col].push_back({t.row, t.value});
    for (auto& entries : cols)
        std::sort(entries.begin(), entries.end(),
                  [](const ColumnEntry& a, const ColumnEntry& b) { return a.row < b.row; });

    out += "COLUMNS\n";
    for (int c = 0; c < lp.n_cols; ++c) {
        auto& entries = cols[c];
        if (entries.empty()) entries.push_back({-1, 0.0});
        for (size_t k = 0; k < entries.size(); k += 2) {
            std::string line;
            put_field(line, 1, mangle(lp.col_name[c]));
            put_field(line, 2, entries[k].row < 0 ? "OBJ" : mangle(lp.row_name[entries[k].row]));
            put_field(line, 3, format_value(entries[k].value));
            if (k + 1 < entries.size()) {
                put_field(line, 4,
                          entries[k + 1].row < 0 ? "OBJ" : mangle(lp.row_name[entries[k + 1].row]));
                put_field(line, 5, format_value(entries[k + 1].value));
            }
            out += line + "\n";
        }
    }

    out += "RHS\n";
    {
        std::vector<int> nz;
        for (int r = 0; r < lp.n_rows; ++r)
            if (lp.rhs[r] != 0.0) nz.push_back(r);
        for (size_t k = 0; k < nz.size(); k += 2) {
            std::string line;
            put_field(line, 1, "RHS");
            put_field(line, 2, mangle(lp.row_name[nz[k]]));
            put_field(line, 3, format_value(lp.rhs[nz[k]]));
            if (k + 1 < nz.size()) {
                put_field(line, 4, mangle(lp.row_name[nz[k + 1]]));
                put_field(line, 5, format_value(lp.rhs[nz[k + 1]]));
            }
            out += line + "\n";
        }
    }

    out += "BOUNDS\n";
    for (int c = 0; c < lp.n_cols; ++c) {
        const double lo = lp.col_lower[c];
        const double hi = lp.col_upper[c];
        const std::string cname = mangle(lp.col_name[c]);
        auto emit = [&](const char* kind, bool with_value, double value) {
            std::string line;
            put_field(line, 0, kind);
            put_field(line, 1, "BND");
            put_field(line, 2, cname);
            if (with_value) put_field(line, 3, format_value(value));
            out += line + "\n";
        };
        if (lo == 0.0 && hi == kInf) continue;
        if (lo == hi) {
            emit("FX", true, lo);
        } else if (lo == -kInf && hi == kInf) {
            emit("FR", false, 0);
        } else {
            if (lo == -kInf)
                emit("MI", false, 0);
            else if (lo != 0.0)
                emit("LO", true, lo);
            if (hi != kInf) emit("UP", true, hi);
        }
    }

    out += "ENDATA\n";
    return out;
}

SparseLP parse_mps(const std::string& bytes) {
    enum class Section { None, Rows, Columns, Rhs, Ranges, Bounds, Done };
    Section section = Section::None;

    SparseLP lp;
    std::map<std::string, int> row_index;
    std::map<std::string, int> col_index;
    std::vector<std::pair<int, double>> ranges; // (row, range value)

    auto get_col = [&](const std::string& name) {
        auto it = col_index.find(name);
        if (it != col_index.end()) return it->second;
        int idx = lp.add_col(name, 0.0, kInf, 0.0);
        col_index.emplace(name, idx);
        return idx;
    };
    auto get_row = [&](const std::string& name) {
        auto it = row_index.find(name);
        if (it == row_index.end()) fail(Errc::SchemaMismatch, "unknown row '" + name + "'");
        return it->second;
    };

    std::istringstream in(bytes);
    std::string line;
    bool saw_endata = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '*') continue;
        if (line[0] != ' ' && line[0] != '\t') {
            auto tokens = tokenize(line);
            const std::string& kw = tokens[0];
            if (kw == "NAME") {
                lp.name = tokens.size() > 1 ? tokens[1] : "";
            } else if (kw == "ROWS") {
                section = Section::Rows;
            } else if (kw == "COLUMNS") {
                section = Section::Columns;
            } else if (kw == "RHS") {
                section = Section::Rhs;
            } else if (kw == "RANGES") {
                section = Section::Ranges;
            } else if (kw == "BOUNDS") {
                section = Section::Bounds;
            } else if (kw == "ENDATA") {
                saw_endata = true;
                section = Section::Done;
                break;
            } else {
                fail(Errc::SchemaMismatch, "unknown MPS section '" + kw + "'");
            }
            continue;
        }
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        switch (section) {
            case Section::Rows: {
                if (tokens.size() != 2) fail(Errc::SchemaMismatch, "bad ROWS line: " + line);
                const std::string& sense = tokens[0];
                if (sense == "N") {
                    if (tokens[1] != "OBJ" && !row_index.empty())
                        fail(Errc::SchemaMismatch, "multiple free rows not supported");
                    // objective row; no index assigned
                } else if (sense == "L" || sense == "E" || sense == "G") {
                    int idx = lp.add_row(tokens[1], static_cast<Sense>(sense[0]), 0.0);
                    if (!row_index.emplace(tokens[1], idx).second)
                        fail(Errc::SchemaMismatch, "duplicate row '" + tokens[1] + "'");
                } else {
                    fail(Errc::SchemaMismatch, "bad row sense '" + sense + "'");
                }
                break;
            }
            case Section::Columns: {
                if (tokens.size() != 3 && tokens.size() != 5)
                    fail(Errc::SchemaMismatch, "bad COLUMNS line: " + line);
                int col = get_col(tokens[0]);
                for (size_t k = 1; k + 1 < tokens.size(); k += 2) {
                    double v = parse_number(tokens[k + 1]);
                    if (tokens[k] == "OBJ")
                        lp.objective[col] += v;
                    else
                        lp.add_coeff(get_row(tokens[k]), col, v);
                }
                break;
            }
            case Section::Rhs: {
                if (tokens.size() != 3 && tokens.size() != 5)
                    fail(Errc::SchemaMismatch, "bad RHS line: " + line);
                for (size_t k = 1; k + 1 < tokens.size(); k += 2) {
                    if (tokens[k] == "OBJ")
                        fail(Errc::SchemaMismatch, "objective constants are not supported");
                    lp.rhs[get_row(tokens[k])] = parse_number(tokens[k + 1]);
                }
                break;
            }
            case Section::Ranges: {
                if (tokens.size() != 3 && tokens.size() != 5)
                    fail(Errc::SchemaMismatch, "bad RANGES line: " + line);
                for (size_t k = 1; k + 1 < tokens.size(); k += 2)
                    ranges.emplace_back(get_row(tokens[k]), parse_number(tokens[k + 1]));
                break;
            }
            case Section::Bounds: {
                const std::string& kind = tokens[0];
                bool has_value = (kind == "UP" || kind == "LO" || kind == "FX");
                if (tokens.size() != (has_value ? 4u : 3u))
                    fail(Errc::SchemaMismatch, "bad BOUNDS line: " + line);
                int col = get_col(tokens[2]);
                double v = has_value ? parse_number(tokens[3]) : 0.0;
                if (kind == "UP") {
                    lp.col_upper[col] = v;
                } else if (kind == "LO") {
                    lp.col_lower[col] = v;
                } else if (kind == "FX") {
                    lp.col_lower[col] = lp.col_upper[col] = v;
                } else if (kind == "FR") {
                    lp.col_lower[col] = -kInf;
                    lp.col_upper[col] = kInf;
                } else if (kind == "MI") {
                    lp.col_lower[col] = -kInf;
                } else if (kind == "PL") {
                    lp.col_upper[col] = kInf;
                } else {
                    fail(Errc::SchemaMismatch, "bad bound kind '" + kind + "'");
                }
                break;
            }
            default:
                fail(Errc::SchemaMismatch, "data line outside any section: " + line);
        }
    }
    if (!saw_endata) fail(Errc::SchemaMismatch, "missing ENDATA");

    // A ranged row i with rhs b becomes the original row plus a companion
    // row holding the other side of the interval.
    for (auto [row, range] : ranges) {
        const double b = lp.rhs[row];
        const double r = range;
        Sense sense = lp.row_sense[row];
        int extra = -1;
        if (sense == Sense::LE)
            extra = lp.add_row(lp.row_name[row] + ".rng", Sense::GE, b - std::abs(r));
        else if (sense == Sense::GE)
            extra = lp.add_row(lp.row_name[row] + ".rng", Sense::LE, b + std::abs(r));
        else
            extra = r >= 0 ? lp.add_row(lp.row_name[row] + ".rng", Sense::LE, b + r)
                           : lp.add_row(lp.row_name[row] + ".rng", Sense::GE, b - std::abs(r));
        std::vector<Triplet> dup;
        for (const Triplet& t : lp.triplets)
            if (t.row == row) dup.push_back({extra, t.col, t.value});
        lp.triplets.insert(lp.triplets.end(), dup.begin(), dup.end());
    }

    return canonicalize(lp);
}

} // namespace mhorizon::lp
