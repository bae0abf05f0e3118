#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "mhorizon/case_data.hpp"

namespace mhorizon {

// Reads and fully validates one case directory (manifest.toml plus the
// comma-separated tables documented in docs/case_format.md). Pure: the same
// directory bytes produce the same CaseData.
CaseData load_case(const std::filesystem::path& dir);

// "key = value" lines grouped under [section] headers; returned keys are
// "section.key". UTF-8, '#' comments.
std::map<std::string, std::string> parse_manifest(const std::string& text);

struct Table {
    std::string file;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    int column(const std::string& name) const; // -1 when absent
};

// RFC-4180 comma-separated values with a header row.
Table parse_table(const std::string& file, const std::string& text);

} // namespace mhorizon
