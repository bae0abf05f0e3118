#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "mhorizon/case_data.hpp"
#include "mhorizon/model_builder.hpp"
#include "mhorizon/simplex.hpp"

namespace mhorizon {

// Decision-variable views of one optimal solution. All per-period vectors
// are indexed 0..periods-1; scenario dimensions are collapsed by
// probability-weighted expectation.
struct ReportBundle {
    int periods = 0;
    std::map<std::string, std::vector<double>> capacity_mix_gw;      // power/heat groups
    std::map<std::string, std::vector<double>> hydrogen_capacity_tph; // hydrogen groups
    std::map<std::string, std::map<std::string, std::vector<double>>> industry_shares;
    std::map<std::string, std::vector<double>> sequestered_gt; // cumulative per site
    std::map<std::string, std::vector<double>> emissions_t;    // atmospheric, per sector, t/yr
    std::map<std::string, std::vector<double>> emissions_by_node_t;
    std::map<std::string, std::vector<double>> arc_capacity; // effective transport capacity
    double investment_cost = 0.0;           // discounted invest + fixed O&M
    double expected_operational_cost = 0.0; // discounted, probability-weighted
    double objective = 0.0;

    bool close_to(const ReportBundle& other, double tol) const;
};

ReportBundle extract_reports(const CaseData& c, const ModelArtifacts& model,
                             const lp::Solution& sol);

// One comma-separated file per view with a stable column order; identical
// bundles produce identical bytes.
void emit_tables(const ReportBundle& bundle, const std::filesystem::path& dir);

// Stacked-bar SVG charts, one per view; numeric labels in the SVG text
// nodes equal the table values character for character.
void emit_plots(const ReportBundle& bundle, const std::filesystem::path& dir);

// Inverse of emit_tables, for round-trip checks and downstream tooling.
ReportBundle parse_tables(const std::filesystem::path& dir);

// shortest decimal string that parses back to exactly the same double
std::string format_exact(double v);

} // namespace mhorizon
