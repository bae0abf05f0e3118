#include "mhorizon/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

#include "mhorizon/case_io.hpp"
#include "mhorizon/errors.hpp"

namespace fs = std::filesystem;

namespace mhorizon {

std::string format_exact(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

bool series_close(const std::map<std::string, std::vector<double>>& a,
                  const std::map<std::string, std::vector<double>>& b, double tol) {
    if (a.size() != b.size()) return false;
    for (const auto& [key, va] : a) {
        auto it = b.find(key);
        if (it == b.end() || it->second.size() != va.size()) return false;
        for (size_t i = 0; i < va.size(); ++i)
            if (std::abs(va[i] - it->second[i]) > tol * (1.0 + std::abs(va[i]))) return false;
    }
    return true;
}

} // namespace

bool ReportBundle::close_to(const ReportBundle& other, double tol) const {
    if (periods != other.periods) return false;
    if (!series_close(capacity_mix_gw, other.capacity_mix_gw, tol)) return false;
    if (!series_close(hydrogen_capacity_tph, other.hydrogen_capacity_tph, tol)) return false;
    if (industry_shares.size() != other.industry_shares.size()) return false;
    for (const auto& [sector, routes] : industry_shares) {
        auto it = other.industry_shares.find(sector);
        if (it == other.industry_shares.end() || !series_close(routes, it->second, tol))
            return false;
    }
    if (!series_close(sequestered_gt, other.sequestered_gt, tol)) return false;
    if (!series_close(emissions_t, other.emissions_t, tol)) return false;
    if (!series_close(emissions_by_node_t, other.emissions_by_node_t, tol)) return false;
    if (!series_close(arc_capacity, other.arc_capacity, tol)) return false;
    return std::abs(investment_cost - other.investment_cost) <= tol * (1.0 + std::abs(investment_cost)) &&
           std::abs(expected_operational_cost - other.expected_operational_cost) <=
               tol * (1.0 + std::abs(expected_operational_cost)) &&
           std::abs(objective - other.objective) <= tol * (1.0 + std::abs(objective));
}

ReportBundle extract_reports(const CaseData& c, const ModelArtifacts& model,
                             const lp::Solution& sol) {
    if (sol.status != lp::SolveStatus::Optimal)
        fail(Errc::NonOptimalSolution, std::string("solution status is ") +
                                           lp::status_name(sol.status));

    ReportBundle out;
    const int P = static_cast<int>(c.time.periods().size());
    out.periods = P;
    const VariableRegistry& reg = model.registry;
    const double L = c.time.period_length_years();

    auto value = [&](int col) { return sol.x[col]; };

    // expected annual operation of an operation-kind column set, per period:
    // sum over scenarios of pi * alpha_s * y
    auto expected_annual = [&](VarKind kind, const std::string& entity, int i) {
        double acc = 0.0;
        for (int w = 0; w < static_cast<int>(c.time.scenarios().size()); ++w) {
            const double pi = c.time.scenarios()[w].probability;
            for (int s = 0; s < static_cast<int>(c.time.seasons().size()); ++s)
                for (int h = 1; h <= c.time.hours_in_season(s); ++h)
                    acc += pi * c.time.seasons()[s].weight *
                           value(reg.column(kind, entity, i, w, s, h));
        }
        return acc;
    };

    for (const AssetSpec& a : c.catalog.assets()) {
        const bool energy_capacity = a.category != AssetCategory::Storage &&
                                     (a.primary_commodity == kPowerCommodity ||
                                      a.primary_commodity == "heat");
        const bool hydrogen_capacity = a.primary_commodity == "hydrogen" &&
                                       a.category != AssetCategory::Storage;
        for (int i = 0; i < P; ++i) {
            const double v = value(reg.column(VarKind::Capacity, a.id, i));
            if (energy_capacity) {
                auto& series = out.capacity_mix_gw[a.group];
                series.resize(P, 0.0);
                series[i] += v / 1000.0;
            }
            if (hydrogen_capacity) {
                auto& series = out.hydrogen_capacity_tph[a.group];
                series.resize(P, 0.0);
                series[i] += v / c.options.h2_mwh_per_tonne;
            }
        }
    }

    // industry shares per sector with annual demand
    std::vector<std::string> sectors;
    for (const AnnualDemand& d : c.annual_demands)
        if (std::find(sectors.begin(), sectors.end(), d.sector) == sectors.end())
            sectors.push_back(d.sector);
    for (const std::string& sector : sectors) {
        std::map<std::string, std::vector<double>> production;
        std::vector<double> total(P, 0.0);
        for (const AssetSpec& a : c.catalog.assets()) {
            if (a.category != AssetCategory::ProcessRoute || a.primary_commodity != sector)
                continue;
            auto& series = production[a.id];
            series.resize(P, 0.0);
            for (int i = 0; i < P; ++i) {
                series[i] = expected_annual(VarKind::Operation, a.id, i);
                total[i] += series[i];
            }
        }
        for (auto& [route, series] : production)
            for (int i = 0; i < P; ++i) series[i] = total[i] > 0.0 ? series[i] / total[i] : 0.0;
        out.industry_shares[sector] = std::move(production);
    }

    // cumulative sequestration, expected, with the same L*alpha accounting
    // as the cumulative-limit rows
    for (const SequestrationSiteSpec& site : c.sequestration_sites) {
        auto& series = out.sequestered_gt[site.node];
        series.resize(P, 0.0);
        double running = 0.0;
        for (int i = 0; i < P; ++i) {
            running += L * expected_annual(VarKind::Injection, "seq_" + site.node, i);
            series[i] = running / 1e9;
        }
    }

    // atmospheric emissions by sector and node, expected annual tonnes,
    // using the exact capture split the cap rows use
    for (const AssetSpec& a : c.catalog.assets()) {
        if (a.category == AssetCategory::Storage) continue;
        const double atmospheric =
            capture_split(emission_intensity(a, c.topology), a.capture_rate).atmospheric;
        if (atmospheric == 0.0) continue;
        const std::string sector = a.sector.empty() ? "other" : a.sector;
        auto& by_sector = out.emissions_t[sector];
        auto& by_node = out.emissions_by_node_t[a.node];
        by_sector.resize(P, 0.0);
        by_node.resize(P, 0.0);
        for (int i = 0; i < P; ++i) {
            const double tonnes = atmospheric * expected_annual(VarKind::Operation, a.id, i);
            by_sector[i] += tonnes;
            by_node[i] += tonnes;
        }
    }

    for (const ArcSpec& a : c.arcs) {
        auto& series = out.arc_capacity[a.id];
        series.resize(P, 0.0);
        for (int i = 0; i < P; ++i)
            series[i] = c.arc_scale(a) * value(reg.column(VarKind::Capacity, a.id, i));
    }

    for (int col = 0; col < reg.size(); ++col) {
        const double contribution = model.lp.objective[col] * sol.x[col];
        const VarKind kind = reg.info(col).kind;
        if (kind == VarKind::Invest || kind == VarKind::Capacity)
            out.investment_cost += contribution;
        else
            out.expected_operational_cost += contribution;
    }
    out.objective = out.investment_cost + out.expected_operational_cost;
    return out;
}

// ---------------------------------------------------------------- tables

namespace {

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(Errc::IoFailure, "cannot write " + path.string());
    out << content;
    if (!out) fail(Errc::IoFailure, "short write to " + path.string());
}

std::string series_csv(const std::string& key_column,
                       const std::map<std::string, std::vector<double>>& series,
                       const std::string& value_column) {
    std::string text = key_column + ",period," + value_column + "\n";
    for (const auto& [key, values] : series)
        for (size_t i = 0; i < values.size(); ++i)
            text += key + "," + std::to_string(i + 1) + "," + format_exact(values[i]) + "\n";
    return text;
}

std::map<std::string, std::vector<double>> parse_series(const Table& t, int periods) {
    std::map<std::string, std::vector<double>> out;
    for (const auto& row : t.rows) {
        auto& series = out[row[0]];
        series.resize(periods, 0.0);
        int period = std::stoi(row[1]);
        double v = 0.0;
        std::from_chars(row[2].data(), row[2].data() + row[2].size(), v);
        series[period - 1] = v;
    }
    return out;
}

std::string slurp_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) fail(Errc::IoFailure, "cannot read " + p.string());
    std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return s;
}

} // namespace

void emit_tables(const ReportBundle& bundle, const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) fail(Errc::IoFailure, dir.string() + ": " + ec.message());

    write_file(dir / "capacity_mix.csv", series_csv("group", bundle.capacity_mix_gw, "gw"));
    write_file(dir / "hydrogen_capacity.csv",
               series_csv("group", bundle.hydrogen_capacity_tph, "t_per_h"));

    std::string shares = "sector,route,period,share\n";
    for (const auto& [sector, routes] : bundle.industry_shares)
        for (const auto& [route, values] : routes)
            for (size_t i = 0; i < values.size(); ++i)
                shares += sector + "," + route + "," + std::to_string(i + 1) + "," +
                          format_exact(values[i]) + "\n";
    write_file(dir / "industry_shares.csv", shares);

    write_file(dir / "co2_sequestered.csv",
               series_csv("site", bundle.sequestered_gt, "cumulative_gt"));
    write_file(dir / "emissions.csv", series_csv("sector", bundle.emissions_t, "tonnes"));
    write_file(dir / "emissions_by_node.csv",
               series_csv("node", bundle.emissions_by_node_t, "tonnes"));
    write_file(dir / "arc_capacity.csv", series_csv("arc", bundle.arc_capacity, "capacity"));

    std::string objective = "component,value\n";
    objective += "investment," + format_exact(bundle.investment_cost) + "\n";
    objective += "expected_operational," + format_exact(bundle.expected_operational_cost) + "\n";
    objective += "total," + format_exact(bundle.objective) + "\n";
    objective += "periods," + std::to_string(bundle.periods) + "\n";
    write_file(dir / "objective.csv", objective);
}

ReportBundle parse_tables(const fs::path& dir) {
    ReportBundle bundle;
    Table objective = parse_table("objective.csv", slurp_file(dir / "objective.csv"));
    for (const auto& row : objective.rows) {
        double v = 0.0;
        std::from_chars(row[1].data(), row[1].data() + row[1].size(), v);
        if (row[0] == "investment") bundle.investment_cost = v;
        if (row[0] == "expected_operational") bundle.expected_operational_cost = v;
        if (row[0] == "total") bundle.objective = v;
        if (row[0] == "periods") bundle.periods = static_cast<int>(v);
    }
    const int P = bundle.periods;
    bundle.capacity_mix_gw =
        parse_series(parse_table("capacity_mix.csv", slurp_file(dir / "capacity_mix.csv")), P);
    bundle.hydrogen_capacity_tph = parse_series(
        parse_table("hydrogen_capacity.csv", slurp_file(dir / "hydrogen_capacity.csv")), P);
    bundle.sequestered_gt = parse_series(
        parse_table("co2_sequestered.csv", slurp_file(dir / "co2_sequestered.csv")), P);
    bundle.emissions_t =
        parse_series(parse_table("emissions.csv", slurp_file(dir / "emissions.csv")), P);
    bundle.emissions_by_node_t = parse_series(
        parse_table("emissions_by_node.csv", slurp_file(dir / "emissions_by_node.csv")), P);
    bundle.arc_capacity =
        parse_series(parse_table("arc_capacity.csv", slurp_file(dir / "arc_capacity.csv")), P);

    Table shares = parse_table("industry_shares.csv", slurp_file(dir / "industry_shares.csv"));
    for (const auto& row : shares.rows) {
        auto& series = bundle.industry_shares[row[0]][row[1]];
        series.resize(P, 0.0);
        double v = 0.0;
        std::from_chars(row[3].data(), row[3].data() + row[3].size(), v);
        series[std::stoi(row[2]) - 1] = v;
    }
    return bundle;
}

// ---------------------------------------------------------------- plots

namespace {

const char* kPalette[] = {"#4477aa", "#66ccee", "#228833", "#ccbb44", "#ee6677",
                          "#aa3377", "#bbbbbb", "#222255", "#225555", "#555522"};

std::string svg_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '&')
            out += "&amp;";
        else if (ch == '<')
            out += "&lt;";
        else if (ch == '>')
            out += "&gt;";
        else
            out += ch;
    }
    return out;
}

// stacked bars: one bar per period, one colored segment per series entry,
// each labeled with the exact table value
std::string stacked_bar_svg(const std::string& title,
                            const std::map<std::string, std::vector<double>>& series,
                            int periods, const std::string& unit) {
    const int width = 760, height = 420, left = 70, bottom = 360, top = 50;
    double peak = 0.0;
    std::vector<double> totals(std::max(periods, 1), 0.0);
    for (const auto& [name, values] : series)
        for (size_t i = 0; i < values.size(); ++i) totals[i] += std::max(values[i], 0.0);
    for (double t : totals) peak = std::max(peak, t);
    if (peak <= 0.0) peak = 1.0;

    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      std::to_string(width) + "\" height=\"" + std::to_string(height) + "\">\n";
    svg += "<text x=\"20\" y=\"24\" font-size=\"16\" font-family=\"sans-serif\">" +
           svg_escape(title) + "</text>\n";
    svg += "<line x1=\"" + std::to_string(left) + "\" y1=\"" + std::to_string(bottom) +
           "\" x2=\"730\" y2=\"" + std::to_string(bottom) + "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + std::to_string(left) + "\" y1=\"" + std::to_string(top) + "\" x2=\"" +
           std::to_string(left) + "\" y2=\"" + std::to_string(bottom) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"12\" y=\"" + std::to_string(top - 6) +
           "\" font-size=\"11\" font-family=\"sans-serif\">" + svg_escape(unit) + "</text>\n";

    const double plot_width = 730.0 - left;
    const double bar_slot = plot_width / std::max(periods, 1);
    const double bar_width = bar_slot * 0.55;
    const double scale = (bottom - top) / peak;

    int color = 0;
    std::string legend;
    int legend_y = top;
    for (const auto& [name, values] : series) {
        const char* fill = kPalette[color % 10];
        legend += "<rect x=\"740\" y=\"" + std::to_string(legend_y) +
                  "\" width=\"10\" height=\"10\" fill=\"" + fill + "\"/>\n";
        legend += "<text x=\"754\" y=\"" + std::to_string(legend_y + 9) +
                  "\" font-size=\"10\" font-family=\"sans-serif\">" + svg_escape(name) +
                  "</text>\n";
        legend_y += 16;
        ++color;
    }

    std::vector<double> stack(std::max(periods, 1), 0.0);
    color = 0;
    for (const auto& [name, values] : series) {
        const char* fill = kPalette[color % 10];
        for (int i = 0; i < periods && i < static_cast<int>(values.size()); ++i) {
            const double v = values[i];
            if (v <= 0.0) continue;
            const double x = left + i * bar_slot + (bar_slot - bar_width) / 2.0;
            const double h = v * scale;
            const double y = bottom - (stack[i] + v) * scale;
            svg += "<rect x=\"" + format_exact(x) + "\" y=\"" + format_exact(y) + "\" width=\"" +
                   format_exact(bar_width) + "\" height=\"" + format_exact(h) + "\" fill=\"" +
                   fill + "\" stroke=\"white\" stroke-width=\"0.5\"/>\n";
            svg += "<text x=\"" + format_exact(x + bar_width + 4) + "\" y=\"" +
                   format_exact(y + std::min(h, 10.0)) +
                   "\" font-size=\"9\" font-family=\"monospace\">" + format_exact(v) +
                   "</text>\n";
            stack[i] += v;
        }
        ++color;
    }
    for (int i = 0; i < periods; ++i) {
        const double x = left + i * bar_slot + bar_slot / 2.0;
        svg += "<text x=\"" + format_exact(x) + "\" y=\"" + std::to_string(bottom + 16) +
               "\" font-size=\"11\" text-anchor=\"middle\" font-family=\"sans-serif\">p" +
               std::to_string(i + 1) + "</text>\n";
    }
    // set elements after the bars so labels stay on top
    svg = svg + legend + "</svg>\n";
    return svg;
}

} // namespace

void emit_plots(const ReportBundle& bundle, const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) fail(Errc::IoFailure, dir.string() + ": " + ec.message());

    write_file(dir / "capacity_mix.svg",
               stacked_bar_svg("Capacity by technology group", bundle.capacity_mix_gw,
                               bundle.periods, "GW"));
    write_file(dir / "hydrogen_capacity.svg",
               stacked_bar_svg("Hydrogen production capacity", bundle.hydrogen_capacity_tph,
                               bundle.periods, "t/h"));
    write_file(dir / "co2_sequestered.svg",
               stacked_bar_svg("Cumulative CO2 sequestered", bundle.sequestered_gt,
                               bundle.periods, "Gt"));
    write_file(dir / "emissions.svg",
               stacked_bar_svg("Atmospheric emissions by sector", bundle.emissions_t,
                               bundle.periods, "t/yr"));
    for (const auto& [sector, routes] : bundle.industry_shares)
        write_file(dir / ("industry_" + sector + ".svg"),
                   stacked_bar_svg("Production share: " + sector, routes, bundle.periods,
                                   "share"));
}

} // namespace mhorizon
