#include "mhorizon/case_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "mhorizon/errors.hpp"

namespace fs = std::filesystem;

namespace mhorizon {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::string locus(const std::string& file, size_t row, const std::string& col) {
    return file + " row " + std::to_string(row) + " column '" + col + "'";
}

double cell_double(const Table& t, size_t row, const std::string& col, double fallback,
                   bool required = false) {
    int c = t.column(col);
    if (c < 0) {
        if (required) fail(Errc::SchemaMismatch, t.file + " lacks column '" + col + "'");
        return fallback;
    }
    const std::string& raw = t.rows[row][c];
    if (raw.empty()) {
        if (required) fail(Errc::SchemaMismatch, locus(t.file, row + 2, col) + " is empty");
        return fallback;
    }
    if (raw == "unbounded" || raw == "inf") return lp::kInf;
    char* end = nullptr;
    double v = std::strtod(raw.c_str(), &end);
    if (end == raw.c_str() || *end != '\0')
        fail(Errc::SchemaMismatch, locus(t.file, row + 2, col) + ": bad number '" + raw + "'");
    return v;
}

int cell_int(const Table& t, size_t row, const std::string& col, int fallback,
             bool required = false) {
    double v = cell_double(t, row, col, fallback, required);
    if (v != std::floor(v))
        fail(Errc::SchemaMismatch, locus(t.file, row + 2, col) + ": expected integer");
    return static_cast<int>(v);
}

std::string cell(const Table& t, size_t row, const std::string& col, bool required = true) {
    int c = t.column(col);
    if (c < 0) {
        if (required) fail(Errc::SchemaMismatch, t.file + " lacks column '" + col + "'");
        return "";
    }
    const std::string& v = t.rows[row][c];
    if (required && v.empty())
        fail(Errc::SchemaMismatch, locus(t.file, row + 2, col) + " is empty");
    return v;
}

void check_name(const std::string& file, const std::string& name) {
    if (name.empty() || name.find('.') != std::string::npos ||
        name.find(' ') != std::string::npos)
        fail(Errc::SchemaMismatch,
             file + ": identifier '" + name + "' must be non-empty without '.' or spaces");
}

void check_nonnegative(const std::string& file, const std::string& what, double v) {
    if (v < 0.0) fail(Errc::NegativeQuantity, file + ": " + what + " = " + std::to_string(v));
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

struct CaseReader {
    fs::path dir;
    std::map<std::string, std::string> manifest;

    bool table_exists(const std::string& name) const { return fs::exists(dir / (name + ".csv")); }

    Table table(const std::string& name, bool required) const {
        fs::path p = dir / (name + ".csv");
        if (!fs::exists(p)) {
            if (required) fail(Errc::MissingTable, name);
            return Table{name + ".csv", {}, {}};
        }
        return parse_table(name + ".csv", slurp(p));
    }

    std::string value(const std::string& key, const std::string& fallback) const {
        auto it = manifest.find(key);
        return it == manifest.end() ? fallback : it->second;
    }
    double number(const std::string& key, double fallback) const {
        auto it = manifest.find(key);
        if (it == manifest.end()) return fallback;
        char* end = nullptr;
        double v = std::strtod(it->second.c_str(), &end);
        if (end == it->second.c_str() || *end != '\0')
            fail(Errc::SchemaMismatch, "manifest key '" + key + "': bad number");
        return v;
    }
};

} // namespace

int Table::column(const std::string& name) const {
    for (size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return static_cast<int>(i);
    return -1;
}

std::map<std::string, std::string> parse_manifest(const std::string& text) {
    std::map<std::string, std::string> out;
    std::istringstream in(text);
    std::string line, section;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[' && t.back() == ']') {
            section = trim(t.substr(1, t.size() - 2));
            continue;
        }
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            fail(Errc::SchemaMismatch,
                 "manifest line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(t.substr(0, eq));
        std::string val = trim(t.substr(eq + 1));
        if (val.size() >= 2 && val.front() == '"' && val.back() == '"')
            val = val.substr(1, val.size() - 2);
        out[section.empty() ? key : section + "." + key] = val;
    }
    return out;
}

Table parse_table(const std::string& file, const std::string& text) {
    Table t;
    t.file = file;
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool quoted = false;
    auto end_field = [&]() {
        record.push_back(field);
        field.clear();
    };
    auto end_record = [&]() {
        end_field();
        bool blank = record.size() == 1 && record[0].empty();
        if (!blank) records.push_back(record);
        record.clear();
    };
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            end_field();
        } else if (c == '\n') {
            if (!field.empty() && field.back() == '\r') field.pop_back();
            end_record();
        } else {
            field += c;
        }
    }
    if (!field.empty() || !record.empty()) end_record();
    if (quoted) fail(Errc::SchemaMismatch, file + ": unterminated quote");
    if (records.empty()) fail(Errc::SchemaMismatch, file + ": missing header row");

    t.header = records[0];
    for (size_t r = 1; r < records.size(); ++r) {
        if (records[r].size() != t.header.size())
            fail(Errc::SchemaMismatch, file + " row " + std::to_string(r + 1) + ": expected " +
                                           std::to_string(t.header.size()) + " fields, found " +
                                           std::to_string(records[r].size()));
        t.rows.push_back(records[r]);
    }
    return t;
}

CaseData load_case(const fs::path& dir) {
    if (!fs::exists(dir / "manifest.toml")) fail(Errc::MissingTable, "manifest.toml");

    CaseReader reader{dir, parse_manifest(slurp(dir / "manifest.toml"))};
    CaseData c;
    c.name = reader.value("case.name", dir.filename().string());
    c.schema = static_cast<int>(reader.number("case.schema", 1));

    // ---- time ----
    TimeConfig tc;
    tc.period_count = static_cast<int>(reader.number("time.periods", 8));
    tc.period_length_years = static_cast<int>(reader.number("time.period_length_years", 5));
    tc.first_year = static_cast<int>(reader.number("time.first_year", 2020));
    tc.discount_rate = reader.number("time.discount_rate", 0.05);
    tc.annual_hours = reader.number("time.annual_hours", 8736.0);

    Table seasons = reader.table("seasons", true);
    for (size_t r = 0; r < seasons.rows.size(); ++r) {
        Season s;
        s.name = cell(seasons, r, "season");
        check_name(seasons.file, s.name);
        s.hours = cell_int(seasons, r, "hours", 0, true);
        s.peak = cell_int(seasons, r, "peak", 0, true) != 0;
        s.weight = cell_double(seasons, r, "weight", 0.0, true);
        tc.seasons.push_back(s);
    }
    Table scenarios = reader.table("scenarios", true);
    for (size_t r = 0; r < scenarios.rows.size(); ++r) {
        ScenarioSpec s;
        s.name = cell(scenarios, r, "scenario");
        check_name(scenarios.file, s.name);
        s.probability = cell_double(scenarios, r, "probability", 0.0, true);
        tc.scenarios.push_back(s);
    }
    c.time_config = tc;
    c.time = build_time_structure(tc);
    c.hours = HourSpace::from(c.time);
    const int P = static_cast<int>(c.time.periods().size());

    // ---- options ----
    c.options.loss_of_load_penalty = reader.number("options.loss_of_load_penalty", 3000.0);
    c.options.flexible_industry = reader.value("options.industry_mode", "inflexible") == "flexible";
    c.options.flexibility_fraction = reader.number("options.flexibility_fraction", 0.2);
    c.options.h2_mwh_per_tonne = reader.number("options.h2_mwh_per_tonne", 33.33);
    c.options.gas_cost_affordable = reader.number("gas.production_cost_affordable", 10.0);
    c.options.gas_cost_costly = reader.number("gas.production_cost_costly", 20.0);

    // ---- topology ----
    Table nodes = reader.table("nodes", true);
    for (size_t r = 0; r < nodes.rows.size(); ++r) {
        std::string n = cell(nodes, r, "node");
        check_name(nodes.file, n);
        c.topology.nodes.push_back(n);
    }
    Table commodities = reader.table("commodities", true);
    for (size_t r = 0; r < commodities.rows.size(); ++r) {
        Commodity k;
        k.name = cell(commodities, r, "commodity");
        check_name(commodities.file, k.name);
        std::string kind = cell(commodities, r, "kind");
        if (kind == "flow")
            k.kind = CommodityKind::Flow;
        else if (kind == "sector")
            k.kind = CommodityKind::Sector;
        else
            fail(Errc::SchemaMismatch, commodities.file + ": kind '" + kind + "'");
        k.emission_factor = cell_double(commodities, r, "emission_factor", 0.0);
        check_nonnegative(commodities.file, k.name + " emission factor", k.emission_factor);
        c.topology.commodities.push_back(k);
    }

    // ---- catalog ----
    Table assets = reader.table("assets", true);
    Table conversions = reader.table("conversions", false);
    Table routes = reader.table("routes", false);
    std::vector<AssetSpec> specs;
    for (size_t r = 0; r < assets.rows.size(); ++r) {
        AssetSpec a;
        a.id = cell(assets, r, "id");
        check_name(assets.file, a.id);
        a.node = cell(assets, r, "node");
        std::string cat = cell(assets, r, "category");
        if (cat == "generator")
            a.category = AssetCategory::Generator;
        else if (cat == "heater")
            a.category = AssetCategory::Heater;
        else if (cat == "converter")
            a.category = AssetCategory::Converter;
        else if (cat == "storage")
            a.category = AssetCategory::Storage;
        else if (cat == "process-route")
            a.category = AssetCategory::ProcessRoute;
        else
            fail(Errc::SchemaMismatch, assets.file + ": category '" + cat + "'");
        a.sector = cell(assets, r, "sector", false);
        a.group = cell(assets, r, "group", false);
        if (a.group.empty()) a.group = a.id;
        a.primary_commodity = cell(assets, r, "primary");
        a.invest_cost = cell_double(assets, r, "invest_cost", 0.0);
        a.fixed_om = cell_double(assets, r, "fixed_om", 0.0);
        a.var_cost = cell_double(assets, r, "var_cost", 0.0);
        check_nonnegative(assets.file, a.id + " invest_cost", a.invest_cost);
        check_nonnegative(assets.file, a.id + " fixed_om", a.fixed_om);
        check_nonnegative(assets.file, a.id + " var_cost", a.var_cost);
        a.lifetime_periods = cell_int(assets, r, "lifetime", 1);
        a.investable = cell_int(assets, r, "investable", 0) != 0;
        a.investable_from = cell_int(assets, r, "investable_from", 1);
        a.invest_limit = cell_double(assets, r, "max_built", lp::kInf);
        a.emission_factor = cell_double(assets, r, "emission_factor", 0.0);
        check_nonnegative(assets.file, a.id + " emission_factor", a.emission_factor);
        a.capture_rate = cell_double(assets, r, "capture_rate", 0.0);
        a.charge_eff = cell_double(assets, r, "charge_eff", 1.0);
        a.discharge_eff = cell_double(assets, r, "discharge_eff", 1.0);
        a.availability_profile = cell(assets, r, "availability_profile", false);
        a.output_profile = cell(assets, r, "output_profile", false);
        specs.push_back(a);
    }
    for (size_t r = 0; r < conversions.rows.size(); ++r) {
        std::string id = cell(conversions, r, "asset");
        auto it = std::find_if(specs.begin(), specs.end(),
                               [&](const AssetSpec& a) { return a.id == id; });
        if (it == specs.end())
            fail(Errc::SchemaMismatch, conversions.file + ": unknown asset '" + id + "'");
        it->conversion.push_back(
            {cell(conversions, r, "commodity"), cell_double(conversions, r, "coefficient", 0.0, true)});
    }
    for (size_t r = 0; r < routes.rows.size(); ++r) {
        std::string id = cell(routes, r, "asset");
        auto it = std::find_if(specs.begin(), specs.end(),
                               [&](const AssetSpec& a) { return a.id == id; });
        if (it == specs.end())
            fail(Errc::SchemaMismatch, routes.file + ": unknown asset '" + id + "'");
        if (it->category != AssetCategory::ProcessRoute)
            fail(Errc::SchemaMismatch, routes.file + ": '" + id + "' is not a process route");
        it->process_emission = cell_double(routes, r, "process_emission", 0.0);
        it->feedstock_cap = cell_double(routes, r, "feedstock_cap", -1.0);
    }
    c.catalog = validate_catalog(std::move(specs), c.topology);

    std::set<std::string> entity_ids;
    for (const AssetSpec& a : c.catalog.assets()) entity_ids.insert(a.id);

    // ---- arcs ----
    Table arcs = reader.table("arcs", false);
    for (size_t r = 0; r < arcs.rows.size(); ++r) {
        ArcSpec a;
        a.id = cell(arcs, r, "id");
        check_name(arcs.file, a.id);
        if (!entity_ids.insert(a.id).second) fail(Errc::DuplicateAssetId, a.id);
        a.commodity = cell(arcs, r, "commodity");
        const Commodity* k = c.topology.find_commodity(a.commodity);
        if (k == nullptr) fail(Errc::UnknownCommodity, arcs.file + ": '" + a.commodity + "'");
        if (k->kind != CommodityKind::Flow)
            fail(Errc::SchemaMismatch, arcs.file + ": '" + a.commodity + "' is not transportable");
        a.from = cell(arcs, r, "from");
        a.to = cell(arcs, r, "to");
        if (!c.topology.has_node(a.from)) fail(Errc::UnknownNode, arcs.file + ": " + a.from);
        if (!c.topology.has_node(a.to)) fail(Errc::UnknownNode, arcs.file + ": " + a.to);
        a.invest_cost = cell_double(arcs, r, "invest_cost", 0.0);
        a.fixed_om = cell_double(arcs, r, "fixed_om", 0.0);
        check_nonnegative(arcs.file, a.id + " invest_cost", a.invest_cost);
        a.lifetime_periods = cell_int(arcs, r, "lifetime", 1);
        a.investable = cell_int(arcs, r, "investable", 0) != 0;
        a.invest_limit = cell_double(arcs, r, "max_built", lp::kInf);
        a.loss = cell_double(arcs, r, "loss", 0.0);
        if (a.loss < 0.0 || a.loss >= 1.0)
            fail(Errc::SchemaMismatch, arcs.file + ": loss must lie in [0,1)");
        a.russian = cell(arcs, r, "tag", false) == "russian";
        c.arcs.push_back(a);
    }

    // ---- gas supplies ----
    Table gas = reader.table("gas_supply", false);
    if (!gas.rows.empty() && c.topology.find_commodity(kGasCommodity) == nullptr)
        fail(Errc::UnknownCommodity, "gas_supply.csv requires a 'gas' commodity");
    bool any_lng = false;
    for (size_t r = 0; r < gas.rows.size(); ++r) {
        GasSupplySpec g;
        g.id = cell(gas, r, "id");
        check_name(gas.file, g.id);
        if (!entity_ids.insert(g.id).second) fail(Errc::DuplicateAssetId, g.id);
        g.node = cell(gas, r, "node");
        if (!c.topology.has_node(g.node)) fail(Errc::UnknownNode, gas.file + ": " + g.node);
        std::string kind = cell(gas, r, "kind");
        if (kind == "field")
            g.kind = GasSupplyKind::PipelineField;
        else if (kind == "lng")
            g.kind = GasSupplyKind::LngTerminal;
        else
            fail(Errc::SchemaMismatch, gas.file + ": kind '" + kind + "'");
        any_lng = any_lng || g.kind == GasSupplyKind::LngTerminal;
        g.production_capacity = cell_double(gas, r, "capacity", 0.0, true);
        check_nonnegative(gas.file, g.id + " capacity", g.production_capacity);
        g.reserves = cell_double(gas, r, "reserves", lp::kInf);
        if (!(g.reserves > 0.0))
            fail(Errc::NegativeQuantity, gas.file + ": " + g.id + " reserves must be positive");
        g.russian = cell(gas, r, "tag", false) == "russian";
        c.gas_supplies.push_back(g);
    }

    // ---- sequestration sites (Gt inputs, stored in t) ----
    Table seq = reader.table("sequestration", false);
    if (!seq.rows.empty() && c.topology.find_commodity(kCo2Commodity) == nullptr)
        fail(Errc::UnknownCommodity, "sequestration.csv requires a 'co2' commodity");
    for (size_t r = 0; r < seq.rows.size(); ++r) {
        SequestrationSiteSpec s;
        s.node = cell(seq, r, "node");
        if (!c.topology.has_node(s.node)) fail(Errc::UnknownNode, seq.file + ": " + s.node);
        if (c.site_at(s.node) != nullptr)
            fail(Errc::SchemaMismatch, seq.file + ": duplicate site at " + s.node);
        double gt = cell_double(seq, r, "max_gt", 0.0, true);
        if (!(gt > 0.0)) fail(Errc::NegativeQuantity, seq.file + ": cap at " + s.node);
        s.max_cumulative = gt * 1e9;
        c.sequestration_sites.push_back(s);
        std::string sid = "seq_" + s.node;
        if (!entity_ids.insert(sid).second) fail(Errc::DuplicateAssetId, sid);
    }

    // ---- demands ----
    Table demand = reader.table("demand", false);
    std::set<std::tuple<std::string, std::string, int>> demand_keys;
    for (size_t r = 0; r < demand.rows.size(); ++r) {
        Demand d;
        d.commodity = cell(demand, r, "commodity");
        const Commodity* k = c.topology.find_commodity(d.commodity);
        if (k == nullptr) fail(Errc::UnknownCommodity, demand.file + ": " + d.commodity);
        if (k->kind != CommodityKind::Flow)
            fail(Errc::SchemaMismatch,
                 demand.file + ": sector commodity '" + d.commodity + "' uses annual_demand.csv");
        d.node = cell(demand, r, "node");
        if (!c.topology.has_node(d.node)) fail(Errc::UnknownNode, demand.file + ": " + d.node);
        d.period = cell_int(demand, r, "period", 0, true);
        if (d.period < 1 || d.period > P)
            fail(Errc::SchemaMismatch, demand.file + ": period " + std::to_string(d.period));
        d.base = cell_double(demand, r, "base", 0.0, true);
        check_nonnegative(demand.file, "demand", d.base);
        d.profile = cell(demand, r, "profile", false);
        if (!demand_keys.insert({d.commodity, d.node, d.period}).second)
            fail(Errc::SchemaMismatch, demand.file + ": duplicate key " + d.commodity + "/" +
                                           d.node + "/" + std::to_string(d.period));
        c.demands.push_back(d);
    }

    Table annual = reader.table("annual_demand", false);
    std::map<std::pair<std::string, std::string>, std::set<int>> coverage;
    for (size_t r = 0; r < annual.rows.size(); ++r) {
        AnnualDemand d;
        d.sector = cell(annual, r, "sector");
        const Commodity* k = c.topology.find_commodity(d.sector);
        if (k == nullptr || k->kind != CommodityKind::Sector)
            fail(Errc::SchemaMismatch, annual.file + ": '" + d.sector + "' is not a sector");
        d.node = cell(annual, r, "node");
        if (!c.topology.has_node(d.node)) fail(Errc::UnknownNode, annual.file + ": " + d.node);
        d.period = cell_int(annual, r, "period", 0, true);
        if (d.period < 1 || d.period > P)
            fail(Errc::SchemaMismatch, annual.file + ": period " + std::to_string(d.period));
        d.amount = cell_double(annual, r, "demand", 0.0, true);
        check_nonnegative(annual.file, "annual demand", d.amount);
        if (!coverage[{d.sector, d.node}].insert(d.period).second)
            fail(Errc::SchemaMismatch, annual.file + ": duplicate " + d.sector + "/" + d.node);
        c.annual_demands.push_back(d);
    }
    for (const auto& [key, periods] : coverage)
        if (static_cast<int>(periods.size()) != P)
            fail(Errc::UncoveredPeriod,
                 "annual_demand: " + key.first + "/" + key.second + " does not cover every period");

    // ---- initial capacity ----
    Table init = reader.table("initial_capacity", false);
    for (size_t r = 0; r < init.rows.size(); ++r) {
        std::string id = cell(init, r, "id");
        bool known = c.catalog.find(id) != nullptr ||
                     std::any_of(c.arcs.begin(), c.arcs.end(),
                                 [&](const ArcSpec& a) { return a.id == id; });
        if (!known) fail(Errc::SchemaMismatch, init.file + ": unknown entity '" + id + "'");
        int period = cell_int(init, r, "period", 0, true);
        if (period < 1 || period > P)
            fail(Errc::SchemaMismatch, init.file + ": period " + std::to_string(period));
        double cap = cell_double(init, r, "capacity", 0.0, true);
        check_nonnegative(init.file, id + " initial capacity", cap);
        c.initial_capacity[{id, period}] = cap;
    }

    // ---- carbon cap ----
    Table cap = reader.table("carbon_cap", true);
    c.carbon_cap.assign(P, -1.0);
    for (size_t r = 0; r < cap.rows.size(); ++r) {
        int period = cell_int(cap, r, "period", 0, true);
        if (period < 1 || period > P)
            fail(Errc::SchemaMismatch, cap.file + ": period " + std::to_string(period));
        double v = cell_double(cap, r, "cap", 0.0, true);
        check_nonnegative(cap.file, "cap", v);
        c.carbon_cap[period - 1] = v;
    }
    for (int i = 0; i < P; ++i)
        if (c.carbon_cap[i] < 0.0)
            fail(Errc::UncoveredPeriod, "carbon_cap: period " + std::to_string(i + 1));

    // ---- LNG price track ----
    Table lng = reader.table("lng_price", any_lng);
    for (size_t r = 0; r < lng.rows.size(); ++r) {
        LngPriceRow row;
        row.year = cell_int(lng, r, "year", 0, true);
        row.affordable = cell_double(lng, r, "affordable", 0.0, true);
        row.costly = cell_double(lng, r, "costly", 0.0, true);
        check_nonnegative(lng.file, "lng price", row.affordable);
        check_nonnegative(lng.file, "lng price", row.costly);
        c.lng_prices.push_back(row);
    }
    if (any_lng)
        for (const StrategicPeriod& p : c.time.periods()) {
            bool covered = std::any_of(c.lng_prices.begin(), c.lng_prices.end(),
                                       [&](const LngPriceRow& r) { return r.year == p.start_year; });
            if (!covered)
                fail(Errc::UncoveredPeriod, "lng_price: year " + std::to_string(p.start_year));
        }

    // ---- profiles ----
    Table prof = reader.table("profiles", false);
    std::map<std::string, std::vector<char>> seen;
    const int slots = c.hours.size();
    for (size_t r = 0; r < prof.rows.size(); ++r) {
        std::string id = cell(prof, r, "profile");
        check_name(prof.file, id);
        std::string scen = cell(prof, r, "scenario");
        std::string seas = cell(prof, r, "season");
        int w = -1, s = -1;
        for (size_t i = 0; i < c.time.scenarios().size(); ++i)
            if (c.time.scenarios()[i].name == scen) w = static_cast<int>(i);
        for (size_t i = 0; i < c.time.seasons().size(); ++i)
            if (c.time.seasons()[i].name == seas) s = static_cast<int>(i);
        if (w < 0) fail(Errc::SchemaMismatch, prof.file + ": scenario '" + scen + "'");
        if (s < 0) fail(Errc::SchemaMismatch, prof.file + ": season '" + seas + "'");
        int h = cell_int(prof, r, "hour", 0, true);
        if (h < 1 || h > c.time.hours_in_season(s))
            fail(Errc::SchemaMismatch, prof.file + ": hour " + std::to_string(h));
        double v = cell_double(prof, r, "value", 0.0, true);
        auto& vec = c.profiles[id];
        auto& mask = seen[id];
        if (vec.empty()) {
            vec.assign(slots, 0.0);
            mask.assign(slots, 0);
        }
        int flat = c.hours.flat(w, s, h);
        if (mask[flat]) fail(Errc::SchemaMismatch, prof.file + ": duplicate slot for '" + id + "'");
        mask[flat] = 1;
        vec[flat] = v;
    }
    for (const auto& [id, mask] : seen)
        for (int i = 0; i < slots; ++i)
            if (!mask[i]) fail(Errc::ProfileGap, "profile '" + id + "' misses hour slots");

    // profile references and value ranges
    auto require_profile = [&](const std::string& id, const std::string& who, bool availability) {
        if (id.empty()) return;
        auto it = c.profiles.find(id);
        if (it == c.profiles.end())
            fail(Errc::ProfileGap, who + " references missing profile '" + id + "'");
        for (double v : it->second) {
            if (availability && (v < 0.0 || v > 1.0))
                fail(Errc::RateOutOfRange, "availability profile '" + id + "' outside [0,1]");
            if (!availability && !(v > 0.0)) fail(Errc::NonPositiveCOP, "profile '" + id + "'");
        }
    };
    for (const AssetSpec& a : c.catalog.assets()) {
        require_profile(a.availability_profile, a.id, true);
        require_profile(a.output_profile, a.id, false);
    }
    for (const Demand& d : c.demands)
        if (!d.profile.empty() && c.profiles.find(d.profile) == c.profiles.end())
            fail(Errc::ProfileGap, "demand profile '" + d.profile + "' not loaded");

    return c;
}

} // namespace mhorizon
