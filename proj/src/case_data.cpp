#include "mhorizon/case_data.hpp"

#include <algorithm>
#include <cmath>

#include "mhorizon/errors.hpp"

namespace mhorizon {

HourSpace HourSpace::from(const TimeStructure& ts) {
    HourSpace hs;
    hs.scenario_count = static_cast<int>(ts.scenarios().size());
    int off = 0;
    for (const Season& s : ts.seasons()) {
        hs.season_hours.push_back(s.hours);
        hs.season_offset.push_back(off);
        off += s.hours;
    }
    hs.per_scenario = off;
    return hs;
}

double CaseData::profile_value(const std::string& id, int scenario, int season, int hour1) const {
    if (id.empty()) return 1.0;
    auto it = profiles.find(id);
    if (it == profiles.end()) fail(Errc::ProfileGap, "profile '" + id + "' not loaded");
    return it->second[hours.flat(scenario, season, hour1)];
}

double CaseData::demand_at(const std::string& commodity, const std::string& node, int period1,
                           int scenario, int season, int hour1) const {
    for (const Demand& d : demands)
        if (d.commodity == commodity && d.node == node && d.period == period1)
            return d.base * profile_value(d.profile, scenario, season, hour1);
    return 0.0;
}

bool CaseData::has_hourly_demand(const std::string& commodity, const std::string& node) const {
    for (const Demand& d : demands)
        if (d.commodity == commodity && d.node == node && d.base > 0.0) return true;
    return false;
}

double CaseData::initial_capacity_of(const std::string& entity, int period1) const {
    auto it = initial_capacity.find({entity, period1});
    return it == initial_capacity.end() ? 0.0 : it->second;
}

double CaseData::supply_capacity(const GasSupplySpec& g) const {
    if (g.russian && !flags.russian_gas) return 0.0;
    return g.production_capacity;
}

double CaseData::supply_cost(const GasSupplySpec& g, int period1) const {
    if (g.kind == GasSupplyKind::PipelineField)
        return flags.gas_cost == GasCost::Affordable ? options.gas_cost_affordable
                                                     : options.gas_cost_costly;
    const int year = time.periods()[period1 - 1].start_year;
    for (const LngPriceRow& row : lng_prices)
        if (row.year == year)
            return flags.gas_cost == GasCost::Affordable ? row.affordable : row.costly;
    fail(Errc::UncoveredPeriod, "no LNG price for year " + std::to_string(year));
}

double CaseData::arc_scale(const ArcSpec& a) const {
    return (a.russian && !flags.russian_gas) ? 0.0 : 1.0;
}

double CaseData::annual_equiv_hours() const {
    double total = 0.0;
    for (const Season& s : time.seasons()) total += s.weight * s.hours;
    return total;
}

bool CaseData::commodity_present(const std::string& commodity, const std::string& node) const {
    for (const AssetSpec& a : catalog.assets()) {
        if (a.node != node) continue;
        if (a.category == AssetCategory::Storage) {
            if (a.primary_commodity == commodity) return true;
            continue;
        }
        for (const Conversion& c : a.conversion)
            if (c.commodity == commodity && c.coefficient != 0.0) return true;
        if (commodity == kCo2Commodity && a.capture_rate > 0.0 &&
            emission_intensity(a, topology) > 0.0)
            return true;
    }
    for (const ArcSpec& a : arcs)
        if (a.commodity == commodity && (a.from == node || a.to == node)) return true;
    if (commodity == kGasCommodity)
        for (const GasSupplySpec& g : gas_supplies)
            if (g.node == node) return true;
    if (commodity == kCo2Commodity && site_at(node) != nullptr) return true;
    for (const Demand& d : demands)
        if (d.commodity == commodity && d.node == node) return true;
    return false;
}

std::vector<std::string> CaseData::flow_commodities() const {
    std::vector<std::string> out;
    for (const Commodity& c : topology.commodities)
        if (c.kind == CommodityKind::Flow) out.push_back(c.name);
    return out;
}

const SequestrationSiteSpec* CaseData::site_at(const std::string& node) const {
    for (const SequestrationSiteSpec& s : sequestration_sites)
        if (s.node == node) return &s;
    return nullptr;
}

bool CaseData::equals(const CaseData& other) const {
    return name == other.name && schema == other.schema && time_config == other.time_config &&
           time == other.time && topology == other.topology && catalog == other.catalog &&
           arcs == other.arcs && gas_supplies == other.gas_supplies &&
           sequestration_sites == other.sequestration_sites && demands == other.demands &&
           annual_demands == other.annual_demands && initial_capacity == other.initial_capacity &&
           carbon_cap == other.carbon_cap && lng_prices == other.lng_prices &&
           profiles == other.profiles && options == other.options && flags == other.flags;
}

CaseData apply_scenario_flags(const CaseData& base, const ScenarioFlags& flags) {
    if (!flags.russian_gas) {
        bool tagged = false;
        for (const GasSupplySpec& g : base.gas_supplies) tagged = tagged || g.russian;
        for (const ArcSpec& a : base.arcs) tagged = tagged || a.russian;
        if (!tagged)
            fail(Errc::UntaggedRussianSupply,
                 "case '" + base.name + "' has no supply or arc tagged russian");
    }
    CaseData out = base;
    out.flags = flags;
    return out;
}

DimensionReport expand_deterministic_equivalent(const CaseData& c) {
    DimensionReport rep;
    const long P = static_cast<long>(c.time.periods().size());
    const long W = static_cast<long>(c.time.scenarios().size());
    const long hours_per_scenario = c.hours.per_scenario;
    const long slots = P * W * hours_per_scenario;
    const long seasons = static_cast<long>(c.time.seasons().size());

    long storages = 0, operated = 0;
    for (const AssetSpec& a : c.catalog.assets())
        (a.category == AssetCategory::Storage ? storages : operated) += 1;
    const long arcs = static_cast<long>(c.arcs.size());
    const long supplies = static_cast<long>(c.gas_supplies.size());
    const long sites = static_cast<long>(c.sequestration_sites.size());

    rep.invest_cols = (operated + storages + arcs) * P;
    rep.capacity_cols = (operated + storages + arcs) * P;
    rep.operation_cols = operated * slots;
    rep.storage_cols = 3 * storages * slots;
    rep.flow_cols = 2 * arcs * slots;
    rep.supply_cols = supplies * slots;
    rep.injection_cols = sites * slots;

    long power_nodes = 0;
    for (const std::string& n : c.topology.nodes)
        if (c.commodity_present(kPowerCommodity, n)) ++power_nodes;
    rep.loss_of_load_cols = power_nodes * slots;

    for (const std::string& commodity : c.flow_commodities())
        for (const std::string& n : c.topology.nodes)
            if (c.commodity_present(commodity, n)) rep.flow_rows += slots;

    rep.lifetime_rows = (operated + storages + arcs) * P;
    rep.bound_rows = (operated + storages + 2 * arcs) * slots;
    rep.storage_rows = storages * (slots + P * W * seasons);

    long finite_reserves = 0;
    for (const GasSupplySpec& g : c.gas_supplies)
        if (std::isfinite(g.reserves)) ++finite_reserves;
    rep.cumulative_rows = (finite_reserves + sites) * W;

    rep.cap_rows = P * W;

    std::vector<std::pair<std::string, std::string>> groups;
    for (const AnnualDemand& d : c.annual_demands) {
        std::pair<std::string, std::string> key{d.sector, d.node};
        if (std::find(groups.begin(), groups.end(), key) == groups.end()) groups.push_back(key);
    }
    for (const auto& [sector, node] : groups) {
        rep.industry_rows += P * W;                                     // annual
        rep.industry_rows += (c.options.flexible_industry ? 2 : 1) * slots; // hourly band
        for (const AssetSpec& a : c.catalog.assets())
            if (a.category == AssetCategory::ProcessRoute && a.node == node &&
                a.primary_commodity == sector && a.feedstock_cap >= 0.0)
                rep.industry_rows += P * W; // feedstock share cap
    }
    return rep;
}

} // namespace mhorizon
