#pragma once

#include <map>
#include <string>
#include <vector>

#include "mhorizon/catalog.hpp"
#include "mhorizon/time_structure.hpp"

namespace mhorizon {

inline constexpr const char* kGasCommodity = "gas";

// flattened (scenario, season, hour) index space shared by profiles,
// demands and operational variables
struct HourSpace {
    int scenario_count = 0;
    std::vector<int> season_hours;
    std::vector<int> season_offset;
    int per_scenario = 0;

    static HourSpace from(const TimeStructure& ts);
    int flat(int scenario, int season, int hour1) const {
        return scenario * per_scenario + season_offset[season] + hour1 - 1;
    }
    int size() const { return scenario_count * per_scenario; }
};

struct Demand {
    std::string commodity;
    std::string node;
    int period = 1; // 1-based
    double base = 0.0;
    std::string profile; // empty = flat

    friend bool operator==(const Demand&, const Demand&) = default;
};

struct AnnualDemand {
    std::string sector;
    std::string node;
    int period = 1;
    double amount = 0.0;

    friend bool operator==(const AnnualDemand&, const AnnualDemand&) = default;
};

enum class GasCost { Affordable, Costly };

struct ScenarioFlags {
    bool russian_gas = true;
    GasCost gas_cost = GasCost::Affordable;

    friend bool operator==(const ScenarioFlags&, const ScenarioFlags&) = default;
};

struct LngPriceRow {
    int year = 0;
    double affordable = 0.0;
    double costly = 0.0;

    friend bool operator==(const LngPriceRow&, const LngPriceRow&) = default;
};

struct CaseOptions {
    double loss_of_load_penalty = 3000.0; // EUR/MWh, not a published figure
    bool flexible_industry = false;
    double flexibility_fraction = 0.2;
    double h2_mwh_per_tonne = 33.33;
    double gas_cost_affordable = 10.0;
    double gas_cost_costly = 20.0;

    friend bool operator==(const CaseOptions&, const CaseOptions&) = default;
};

class CaseData {
public:
    std::string name;
    int schema = 1;
    TimeConfig time_config;
    TimeStructure time;
    HourSpace hours;
    Topology topology;
    ValidatedCatalog catalog;
    std::vector<ArcSpec> arcs;
    std::vector<GasSupplySpec> gas_supplies;
    std::vector<SequestrationSiteSpec> sequestration_sites;
    std::vector<Demand> demands;
    std::vector<AnnualDemand> annual_demands;
    std::map<std::pair<std::string, int>, double> initial_capacity; // (entity, period)
    std::vector<double> carbon_cap; // tCO2/year per period
    std::vector<LngPriceRow> lng_prices;
    std::map<std::string, std::vector<double>> profiles; // id -> per HourSpace slot
    CaseOptions options;
    ScenarioFlags flags;

    // ---- derived lookups (all respect the active scenario flags) ----
    double profile_value(const std::string& id, int scenario, int season, int hour1) const;
    double demand_at(const std::string& commodity, const std::string& node, int period1,
                     int scenario, int season, int hour1) const;
    bool has_hourly_demand(const std::string& commodity, const std::string& node) const;
    double initial_capacity_of(const std::string& entity, int period1) const;

    double supply_capacity(const GasSupplySpec& g) const;
    double supply_cost(const GasSupplySpec& g, int period1) const;
    double arc_scale(const ArcSpec& a) const; // 0 when a russian arc is switched off

    // per-year hour equivalent of the whole season sample (regular + peak)
    double annual_equiv_hours() const;

    // flow commodity c participates at node n (source, sink, storage, arc,
    // supply, injection or demand)
    bool commodity_present(const std::string& commodity, const std::string& node) const;
    std::vector<std::string> flow_commodities() const;
    const SequestrationSiteSpec* site_at(const std::string& node) const;

    bool equals(const CaseData& other) const;
};

// Switches the gas-price track and the Russian-supply availability. Requires
// a tagged Russian supply or arc when russian_gas is being disabled.
CaseData apply_scenario_flags(const CaseData& base, const ScenarioFlags& flags);

struct DimensionReport {
    long invest_cols = 0, capacity_cols = 0, operation_cols = 0, flow_cols = 0,
         loss_of_load_cols = 0, storage_cols = 0, supply_cols = 0, injection_cols = 0;
    long flow_rows = 0, lifetime_rows = 0, bound_rows = 0, storage_rows = 0,
         cumulative_rows = 0, cap_rows = 0, industry_rows = 0;

    long total_cols() const {
        return invest_cols + capacity_cols + operation_cols + flow_cols + loss_of_load_cols +
               storage_cols + supply_cols + injection_cols;
    }
    long total_rows() const {
        return flow_rows + lifetime_rows + bound_rows + storage_rows + cumulative_rows +
               cap_rows + industry_rows;
    }
};

// Closed-form variable/row counts of the deterministic equivalent, for
// pre-flight sizing; cross-checked against the builder's actual registry.
DimensionReport expand_deterministic_equivalent(const CaseData& c);

} // namespace mhorizon
