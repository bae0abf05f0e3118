#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mhorizon/sparse_lp.hpp"

namespace mhorizon {

// Commodities named "power" and "co2" have fixed roles: loss-of-load exists
// only for power, and captured emission streams flow into co2.
inline constexpr const char* kPowerCommodity = "power";
inline constexpr const char* kCo2Commodity = "co2";

enum class CommodityKind { Flow, Sector };

struct Commodity {
    std::string name;
    CommodityKind kind = CommodityKind::Flow;
    double emission_factor = 0.0; // tCO2 per unit consumed as fuel/feedstock

    friend bool operator==(const Commodity&, const Commodity&) = default;
};

enum class AssetCategory { Generator, Heater, Converter, Storage, ProcessRoute };

struct Conversion {
    std::string commodity;
    double coefficient = 0.0; // per unit of operation; negative = consumed

    friend bool operator==(const Conversion&, const Conversion&) = default;
};

struct AssetSpec {
    std::string id;
    std::string node;
    AssetCategory category = AssetCategory::Converter;
    std::string sector; // reporting sector tag
    std::string group;  // display group for the capacity-mix views
    std::string primary_commodity;
    double invest_cost = 0.0; // EUR per unit capacity
    double fixed_om = 0.0;    // EUR per unit capacity per period
    double var_cost = 0.0;    // EUR per unit output
    int lifetime_periods = 1;
    bool investable = false;
    int investable_from = 1;              // first period open for investment
    double invest_limit = lp::kInf;       // per-period cap on new builds
    std::vector<Conversion> conversion;   // includes the primary output (+1)
    double emission_factor = 0.0;         // tCO2 per unit output, direct
    double process_emission = 0.0;        // routes: emitted regardless of fuel
    double feedstock_cap = -1.0;          // routes: share of sector demand, <0 = none
    double capture_rate = 0.0;
    double charge_eff = 1.0;    // storage only
    double discharge_eff = 1.0; // storage only
    std::string availability_profile; // optional profile id, bounds operation
    std::string output_profile;       // optional profile id, scales outputs (COP)

    friend bool operator==(const AssetSpec&, const AssetSpec&) = default;
};

struct ArcSpec {
    std::string id;
    std::string commodity;
    std::string from;
    std::string to;
    double invest_cost = 0.0;
    double fixed_om = 0.0;
    int lifetime_periods = 1;
    bool investable = false;
    double invest_limit = lp::kInf;
    double loss = 0.0; // fraction lost on the import side
    bool russian = false;

    friend bool operator==(const ArcSpec&, const ArcSpec&) = default;
};

enum class GasSupplyKind { PipelineField, LngTerminal };

struct GasSupplySpec {
    std::string id;
    std::string node;
    GasSupplyKind kind = GasSupplyKind::PipelineField;
    double production_capacity = 0.0; // MWh/h
    double reserves = lp::kInf;       // MWh cumulative; kInf marks unbounded
    bool russian = false;

    friend bool operator==(const GasSupplySpec&, const GasSupplySpec&) = default;
};

struct SequestrationSiteSpec {
    std::string node;
    double max_cumulative = 0.0; // tCO2 over the whole horizon

    friend bool operator==(const SequestrationSiteSpec&, const SequestrationSiteSpec&) = default;
};

struct Topology {
    std::vector<std::string> nodes;
    std::vector<Commodity> commodities;

    bool has_node(const std::string& n) const;
    const Commodity* find_commodity(const std::string& c) const;

    friend bool operator==(const Topology&, const Topology&) = default;
};

class ValidatedCatalog {
public:
    const std::vector<AssetSpec>& assets() const { return assets_; }
    const AssetSpec* find(const std::string& id) const;

    // P^c / sigma^c registries: asset ids producing / consuming a commodity.
    // Capture streams register their asset as a co2 source.
    const std::vector<std::string>& sources(const std::string& commodity) const;
    const std::vector<std::string>& sinks(const std::string& commodity) const;

    friend bool operator==(const ValidatedCatalog&, const ValidatedCatalog&) = default;

private:
    friend ValidatedCatalog validate_catalog(std::vector<AssetSpec> assets,
                                             const Topology& topology);
    std::vector<AssetSpec> assets_;
    std::map<std::string, std::vector<std::string>> sources_;
    std::map<std::string, std::vector<std::string>> sinks_;
    static const std::vector<std::string> kNone;
};

ValidatedCatalog validate_catalog(std::vector<AssetSpec> assets, const Topology& topology);

struct CaptureSplit {
    double captured = 0.0;
    double atmospheric = 0.0;
};

// Splits an emission stream into captured and atmospheric parts; the two
// parts sum back to the input exactly.
CaptureSplit capture_split(double emitted, double capture_rate);

struct EmissionParts {
    double fuel = 0.0;    // from consumed commodities' emission factors
    double process = 0.0; // feedstock chemistry, independent of fuel choice
};

// Per-hour emissions of a route at the given output level, before capture.
EmissionParts process_emissions(const AssetSpec& route, double output, const Topology& topology);

// Direct tCO2 per unit of operation (fuel + direct + process), before capture.
double emission_intensity(const AssetSpec& asset, const Topology& topology);

double heatpump_output(double electric_input, double cop);

} // namespace mhorizon
