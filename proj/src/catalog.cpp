#include "mhorizon/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "mhorizon/errors.hpp"

namespace mhorizon {

const std::vector<std::string> ValidatedCatalog::kNone;

bool Topology::has_node(const std::string& n) const {
    return std::find(nodes.begin(), nodes.end(), n) != nodes.end();
}

const Commodity* Topology::find_commodity(const std::string& c) const {
    for (const Commodity& k : commodities)
        if (k.name == c) return &k;
    return nullptr;
}

const AssetSpec* ValidatedCatalog::find(const std::string& id) const {
    for (const AssetSpec& a : assets_)
        if (a.id == id) return &a;
    return nullptr;
}

const std::vector<std::string>& ValidatedCatalog::sources(const std::string& commodity) const {
    auto it = sources_.find(commodity);
    return it == sources_.end() ? kNone : it->second;
}

const std::vector<std::string>& ValidatedCatalog::sinks(const std::string& commodity) const {
    auto it = sinks_.find(commodity);
    return it == sinks_.end() ? kNone : it->second;
}

ValidatedCatalog validate_catalog(std::vector<AssetSpec> assets, const Topology& topology) {
    ValidatedCatalog cat;
    std::set<std::string> ids;
    for (AssetSpec& a : assets) {
        if (!ids.insert(a.id).second) fail(Errc::DuplicateAssetId, a.id);
        if (a.id.find('.') != std::string::npos)
            fail(Errc::SchemaMismatch, "asset id '" + a.id + "' may not contain '.'");
        if (!topology.has_node(a.node)) fail(Errc::UnknownNode, a.id + " at '" + a.node + "'");
        if (a.lifetime_periods < 1)
            fail(Errc::SchemaMismatch, a.id + ": lifetime must be at least one period");
        if (a.capture_rate < 0.0 || a.capture_rate > 1.0)
            fail(Errc::RateOutOfRange, a.id + ": capture rate " + std::to_string(a.capture_rate));
        if (a.category == AssetCategory::ProcessRoute && a.feedstock_cap > 1.0)
            fail(Errc::RateOutOfRange, a.id + ": feedstock cap above 1");
        if (a.process_emission < 0.0) fail(Errc::NegativeEmission, a.id + ": process emission");

        const Commodity* primary = topology.find_commodity(a.primary_commodity);
        if (primary == nullptr) fail(Errc::UnknownCommodity, a.id + ": '" + a.primary_commodity + "'");

        if (a.category == AssetCategory::Storage) {
            if (!a.conversion.empty())
                fail(Errc::SchemaMismatch, a.id + ": storages carry no conversion vector");
            if (primary->kind != CommodityKind::Flow)
                fail(Errc::SchemaMismatch, a.id + ": only flow commodities can be stored");
            if (!(a.charge_eff > 0.0 && a.charge_eff <= 1.0) ||
                !(a.discharge_eff > 0.0 && a.discharge_eff <= 1.0))
                fail(Errc::RateOutOfRange, a.id + ": storage efficiency outside (0,1]");
        } else {
            // the primary output is part of the conversion vector; add the
            // conventional +1 entry when the case omits it
            bool has_primary = false;
            for (const Conversion& c : a.conversion)
                if (c.commodity == a.primary_commodity && c.coefficient > 0) has_primary = true;
            if (!has_primary) a.conversion.push_back({a.primary_commodity, 1.0});

            int positives = 0;
            for (const Conversion& c : a.conversion) {
                const Commodity* k = topology.find_commodity(c.commodity);
                if (k == nullptr) fail(Errc::UnknownCommodity, a.id + ": '" + c.commodity + "'");
                if (c.coefficient > 0) ++positives;
                if (k->kind == CommodityKind::Sector &&
                    (a.category != AssetCategory::ProcessRoute || c.commodity != a.primary_commodity))
                    fail(Errc::DanglingConversion,
                         a.id + ": '" + c.commodity + "' is only balanced through its sector demand");
            }
            if (positives != 1)
                fail(Errc::SchemaMismatch,
                     a.id + ": expected exactly one produced commodity, found " +
                         std::to_string(positives));
            if (a.category == AssetCategory::ProcessRoute &&
                primary->kind != CommodityKind::Sector)
                fail(Errc::SchemaMismatch, a.id + ": route output must be a sector commodity");
        }

        if (a.capture_rate > 0.0 && topology.find_commodity(kCo2Commodity) == nullptr)
            fail(Errc::DanglingConversion, a.id + ": captures CO2 but no co2 flow balance exists");
    }

    cat.assets_ = std::move(assets);
    for (const AssetSpec& a : cat.assets_) {
        if (a.category == AssetCategory::Storage) continue;
        for (const Conversion& c : a.conversion) {
            if (c.coefficient > 0)
                cat.sources_[c.commodity].push_back(a.id);
            else if (c.coefficient < 0)
                cat.sinks_[c.commodity].push_back(a.id);
        }
        // a capturing asset feeds its captured stream into the co2 balance
        if (a.capture_rate > 0.0 && emission_intensity(a, topology) > 0.0)
            cat.sources_[kCo2Commodity].push_back(a.id);
    }
    return cat;
}

CaptureSplit capture_split(double emitted, double capture_rate) {
    if (emitted < 0.0) fail(Errc::NegativeEmission, std::to_string(emitted));
    if (capture_rate < 0.0 || capture_rate > 1.0)
        fail(Errc::RateOutOfRange, std::to_string(capture_rate));
    CaptureSplit s;
    // captured + atmospheric == emitted holds bit-exactly: whichever part is
    // the larger half, the final subtraction below is exact.
    s.captured = capture_rate * emitted;
    s.atmospheric = emitted - s.captured;
    s.captured = emitted - s.atmospheric;
    return s;
}

EmissionParts process_emissions(const AssetSpec& route, double output, const Topology& topology) {
    if (output < 0.0) fail(Errc::NegativeOutput, route.id);
    EmissionParts parts;
    parts.process = route.process_emission * output;
    for (const Conversion& c : route.conversion) {
        if (c.coefficient >= 0) continue;
        const Commodity* k = topology.find_commodity(c.commodity);
        if (k == nullptr) fail(Errc::UnknownCommodity, c.commodity);
        parts.fuel += -c.coefficient * k->emission_factor * output;
    }
    parts.fuel += route.emission_factor * output;
    return parts;
}

double emission_intensity(const AssetSpec& asset, const Topology& topology) {
    double intensity = asset.emission_factor + asset.process_emission;
    for (const Conversion& c : asset.conversion) {
        if (c.coefficient >= 0) continue;
        const Commodity* k = topology.find_commodity(c.commodity);
        if (k != nullptr) intensity += -c.coefficient * k->emission_factor;
    }
    return intensity;
}

double heatpump_output(double electric_input, double cop) {
    if (!(cop > 0.0)) fail(Errc::NonPositiveCOP, std::to_string(cop));
    if (electric_input < 0.0) fail(Errc::NegativeOutput, "electric input");
    return cop * electric_input;
}

} // namespace mhorizon
