#pragma once

#include <string>
#include <vector>

#include "mhorizon/case_data.hpp"

namespace mhorizon::testing {

// one-node scaffold for constraint-level tests; callers adjust members and
// re-run refresh() if they change time or catalog inputs
struct UnitCase {
    CaseData c;

    UnitCase(int periods, std::vector<Season> seasons, std::vector<ScenarioSpec> scenarios,
             double annual_hours, int period_length_years = 5, double discount_rate = 0.0) {
        c.name = "unit";
        c.time_config.period_count = periods;
        c.time_config.period_length_years = period_length_years;
        c.time_config.discount_rate = discount_rate;
        c.time_config.annual_hours = annual_hours;
        c.time_config.seasons = std::move(seasons);
        c.time_config.scenarios = std::move(scenarios);
        c.topology.nodes = {"N"};
        c.topology.commodities = {
            {"power", CommodityKind::Flow, 0.0},
            {"gas", CommodityKind::Flow, 0.202},
            {"hydrogen", CommodityKind::Flow, 0.0},
            {"co2", CommodityKind::Flow, 0.0},
            {"steel", CommodityKind::Sector, 0.0},
            {"cement", CommodityKind::Sector, 0.0},
        };
        refresh({});
    }

    void refresh(std::vector<AssetSpec> assets) {
        c.time = build_time_structure(c.time_config);
        c.hours = HourSpace::from(c.time);
        c.catalog = validate_catalog(std::move(assets), c.topology);
        c.carbon_cap.assign(c.time.periods().size(), 1e15);
    }
};

inline UnitCase single_hour_case() {
    return UnitCase(1, {{"s", 1, false, 1.0}}, {{"w", 1.0}}, 1.0, 1);
}

} // namespace mhorizon::testing
