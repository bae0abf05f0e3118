#include "mhorizon/model_builder.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "mhorizon/errors.hpp"

namespace mhorizon {

using lp::kInf;
using lp::Sense;

// ---------------------------------------------------------------- registry

VariableRegistry::Key VariableRegistry::key(VarKind kind, const std::string& entity, int period,
                                            int scenario, int season, int hour, int direction) {
    return {static_cast<int>(kind), entity, period, scenario, season, hour, direction};
}

int VariableRegistry::add(const VarInfo& info) {
    int col = static_cast<int>(infos_.size());
    auto [it, fresh] = index_.emplace(
        key(info.kind, info.entity, info.period, info.scenario, info.season, info.hour,
            info.direction),
        col);
    if (!fresh) fail(Errc::DuplicateAssetId, "variable registered twice for '" + info.entity + "'");
    infos_.push_back(info);
    return col;
}

int VariableRegistry::column(VarKind kind, const std::string& entity, int period, int scenario,
                             int season, int hour, int direction) const {
    auto it = index_.find(key(kind, entity, period, scenario, season, hour, direction));
    if (it == index_.end())
        fail(Errc::DimensionMismatch, "no column registered for entity '" + entity + "'");
    return it->second;
}

bool VariableRegistry::has(VarKind kind, const std::string& entity, int period, int scenario,
                           int season, int hour, int direction) const {
    return index_.count(key(kind, entity, period, scenario, season, hour, direction)) > 0;
}

long VariableRegistry::count(VarKind kind) const {
    long n = 0;
    for (const VarInfo& v : infos_)
        if (v.kind == kind) ++n;
    return n;
}

// ---------------------------------------------------------------- row names

std::string format_row_name(const RowName& n) {
    std::string s = n.tag + "." + n.entity + "." + n.qualifier;
    if (n.period >= 0) s += ".p" + std::to_string(n.period);
    if (n.scenario >= 0) s += ".w" + std::to_string(n.scenario);
    if (n.season >= 0) s += ".s" + std::to_string(n.season);
    if (n.hour >= 0) s += ".h" + std::to_string(n.hour);
    return s;
}

RowName parse_row_name(const std::string& name) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        size_t dot = name.find('.', start);
        if (dot == std::string::npos) {
            parts.push_back(name.substr(start));
            break;
        }
        parts.push_back(name.substr(start, dot - start));
        start = dot + 1;
    }
    if (parts.size() < 3) fail(Errc::SchemaMismatch, "row name '" + name + "'");
    RowName n;
    n.tag = parts[0];
    n.entity = parts[1];
    n.qualifier = parts[2];
    for (size_t i = 3; i < parts.size(); ++i) {
        const std::string& p = parts[i];
        if (p.size() < 2) fail(Errc::SchemaMismatch, "row name '" + name + "'");
        int value = std::stoi(p.substr(1));
        switch (p[0]) {
            case 'p': n.period = value; break;
            case 'w': n.scenario = value; break;
            case 's': n.season = value; break;
            case 'h': n.hour = value; break;
            default: fail(Errc::SchemaMismatch, "row name '" + name + "'");
        }
    }
    return n;
}

namespace {

const std::map<std::string, const char*> kFamilyDescriptions = {
    {"fb", "hourly flow balance per commodity and node"},
    {"life", "investments and remaining initial capacity sum to total capacity"},
    {"capbnd", "operation bounded by availability times capacity"},
    {"arccap", "directed transport bounded by arc capacity"},
    {"stor", "storage level balance (first hour starts from half the capacity)"},
    {"storend", "season-neutral storage: last hour pinned to half capacity"},
    {"storcap", "storage level bounded by storage capacity"},
    {"cum", "cumulative production/injection bounded by reserves or site capacity"},
    {"cap", "shared emission cap across all sectors per period and scenario"},
    {"ind", "sector annual production meets annual demand"},
    {"indhr", "inflexible hourly sector output pinned to the nominal rate"},
    {"indlo", "flexible sector output above the lower band"},
    {"indhi", "flexible sector output below the upper band"},
    {"feed", "feedstock-limited route share of sector annual demand"},
};

std::string column_name(const VarInfo& v) {
    auto time_suffix = [&](std::string s) {
        if (v.period >= 0) s += ".p" + std::to_string(v.period + 1);
        if (v.scenario >= 0) s += ".w" + std::to_string(v.scenario + 1);
        if (v.season >= 0) s += ".s" + std::to_string(v.season + 1);
        if (v.hour >= 0) s += ".h" + std::to_string(v.hour);
        return s;
    };
    switch (v.kind) {
        case VarKind::Invest: return time_suffix("x." + v.entity);
        case VarKind::Capacity: return time_suffix("v." + v.entity);
        case VarKind::Operation: return time_suffix("y." + v.entity);
        case VarKind::Flow:
            return time_suffix("f." + v.entity + (v.direction == 0 ? ".fwd" : ".rev"));
        case VarKind::LossOfLoad: return time_suffix("ll." + v.entity);
        case VarKind::StorageCharge: return time_suffix("sc." + v.entity);
        case VarKind::StorageDischarge: return time_suffix("sd." + v.entity);
        case VarKind::StorageLevel: return time_suffix("sl." + v.entity);
        case VarKind::Supply: return time_suffix("sup." + v.entity);
        case VarKind::Injection: return time_suffix("inj." + v.entity);
    }
    return "col";
}

} // namespace

std::string constraint_audit(const ModelArtifacts& artifacts) {
    std::string out = "constraint audit for " + artifacts.lp.name + "\n";
    for (const auto& [tag, count] : artifacts.row_families) {
        auto it = kFamilyDescriptions.find(tag);
        out += tag + ": " + std::to_string(count) + " rows — " +
               (it != kFamilyDescriptions.end() ? it->second : "(unknown family)") + "\n";
    }
    return out;
}

// ---------------------------------------------------------------- builder

ModelBuilder::ModelBuilder(const CaseData& c) : c_(c) {
    lp_.name = c.name;
    periods_ = static_cast<int>(c.time.periods().size());
    scenarios_ = static_cast<int>(c.time.scenarios().size());
}

template <typename Fn> void ModelBuilder::for_each_slot(Fn&& fn) const {
    for (int i = 0; i < periods_; ++i)
        for (int w = 0; w < scenarios_; ++w)
            for (int s = 0; s < static_cast<int>(c_.time.seasons().size()); ++s)
                for (int h = 1; h <= c_.time.hours_in_season(s); ++h) fn(i, w, s, h);
}

double ModelBuilder::avail(const AssetSpec& a, int w, int s, int h) const {
    return c_.profile_value(a.availability_profile, w, s, h);
}

double ModelBuilder::out_scale(const AssetSpec& a, int w, int s, int h) const {
    return c_.profile_value(a.output_profile, w, s, h);
}

int ModelBuilder::add_row(const RowName& name, Sense sense, double rhs) {
    return lp_.add_row(format_row_name(name), sense, rhs);
}

std::vector<const AssetSpec*> ModelBuilder::routes_for(const std::string& sector,
                                                       const std::string& node) const {
    std::vector<const AssetSpec*> routes;
    for (const AssetSpec& a : c_.catalog.assets())
        if (a.category == AssetCategory::ProcessRoute && a.node == node &&
            a.primary_commodity == sector)
            routes.push_back(&a);
    return routes;
}

void ModelBuilder::register_variables() {
    if (registered_) fail(Errc::DimensionMismatch, "variables already registered");
    registered_ = true;

    auto add_col = [&](const VarInfo& info, double lb, double ub) {
        reg_.add(info);
        lp_.add_col(column_name(info), lb, ub, 0.0);
    };

    // investments and total capacities, scenario-free by construction
    auto capacity_entity = [&](const std::string& id, const std::string& node) {
        for (int i = 0; i < periods_; ++i)
            add_col({VarKind::Invest, id, node, 0, i, -1, -1, -1}, 0.0, kInf);
        for (int i = 0; i < periods_; ++i)
            add_col({VarKind::Capacity, id, node, 0, i, -1, -1, -1}, 0.0, kInf);
    };
    for (const AssetSpec& a : c_.catalog.assets()) capacity_entity(a.id, a.node);
    for (const ArcSpec& a : c_.arcs) capacity_entity(a.id, a.from);

    for (const AssetSpec& a : c_.catalog.assets()) {
        if (a.category == AssetCategory::Storage) continue;
        for_each_slot([&](int i, int w, int s, int h) {
            add_col({VarKind::Operation, a.id, a.node, 0, i, w, s, h}, 0.0, kInf);
        });
    }
    for (const AssetSpec& a : c_.catalog.assets()) {
        if (a.category != AssetCategory::Storage) continue;
        for_each_slot([&](int i, int w, int s, int h) {
            add_col({VarKind::StorageCharge, a.id, a.node, 0, i, w, s, h}, 0.0, kInf);
        });
        for_each_slot([&](int i, int w, int s, int h) {
            add_col({VarKind::StorageDischarge, a.id, a.node, 0, i, w, s, h}, 0.0, kInf);
        });
        for_each_slot([&](int i, int w, int s, int h) {
            add_col({VarKind::StorageLevel, a.id, a.node, 0, i, w, s, h}, 0.0, kInf);
        });
    }
    for (const ArcSpec& a : c_.arcs)
        for (int dir = 0; dir < 2; ++dir)
            for_each_slot([&](int i, int w, int s, int h) {
                add_col({VarKind::Flow, a.id, dir == 0 ? a.from : a.to, dir, i, w, s, h}, 0.0,
                        kInf);
            });
    for (const GasSupplySpec& g : c_.gas_supplies) {
        const double cap = c_.supply_capacity(g);
        for_each_slot([&](int i, int w, int s, int h) {
            add_col({VarKind::Supply, g.id, g.node, 0, i, w, s, h}, 0.0, cap);
        });
    }
    for (const SequestrationSiteSpec& site : c_.sequestration_sites)
        for_each_slot([&](int i, int w, int s, int h) {
            add_col({VarKind::Injection, "seq_" + site.node, site.node, 0, i, w, s, h}, 0.0,
                    kInf);
        });
    for (const std::string& n : c_.topology.nodes) {
        if (!c_.commodity_present(kPowerCommodity, n)) continue;
        for_each_slot([&](int i, int w, int s, int h) {
            add_col({VarKind::LossOfLoad, n, n, 0, i, w, s, h}, 0.0, kInf);
        });
    }
}

void ModelBuilder::add_investment_limits() {
    auto bound = [&](const std::string& id, bool investable, int from, double limit) {
        for (int i = 0; i < periods_; ++i) {
            int col = reg_.column(VarKind::Invest, id, i);
            if (!investable || i + 1 < from) {
                lp_.col_upper[col] = 0.0; // not an investment option
            } else {
                lp_.col_upper[col] = limit;
            }
        }
    };
    for (const AssetSpec& a : c_.catalog.assets())
        bound(a.id, a.investable, a.investable_from, a.invest_limit);
    for (const ArcSpec& a : c_.arcs) bound(a.id, a.investable, 1, a.invest_limit);
}

void ModelBuilder::add_lifetime_coupling() {
    auto couple = [&](const std::string& id, int lifetime) {
        for (int i = 0; i < periods_; ++i) {
            int row = add_row({"life", id, reg_.info(reg_.column(VarKind::Capacity, id, i)).node,
                               i + 1, -1, -1, -1},
                              Sense::EQ, -c_.initial_capacity_of(id, i + 1));
            for (int j = std::max(0, i - lifetime + 1); j <= i; ++j)
                lp_.add_coeff(row, reg_.column(VarKind::Invest, id, j), 1.0);
            lp_.add_coeff(row, reg_.column(VarKind::Capacity, id, i), -1.0);
        }
    };
    for (const AssetSpec& a : c_.catalog.assets()) couple(a.id, a.lifetime_periods);
    for (const ArcSpec& a : c_.arcs) couple(a.id, a.lifetime_periods);
}

void ModelBuilder::add_operation_bounds() {
    for (const AssetSpec& a : c_.catalog.assets()) {
        if (a.category == AssetCategory::Storage) continue;
        for_each_slot([&](int i, int w, int s, int h) {
            int row = add_row({"capbnd", a.id, a.node, i + 1, w + 1, s + 1, h}, Sense::LE, 0.0);
            lp_.add_coeff(row, reg_.column(VarKind::Operation, a.id, i, w, s, h), 1.0);
            lp_.add_coeff(row, reg_.column(VarKind::Capacity, a.id, i), -avail(a, w, s, h));
        });
    }
    for (const ArcSpec& a : c_.arcs) {
        const double scale = c_.arc_scale(a);
        for (int dir = 0; dir < 2; ++dir)
            for_each_slot([&](int i, int w, int s, int h) {
                int row = add_row({"arccap", a.id, dir == 0 ? "fwd" : "rev", i + 1, w + 1, s + 1, h},
                                  Sense::LE, 0.0);
                lp_.add_coeff(row, reg_.column(VarKind::Flow, a.id, i, w, s, h, dir), 1.0);
                lp_.add_coeff(row, reg_.column(VarKind::Capacity, a.id, i), -scale);
            });
    }
}

void ModelBuilder::add_flow_balances() {
    for (const std::string& commodity : c_.flow_commodities()) {
        for (const std::string& node : c_.topology.nodes) {
            if (!c_.commodity_present(commodity, node)) continue;

            // a commodity with demand somewhere must be producible or importable
            if (c_.has_hourly_demand(commodity, node) && commodity != kPowerCommodity) {
                bool reachable = false;
                for (const AssetSpec& a : c_.catalog.assets()) {
                    if (a.node != node) continue;
                    if (a.category == AssetCategory::Storage && a.primary_commodity == commodity)
                        reachable = true;
                    for (const Conversion& cv : a.conversion)
                        if (cv.commodity == commodity && cv.coefficient > 0) reachable = true;
                }
                for (const ArcSpec& a : c_.arcs)
                    if (a.commodity == commodity && (a.from == node || a.to == node))
                        reachable = true;
                if (commodity == kGasCommodity)
                    for (const GasSupplySpec& g : c_.gas_supplies)
                        if (g.node == node) reachable = true;
                if (!reachable)
                    fail(Errc::NoSupplyPath, commodity + " demanded at " + node +
                                                 " with no source and no import arc");
            }

            for_each_slot([&](int i, int w, int s, int h) {
                int row = add_row({"fb", commodity, node, i + 1, w + 1, s + 1, h}, Sense::EQ,
                                  c_.demand_at(commodity, node, i + 1, w, s, h));
                for (const AssetSpec& a : c_.catalog.assets()) {
                    if (a.node != node) continue;
                    if (a.category == AssetCategory::Storage) {
                        if (a.primary_commodity == commodity) {
                            lp_.add_coeff(row,
                                          reg_.column(VarKind::StorageDischarge, a.id, i, w, s, h),
                                          1.0);
                            lp_.add_coeff(row,
                                          reg_.column(VarKind::StorageCharge, a.id, i, w, s, h),
                                          -1.0);
                        }
                        continue;
                    }
                    double coeff = 0.0;
                    for (const Conversion& cv : a.conversion)
                        if (cv.commodity == commodity)
                            coeff += cv.coefficient > 0
                                         ? cv.coefficient * out_scale(a, w, s, h)
                                         : cv.coefficient;
                    if (commodity == kCo2Commodity && a.capture_rate > 0.0)
                        coeff += capture_split(emission_intensity(a, c_.topology), a.capture_rate)
                                     .captured;
                    if (coeff != 0.0)
                        lp_.add_coeff(row, reg_.column(VarKind::Operation, a.id, i, w, s, h),
                                      coeff);
                }
                if (commodity == kGasCommodity)
                    for (const GasSupplySpec& g : c_.gas_supplies)
                        if (g.node == node)
                            lp_.add_coeff(row, reg_.column(VarKind::Supply, g.id, i, w, s, h),
                                          1.0);
                if (commodity == kCo2Commodity && c_.site_at(node) != nullptr)
                    lp_.add_coeff(
                        row, reg_.column(VarKind::Injection, "seq_" + node, i, w, s, h), -1.0);
                for (const ArcSpec& a : c_.arcs) {
                    if (a.commodity != commodity) continue;
                    if (a.from == node) {
                        lp_.add_coeff(row, reg_.column(VarKind::Flow, a.id, i, w, s, h, 0), -1.0);
                        lp_.add_coeff(row, reg_.column(VarKind::Flow, a.id, i, w, s, h, 1),
                                      1.0 - a.loss);
                    } else if (a.to == node) {
                        lp_.add_coeff(row, reg_.column(VarKind::Flow, a.id, i, w, s, h, 0),
                                      1.0 - a.loss);
                        lp_.add_coeff(row, reg_.column(VarKind::Flow, a.id, i, w, s, h, 1), -1.0);
                    }
                }
                if (commodity == kPowerCommodity && reg_.has(VarKind::LossOfLoad, node, i, w, s, h))
                    lp_.add_coeff(row, reg_.column(VarKind::LossOfLoad, node, i, w, s, h), 1.0);
            });
        }
    }
}

void ModelBuilder::add_storage_dynamics() {
    for (const AssetSpec& a : c_.catalog.assets()) {
        if (a.category != AssetCategory::Storage) continue;
        for_each_slot([&](int i, int w, int s, int h) {
            // level balance; the first hour starts from half the capacity
            int row = add_row({"stor", a.id, a.node, i + 1, w + 1, s + 1, h}, Sense::EQ, 0.0);
            lp_.add_coeff(row, reg_.column(VarKind::StorageLevel, a.id, i, w, s, h), 1.0);
            lp_.add_coeff(row, reg_.column(VarKind::StorageCharge, a.id, i, w, s, h),
                          -a.charge_eff);
            lp_.add_coeff(row, reg_.column(VarKind::StorageDischarge, a.id, i, w, s, h),
                          1.0 / a.discharge_eff);
            if (h == 1)
                lp_.add_coeff(row, reg_.column(VarKind::Capacity, a.id, i), -0.5);
            else
                lp_.add_coeff(row, reg_.column(VarKind::StorageLevel, a.id, i, w, s, h - 1),
                              -1.0);

            // level never exceeds capacity
            int capr = add_row({"storcap", a.id, a.node, i + 1, w + 1, s + 1, h}, Sense::LE, 0.0);
            lp_.add_coeff(capr, reg_.column(VarKind::StorageLevel, a.id, i, w, s, h), 1.0);
            lp_.add_coeff(capr, reg_.column(VarKind::Capacity, a.id, i), -1.0);

            if (h == c_.time.hours_in_season(s)) {
                // no net gain or loss across the season
                int endr =
                    add_row({"storend", a.id, a.node, i + 1, w + 1, s + 1, -1}, Sense::EQ, 0.0);
                lp_.add_coeff(endr, reg_.column(VarKind::StorageLevel, a.id, i, w, s, h), 1.0);
                lp_.add_coeff(endr, reg_.column(VarKind::Capacity, a.id, i), -0.5);
            }
        });
    }
}

void ModelBuilder::add_cumulative_limits() {
    const double L = c_.time.period_length_years();
    for (const GasSupplySpec& g : c_.gas_supplies) {
        if (!std::isfinite(g.reserves)) continue;
        for (int w = 0; w < scenarios_; ++w) {
            int row = add_row({"cum", g.id, g.node, -1, w + 1, -1, -1}, Sense::LE, g.reserves);
            for_each_slot([&](int i, int ww, int s, int h) {
                if (ww != w) return;
                lp_.add_coeff(row, reg_.column(VarKind::Supply, g.id, i, w, s, h),
                              L * c_.time.seasons()[s].weight);
            });
        }
    }
    for (const SequestrationSiteSpec& site : c_.sequestration_sites) {
        for (int w = 0; w < scenarios_; ++w) {
            int row = add_row({"cum", "seq_" + site.node, site.node, -1, w + 1, -1, -1}, Sense::LE,
                              site.max_cumulative);
            for_each_slot([&](int i, int ww, int s, int h) {
                if (ww != w) return;
                lp_.add_coeff(row, reg_.column(VarKind::Injection, "seq_" + site.node, i, w, s, h),
                              L * c_.time.seasons()[s].weight);
            });
        }
    }
}

void ModelBuilder::add_emission_cap() {
    if (static_cast<int>(c_.carbon_cap.size()) != periods_)
        fail(Errc::MissingCapTrajectory,
             "carbon cap covers " + std::to_string(c_.carbon_cap.size()) + " of " +
                 std::to_string(periods_) + " periods");
    const double L = c_.time.period_length_years();
    for (int i = 0; i < periods_; ++i) {
        for (int w = 0; w < scenarios_; ++w) {
            int row = add_row({"cap", kCo2Commodity, "all", i + 1, w + 1, -1, -1}, Sense::LE,
                              L * c_.carbon_cap[i]);
            for (const AssetSpec& a : c_.catalog.assets()) {
                if (a.category == AssetCategory::Storage) continue;
                const double atmospheric =
                    capture_split(emission_intensity(a, c_.topology), a.capture_rate).atmospheric;
                if (atmospheric == 0.0) continue;
                for (int s = 0; s < static_cast<int>(c_.time.seasons().size()); ++s)
                    for (int h = 1; h <= c_.time.hours_in_season(s); ++h)
                        lp_.add_coeff(row, reg_.column(VarKind::Operation, a.id, i, w, s, h),
                                      L * c_.time.seasons()[s].weight * atmospheric);
            }
        }
    }
}

void ModelBuilder::add_industry_demand() {
    const double L = c_.time.period_length_years();
    const double year_hours = c_.annual_equiv_hours();
    const double f = c_.options.flexibility_fraction;

    std::vector<std::pair<std::string, std::string>> groups;
    for (const AnnualDemand& d : c_.annual_demands) {
        std::pair<std::string, std::string> key{d.sector, d.node};
        if (std::find(groups.begin(), groups.end(), key) == groups.end()) groups.push_back(key);
    }

    for (const auto& [sector, node] : groups) {
        std::vector<const AssetSpec*> routes = routes_for(sector, node);
        std::vector<double> demand(periods_, 0.0);
        for (const AnnualDemand& d : c_.annual_demands)
            if (d.sector == sector && d.node == node) demand[d.period - 1] = d.amount;

        // pre-flight: demand beyond what the routes could ever produce
        for (int i = 0; i < periods_; ++i) {
            double max_rate = 0.0;
            for (const AssetSpec* r : routes) {
                double cap = c_.initial_capacity_of(r->id, i + 1);
                if (r->investable && i + 1 >= r->investable_from) {
                    int windows = std::min(r->lifetime_periods, i + 2 - r->investable_from);
                    cap += r->invest_limit * windows;
                }
                max_rate += cap;
            }
            if (std::isfinite(max_rate) && max_rate * year_hours < demand[i])
                fail(Errc::InfeasibleDemand,
                     sector + " at " + node + " period " + std::to_string(i + 1) + ": demand " +
                         std::to_string(demand[i]) + " exceeds route capacity " +
                         std::to_string(max_rate * year_hours));
        }

        for (int i = 0; i < periods_; ++i) {
            const double nominal = demand[i] / year_hours;
            for (int w = 0; w < scenarios_; ++w) {
                int annual = add_row({"ind", sector, node, i + 1, w + 1, -1, -1}, Sense::GE,
                                     L * demand[i]);
                for (const AssetSpec* r : routes)
                    for (int s = 0; s < static_cast<int>(c_.time.seasons().size()); ++s)
                        for (int h = 1; h <= c_.time.hours_in_season(s); ++h)
                            lp_.add_coeff(annual,
                                          reg_.column(VarKind::Operation, r->id, i, w, s, h),
                                          L * c_.time.seasons()[s].weight);

                for (const AssetSpec* r : routes) {
                    if (r->feedstock_cap < 0.0) continue;
                    int share = add_row({"feed", r->id, node, i + 1, w + 1, -1, -1}, Sense::LE,
                                        L * r->feedstock_cap * demand[i]);
                    for (int s = 0; s < static_cast<int>(c_.time.seasons().size()); ++s)
                        for (int h = 1; h <= c_.time.hours_in_season(s); ++h)
                            lp_.add_coeff(share,
                                          reg_.column(VarKind::Operation, r->id, i, w, s, h),
                                          L * c_.time.seasons()[s].weight);
                }

                for (int s = 0; s < static_cast<int>(c_.time.seasons().size()); ++s)
                    for (int h = 1; h <= c_.time.hours_in_season(s); ++h) {
                        if (c_.options.flexible_industry) {
                            int lo = add_row({"indlo", sector, node, i + 1, w + 1, s + 1, h},
                                             Sense::GE, (1.0 - f) * nominal);
                            int hi = add_row({"indhi", sector, node, i + 1, w + 1, s + 1, h},
                                             Sense::LE, (1.0 + f) * nominal);
                            for (const AssetSpec* r : routes) {
                                int col = reg_.column(VarKind::Operation, r->id, i, w, s, h);
                                lp_.add_coeff(lo, col, 1.0);
                                lp_.add_coeff(hi, col, 1.0);
                            }
                        } else {
                            int eq = add_row({"indhr", sector, node, i + 1, w + 1, s + 1, h},
                                             Sense::EQ, nominal);
                            for (const AssetSpec* r : routes)
                                lp_.add_coeff(eq,
                                              reg_.column(VarKind::Operation, r->id, i, w, s, h),
                                              1.0);
                        }
                    }
            }
        }
    }
}

void ModelBuilder::build_objective() {
    const double L = c_.time.period_length_years();
    const std::vector<StrategicPeriod>& periods = c_.time.periods();

    // cost tracks must cover every period before any coefficient is written
    for (const GasSupplySpec& g : c_.gas_supplies) {
        if (g.kind != GasSupplyKind::LngTerminal) continue;
        for (const StrategicPeriod& p : periods) {
            bool covered = std::any_of(c_.lng_prices.begin(), c_.lng_prices.end(),
                                       [&](const LngPriceRow& r) { return r.year == p.start_year; });
            if (!covered)
                fail(Errc::MissingCostTrack,
                     g.id + ": no LNG price for year " + std::to_string(p.start_year));
        }
    }

    auto scenario_weight = [&](int i, int w, int s) {
        return periods[i].discount_factor * c_.time.scenarios()[w].probability * L *
               c_.time.seasons()[s].weight;
    };

    for (int col = 0; col < reg_.size(); ++col) {
        const VarInfo& v = reg_.info(col);
        double cost = 0.0;
        switch (v.kind) {
            case VarKind::Invest: {
                const AssetSpec* a = c_.catalog.find(v.entity);
                double unit = 0.0;
                if (a != nullptr) {
                    unit = a->invest_cost;
                } else {
                    for (const ArcSpec& arc : c_.arcs)
                        if (arc.id == v.entity) unit = arc.invest_cost;
                }
                cost = periods[v.period].discount_factor * unit;
                break;
            }
            case VarKind::Capacity: {
                const AssetSpec* a = c_.catalog.find(v.entity);
                double unit = 0.0;
                if (a != nullptr) {
                    unit = a->fixed_om;
                } else {
                    for (const ArcSpec& arc : c_.arcs)
                        if (arc.id == v.entity) unit = arc.fixed_om;
                }
                cost = periods[v.period].discount_factor * unit;
                break;
            }
            case VarKind::Operation: {
                const AssetSpec* a = c_.catalog.find(v.entity);
                cost = scenario_weight(v.period, v.scenario, v.season) * a->var_cost;
                break;
            }
            case VarKind::Supply: {
                const GasSupplySpec* g = nullptr;
                for (const GasSupplySpec& gs : c_.gas_supplies)
                    if (gs.id == v.entity) g = &gs;
                cost = scenario_weight(v.period, v.scenario, v.season) *
                       c_.supply_cost(*g, v.period + 1);
                break;
            }
            case VarKind::LossOfLoad:
                cost = scenario_weight(v.period, v.scenario, v.season) *
                       c_.options.loss_of_load_penalty;
                break;
            default:
                break; // flows, storage motion and injection carry no direct cost
        }
        lp_.objective[col] = cost;
    }
}

ModelArtifacts ModelBuilder::finalize() {
    // deterministic assembly: rows end up in name order no matter the
    // order the families were generated in
    std::vector<int> order(lp_.n_rows);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return lp_.row_name[a] < lp_.row_name[b]; });
    std::vector<int> position(lp_.n_rows);
    for (int k = 0; k < lp_.n_rows; ++k) position[order[k]] = k;

    lp::SparseLP sorted = lp_;
    for (int k = 0; k < lp_.n_rows; ++k) {
        sorted.row_name[k] = lp_.row_name[order[k]];
        sorted.row_sense[k] = lp_.row_sense[order[k]];
        sorted.rhs[k] = lp_.rhs[order[k]];
    }
    for (lp::Triplet& t : sorted.triplets) t.row = position[t.row];

    ModelArtifacts artifacts;
    artifacts.lp = canonicalize(sorted);
    artifacts.registry = reg_;
    for (const std::string& name : artifacts.lp.row_name) {
        std::string tag = name.substr(0, name.find('.'));
        ++artifacts.row_families[tag];
    }
    return artifacts;
}

ModelArtifacts ModelBuilder::build_all() {
    register_variables();
    add_investment_limits();
    add_lifetime_coupling();
    add_operation_bounds();
    add_flow_balances();
    add_storage_dynamics();
    add_cumulative_limits();
    add_emission_cap();
    add_industry_demand();
    build_objective();
    return finalize();
}

ModelArtifacts build_model(const CaseData& c) {
    ModelBuilder builder(c);
    return builder.build_all();
}

} // namespace mhorizon
