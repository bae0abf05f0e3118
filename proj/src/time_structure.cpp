#include "mhorizon/time_structure.hpp"

#include <cmath>

#include "mhorizon/errors.hpp"

namespace mhorizon {

long TimeStructure::hour_slice_count() const {
    long per_scenario = 0;
    for (const Season& s : seasons_) per_scenario += s.hours;
    return static_cast<long>(periods_.size()) * static_cast<long>(scenarios_.size()) *
           per_scenario;
}

bool TimeStructure::valid(const HourIndex& h) const {
    return h.period >= 0 && h.period < static_cast<int>(periods_.size()) && h.season >= 0 &&
           h.season < static_cast<int>(seasons_.size()) && h.scenario >= 0 &&
           h.scenario < static_cast<int>(scenarios_.size()) && h.hour >= 1 &&
           h.hour <= seasons_[h.season].hours;
}

TimeStructure build_time_structure(const TimeConfig& config) {
    TimeConfig cfg = config;
    if (cfg.seasons.empty()) {
        for (const char* name : {"winter", "spring", "summer", "autumn"})
            cfg.seasons.push_back({name, 168, false, 13.0});
        cfg.seasons.push_back({"peak1", 24, true, 1.0});
        cfg.seasons.push_back({"peak2", 24, true, 1.0});
    }
    if (cfg.scenarios.empty())
        for (const char* name : {"w1", "w2", "w3"}) cfg.scenarios.push_back({name, 1.0 / 3.0});

    if (cfg.period_count < 1) fail(Errc::EmptyDimension, "period count must be at least 1");
    if (cfg.seasons.empty()) fail(Errc::EmptyDimension, "at least one season required");
    if (cfg.scenarios.empty()) fail(Errc::EmptyDimension, "at least one scenario required");
    if (cfg.period_length_years < 1)
        fail(Errc::EmptyDimension, "period length must be at least one year");

    double regular_weighted_hours = 0.0;
    for (const Season& s : cfg.seasons) {
        if (s.hours < 1) fail(Errc::EmptyDimension, "season '" + s.name + "' has no hours");
        if (!(s.weight > 0.0))
            fail(Errc::SchemaMismatch, "season '" + s.name + "' needs a positive weight");
        if (!s.peak) regular_weighted_hours += s.weight * s.hours;
    }
    if (std::abs(regular_weighted_hours - cfg.annual_hours) > 1e-6)
        fail(Errc::SchemaMismatch,
             "regular seasons weight to " + std::to_string(regular_weighted_hours) +
                 " h/year, expected " + std::to_string(cfg.annual_hours));

    double prob_sum = 0.0;
    for (const ScenarioSpec& sc : cfg.scenarios) {
        if (!(sc.probability > 0.0))
            fail(Errc::NonPositiveProbability, "scenario '" + sc.name + "'");
        prob_sum += sc.probability;
    }
    if (std::abs(prob_sum - 1.0) > 1e-9)
        fail(Errc::ProbabilitySumMismatch,
             "scenario probabilities sum to " + std::to_string(prob_sum));
    // tolerate sub-1e-9 input noise but store exactly normalized weights
    for (ScenarioSpec& sc : cfg.scenarios) sc.probability /= prob_sum;

    if (cfg.discount_rate < 0.0) fail(Errc::NegativeRate, "discount rate");

    TimeStructure ts;
    ts.seasons_ = cfg.seasons;
    ts.scenarios_ = cfg.scenarios;
    ts.period_length_years_ = cfg.period_length_years;
    ts.annual_hours_ = cfg.annual_hours;
    for (int i = 1; i <= cfg.period_count; ++i) {
        StrategicPeriod p;
        p.index = i;
        p.start_year = cfg.first_year + (i - 1) * cfg.period_length_years;
        p.discount_factor =
            std::pow(1.0 + cfg.discount_rate, -cfg.period_length_years * (i - 1.0));
        ts.periods_.push_back(p);
    }
    return ts;
}

double annualization_weight(const HourIndex& h, const TimeStructure& ts) {
    if (!ts.valid(h))
        fail(Errc::UnknownHour, "hour (" + std::to_string(h.period) + "," +
                                    std::to_string(h.season) + "," + std::to_string(h.hour) + "," +
                                    std::to_string(h.scenario) + ")");
    return ts.seasons()[h.season].weight;
}

std::vector<double> discount_factors(double rate, const TimeStructure& ts) {
    if (rate < 0.0) fail(Errc::NegativeRate, "rate " + std::to_string(rate));
    std::vector<double> factors;
    factors.reserve(ts.periods().size());
    for (const StrategicPeriod& p : ts.periods())
        factors.push_back(std::pow(1.0 + rate, -ts.period_length_years() * (p.index - 1.0)));
    return factors;
}

} // namespace mhorizon
