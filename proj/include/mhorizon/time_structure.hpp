#pragma once

#include <string>
#include <vector>

namespace mhorizon {

struct Season {
    std::string name;
    int hours = 0;
    bool peak = false;
    double weight = 1.0; // scales one sampled season up to its yearly share

    friend bool operator==(const Season&, const Season&) = default;
};

struct ScenarioSpec {
    std::string name;
    double probability = 0.0;

    friend bool operator==(const ScenarioSpec&, const ScenarioSpec&) = default;
};

struct StrategicPeriod {
    int index = 0; // 1-based
    int start_year = 0;
    double discount_factor = 1.0;

    friend bool operator==(const StrategicPeriod&, const StrategicPeriod&) = default;
};

// Position of one operational hour: period/season/scenario are 0-based
// indices into the structure, hour is 1-based within the season.
struct HourIndex {
    int period = 0;
    int season = 0;
    int hour = 1;
    int scenario = 0;
};

struct TimeConfig {
    int period_count = 8;
    int period_length_years = 5;
    int first_year = 2020;
    double discount_rate = 0.05;
    double annual_hours = 8736.0; // target for sum(weight*hours) over regular seasons
    std::vector<Season> seasons;       // empty -> 4x168h regular + 2x24h peak
    std::vector<ScenarioSpec> scenarios; // empty -> 3 equiprobable

    friend bool operator==(const TimeConfig&, const TimeConfig&) = default;
};

class TimeStructure {
public:
    const std::vector<StrategicPeriod>& periods() const { return periods_; }
    const std::vector<Season>& seasons() const { return seasons_; }
    const std::vector<ScenarioSpec>& scenarios() const { return scenarios_; }
    int period_length_years() const { return period_length_years_; }
    double annual_hours() const { return annual_hours_; }

    int hours_in_season(int season) const { return seasons_[season].hours; }
    long hour_slice_count() const; // periods * scenarios * sum of season hours

    bool valid(const HourIndex& h) const;
    bool is_first_hour(const HourIndex& h) const { return valid(h) && h.hour == 1; }
    bool is_last_hour(const HourIndex& h) const {
        return valid(h) && h.hour == seasons_[h.season].hours;
    }

    friend bool operator==(const TimeStructure&, const TimeStructure&) = default;

private:
    friend TimeStructure build_time_structure(const TimeConfig& config);
    std::vector<StrategicPeriod> periods_;
    std::vector<Season> seasons_;
    std::vector<ScenarioSpec> scenarios_;
    int period_length_years_ = 5;
    double annual_hours_ = 8736.0;
};

TimeStructure build_time_structure(const TimeConfig& config);

// alpha_s of the hour's season; scaling hourly cost by this weight and the
// period length gives the period cost contribution
double annualization_weight(const HourIndex& h, const TimeStructure& ts);

// factor_i = (1+rate)^(-period_length*(i-1))
std::vector<double> discount_factors(double rate, const TimeStructure& ts);

} // namespace mhorizon
