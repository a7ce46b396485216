#pragma once

#include <span>
#include <string>
#include <vector>

#include "feedersim/calendar.hpp"

namespace feedersim {

/// Hourly weather for one year at a single geographic point: air temperature
/// at 2 m (degC) and surface solar radiation downwards (kW/m2).
struct WeatherSeries {
    std::vector<double> temperature_c;
    std::vector<double> ssrd_kw_m2;
    int year = 0;

    int hours() const { return hours_in_year(year); }
    void validate() const;  // throws on wrong lengths or negative ssrd
};

/// Reads (timestamp, temperature_c, ssrd_kw_m2) hourly rows covering the year.
WeatherSeries ingest_weather(const std::string& path, int year);
void export_weather(const WeatherSeries& w, const std::string& path);

std::vector<double> daily_mean_temperature(const WeatherSeries& w);
std::vector<double> daily_max_ssrd(const WeatherSeries& w);

/// Each hourly value repeated 4x; preserves min, max, and mean.
std::vector<double> expand_to_quarter_hours(std::span<const double> hourly);

}  // namespace feedersim
