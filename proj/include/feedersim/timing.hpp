#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "feedersim/profile.hpp"
#include "feedersim/sampler.hpp"
#include "feedersim/weather.hpp"

namespace feedersim {

/// Where in the year sampled feeder peaks land. day_histogram[d] and
/// hour_day[d*24+h] are fractions of samples, each summing to 1.
struct PeakTimeDistribution {
    Direction direction = Direction::offtake;
    std::uint32_t n_connections = 0;
    int year = 0;
    std::vector<double> day_histogram;
    std::vector<double> hour_day;

    double cell(int day, int hour) const { return hour_day[static_cast<std::size_t>(day) * 24 + hour]; }
};

PeakTimeDistribution peak_time_distribution(std::span<const SampleRow> samples, int year,
                                            Direction direction, std::uint32_t n_connections);

/// Shannon entropy (nats) of a probability vector; zero bins are skipped.
double distribution_entropy(std::span<const double> probabilities);

/// Modal hour of day d, or absent when no sample peaks on it. Ties resolve
/// to the earliest hour.
std::optional<int> modal_hour_of_day(const PeakTimeDistribution& dist, int day);

struct WeatherOverlayRow {
    int day = 0;
    double peak_probability = 0.0;
    double mean_temperature_c = 0.0;
    double max_ssrd_kw_m2 = 0.0;
};

std::vector<WeatherOverlayRow> weather_overlay(const PeakTimeDistribution& dist,
                                               const WeatherSeries& weather);

/// Inclusive 0-based day-of-year range.
struct DayRange {
    int first = 0;
    int last = 0;
};

struct EnvelopeConfig {
    std::uint32_t n_connections = 40;
    std::uint64_t n_samples = 10000;
    std::uint64_t seed = 0;
    Direction direction = Direction::offtake;
    int threads = 0;
};

/// Quantile bands of the summed feeder load over a day range, plus weather
/// overlays and, per day, the probability that a sampled feeder's year peak
/// falls on it and the modal quarter of day of those peaks. Band vectors run
/// quarter by quarter through the range; day vectors one entry per day.
struct FeederEnvelope {
    std::uint32_t n_connections = 0;
    std::uint64_t n_samples = 0;
    std::uint64_t seed = 0;
    Direction direction = Direction::offtake;
    int year = 0;
    DayRange days;

    std::vector<double> min_kw;
    std::vector<double> p5_kw;
    std::vector<double> p25_kw;
    std::vector<double> median_kw;
    std::vector<double> p75_kw;
    std::vector<double> p95_kw;
    std::vector<double> max_kw;
    std::vector<double> mean_kw;
    std::vector<double> temperature_c;
    std::vector<double> ssrd_kw_m2;

    std::vector<double> day_peak_probability;
    std::vector<std::optional<std::uint32_t>> day_modal_quarter;
};

/// Replays the exact draws run_sampling makes for (seed, n_connections), so
/// the envelope describes the same Monte Carlo population as the report.
FeederEnvelope feeder_envelope(const ProfileSet& set, const EnvelopeConfig& config, DayRange days,
                               const WeatherSeries& weather);

std::string day_histogram_csv(const PeakTimeDistribution& dist);
std::string hour_day_csv(const PeakTimeDistribution& dist);
std::string overlay_csv(std::span<const WeatherOverlayRow> rows);
std::string envelope_csv(const FeederEnvelope& e);
std::string envelope_days_csv(const FeederEnvelope& e);

}  // namespace feedersim
