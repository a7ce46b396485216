#include "feedersim/timing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "feedersim/calendar.hpp"
#include "feedersim/csvio.hpp"
#include "feedersim/stats.hpp"

namespace feedersim {

PeakTimeDistribution peak_time_distribution(std::span<const SampleRow> samples, int year,
                                            Direction direction, std::uint32_t n_connections) {
    if (samples.empty()) throw std::invalid_argument("peak_time_distribution: no samples");
    const int days = days_in_year(year);
    PeakTimeDistribution dist;
    dist.direction = direction;
    dist.n_connections = n_connections;
    dist.year = year;
    dist.day_histogram.assign(static_cast<std::size_t>(days), 0.0);
    dist.hour_day.assign(static_cast<std::size_t>(days) * kHoursPerDay, 0.0);

    const double weight = 1.0 / static_cast<double>(samples.size());
    for (const SampleRow& row : samples) {
        const std::uint32_t q = row.peak_quarter;
        const std::uint32_t day = q / kQuartersPerDay;
        const std::uint32_t hour = (q % kQuartersPerDay) / kQuartersPerHour;
        if (day >= static_cast<std::uint32_t>(days)) {
            throw std::invalid_argument("peak quarter index outside the year");
        }
        dist.day_histogram[day] += weight;
        dist.hour_day[static_cast<std::size_t>(day) * kHoursPerDay + hour] += weight;
    }
    return dist;
}

double distribution_entropy(std::span<const double> probabilities) {
    double h = 0.0;
    for (double p : probabilities) {
        if (p > 0.0) h -= p * std::log(p);
    }
    return h;
}

std::optional<int> modal_hour_of_day(const PeakTimeDistribution& dist, int day) {
    int best_hour = -1;
    double best_mass = 0.0;
    for (int hour = 0; hour < kHoursPerDay; ++hour) {
        const double mass = dist.cell(day, hour);
        if (mass > best_mass) {
            best_mass = mass;
            best_hour = hour;
        }
    }
    if (best_hour < 0) return std::nullopt;
    return best_hour;
}

std::vector<WeatherOverlayRow> weather_overlay(const PeakTimeDistribution& dist,
                                               const WeatherSeries& weather) {
    if (dist.year != weather.year) {
        throw std::invalid_argument("peak distribution and weather use different years");
    }
    const std::vector<double> temp = daily_mean_temperature(weather);
    const std::vector<double> ssrd = daily_max_ssrd(weather);
    std::vector<WeatherOverlayRow> rows;
    rows.reserve(dist.day_histogram.size());
    for (std::size_t d = 0; d < dist.day_histogram.size(); ++d) {
        rows.push_back({static_cast<int>(d), dist.day_histogram[d], temp[d], ssrd[d]});
    }
    return rows;
}

FeederEnvelope feeder_envelope(const ProfileSet& set, const EnvelopeConfig& config, DayRange days,
                               const WeatherSeries& weather) {
    const int year_days = days_in_year(set.year());
    if (weather.year != set.year()) {
        throw std::invalid_argument("weather year does not match profile year");
    }
    if (days.first < 0 || days.last >= year_days || days.first > days.last) {
        throw std::invalid_argument("day range outside the year");
    }
    if (config.n_samples == 0) throw std::invalid_argument("n_samples must be positive");

    const std::size_t n_days = static_cast<std::size_t>(days.last - days.first + 1);
    const std::size_t range_quarters = n_days * kQuartersPerDay;
    const std::size_t first_quarter = static_cast<std::size_t>(days.first) * kQuartersPerDay;
    const std::size_t n_samples = config.n_samples;
    const bool offtake = config.direction == Direction::offtake;

    // Sample-major matrix of the summed load inside the range; peak quarters
    // are collected per sample and reduced after the parallel pass.
    std::vector<float> matrix(n_samples * range_quarters);
    std::vector<std::uint32_t> peak_quarters(n_samples);

    for_each_sample_sum(
        set, config.n_connections, config.n_samples, config.seed, config.threads,
        [&](std::uint64_t i, std::span<const double> sum, std::span<const std::uint32_t>) {
            float* row = matrix.data() + i * range_quarters;
            for (std::size_t q = 0; q < range_quarters; ++q) {
                row[q] = static_cast<float>(sum[first_quarter + q]);
            }
            std::size_t best = 0;
            if (offtake) {
                for (std::size_t q = 1; q < sum.size(); ++q) {
                    if (sum[q] > sum[best]) best = q;
                }
            } else {
                for (std::size_t q = 1; q < sum.size(); ++q) {
                    if (sum[q] < sum[best]) best = q;
                }
            }
            peak_quarters[i] = static_cast<std::uint32_t>(best);
        });

    FeederEnvelope e;
    e.n_connections = config.n_connections;
    e.n_samples = config.n_samples;
    e.seed = config.seed;
    e.direction = config.direction;
    e.year = set.year();
    e.days = days;
    e.min_kw.resize(range_quarters);
    e.p5_kw.resize(range_quarters);
    e.p25_kw.resize(range_quarters);
    e.median_kw.resize(range_quarters);
    e.p75_kw.resize(range_quarters);
    e.p95_kw.resize(range_quarters);
    e.max_kw.resize(range_quarters);
    e.mean_kw.resize(range_quarters);

    std::vector<double> column(n_samples);
    for (std::size_t q = 0; q < range_quarters; ++q) {
        double total = 0.0;
        for (std::size_t i = 0; i < n_samples; ++i) {
            column[i] = static_cast<double>(matrix[i * range_quarters + q]);
            total += column[i];
        }
        std::sort(column.begin(), column.end());
        e.min_kw[q] = column.front();
        e.max_kw[q] = column.back();
        e.p5_kw[q] = quantile_sorted(column, 5.0);
        e.p25_kw[q] = quantile_sorted(column, 25.0);
        e.median_kw[q] = quantile_sorted(column, 50.0);
        e.p75_kw[q] = quantile_sorted(column, 75.0);
        e.p95_kw[q] = quantile_sorted(column, 95.0);
        e.mean_kw[q] = total / static_cast<double>(n_samples);
    }

    const std::vector<double> temp_q = expand_to_quarter_hours(weather.temperature_c);
    const std::vector<double> ssrd_q = expand_to_quarter_hours(weather.ssrd_kw_m2);
    e.temperature_c.assign(temp_q.begin() + static_cast<std::ptrdiff_t>(first_quarter),
                           temp_q.begin() + static_cast<std::ptrdiff_t>(first_quarter + range_quarters));
    e.ssrd_kw_m2.assign(ssrd_q.begin() + static_cast<std::ptrdiff_t>(first_quarter),
                        ssrd_q.begin() + static_cast<std::ptrdiff_t>(first_quarter + range_quarters));

    e.day_peak_probability.assign(n_days, 0.0);
    e.day_modal_quarter.assign(n_days, std::nullopt);
    std::vector<std::vector<std::uint32_t>> quarter_counts(
        n_days, std::vector<std::uint32_t>(kQuartersPerDay, 0));
    for (std::uint32_t q : peak_quarters) {
        const int day = static_cast<int>(q / kQuartersPerDay);
        if (day < days.first || day > days.last) continue;
        const std::size_t d = static_cast<std::size_t>(day - days.first);
        e.day_peak_probability[d] += 1.0 / static_cast<double>(n_samples);
        quarter_counts[d][q % kQuartersPerDay] += 1;
    }
    for (std::size_t d = 0; d < n_days; ++d) {
        std::uint32_t best_count = 0;
        std::uint32_t best_q = 0;
        for (std::uint32_t q = 0; q < kQuartersPerDay; ++q) {
            if (quarter_counts[d][q] > best_count) {
                best_count = quarter_counts[d][q];
                best_q = q;
            }
        }
        if (best_count > 0) e.day_modal_quarter[d] = best_q;
    }
    return e;
}

std::string day_histogram_csv(const PeakTimeDistribution& dist) {
    std::string out = "day_of_year,peak_probability\n";
    for (std::size_t d = 0; d < dist.day_histogram.size(); ++d) {
        out += std::to_string(d);
        out += ',';
        out += format_double(dist.day_histogram[d]);
        out += '\n';
    }
    return out;
}

std::string hour_day_csv(const PeakTimeDistribution& dist) {
    std::string out = "day_of_year";
    for (int h = 0; h < kHoursPerDay; ++h) {
        out += ",h";
        out += std::to_string(h);
    }
    out += '\n';
    const std::size_t days = dist.day_histogram.size();
    for (std::size_t d = 0; d < days; ++d) {
        out += std::to_string(d);
        for (int h = 0; h < kHoursPerDay; ++h) {
            out += ',';
            out += format_double(dist.cell(static_cast<int>(d), h));
        }
        out += '\n';
    }
    return out;
}

std::string overlay_csv(std::span<const WeatherOverlayRow> rows) {
    std::string out = "day_of_year,peak_probability,mean_temperature_c,max_ssrd_kw_m2\n";
    for (const WeatherOverlayRow& r : rows) {
        out += std::to_string(r.day);
        out += ',';
        out += format_double(r.peak_probability);
        out += ',';
        out += format_double(r.mean_temperature_c);
        out += ',';
        out += format_double(r.max_ssrd_kw_m2);
        out += '\n';
    }
    return out;
}

std::string envelope_csv(const FeederEnvelope& e) {
    std::string out =
        "day_of_year,quarter_of_day,min_kw,p5_kw,p25_kw,median_kw,p75_kw,p95_kw,max_kw,mean_kw,"
        "temperature_c,ssrd_kw_m2\n";
    for (std::size_t q = 0; q < e.min_kw.size(); ++q) {
        const std::size_t day = static_cast<std::size_t>(e.days.first) + q / kQuartersPerDay;
        out += std::to_string(day);
        out += ',';
        out += std::to_string(q % kQuartersPerDay);
        out += ',';
        out += format_double(e.min_kw[q]);
        out += ',';
        out += format_double(e.p5_kw[q]);
        out += ',';
        out += format_double(e.p25_kw[q]);
        out += ',';
        out += format_double(e.median_kw[q]);
        out += ',';
        out += format_double(e.p75_kw[q]);
        out += ',';
        out += format_double(e.p95_kw[q]);
        out += ',';
        out += format_double(e.max_kw[q]);
        out += ',';
        out += format_double(e.mean_kw[q]);
        out += ',';
        out += format_double(e.temperature_c[q]);
        out += ',';
        out += format_double(e.ssrd_kw_m2[q]);
        out += '\n';
    }
    return out;
}

std::string envelope_days_csv(const FeederEnvelope& e) {
    std::string out = "day_of_year,peak_probability,modal_peak_quarter\n";
    for (std::size_t d = 0; d < e.day_peak_probability.size(); ++d) {
        out += std::to_string(static_cast<std::size_t>(e.days.first) + d);
        out += ',';
        out += format_double(e.day_peak_probability[d]);
        out += ',';
        if (e.day_modal_quarter[d].has_value()) out += std::to_string(*e.day_modal_quarter[d]);
        out += '\n';
    }
    return out;
}

}  // namespace feedersim
