#include "feedersim/weather.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "feedersim/csvio.hpp"
#include "feedersim/ingest.hpp"

namespace feedersim {

void WeatherSeries::validate() const {
    const auto expected = static_cast<std::size_t>(hours_in_year(year));
    if (temperature_c.size() != expected || ssrd_kw_m2.size() != expected)
        throw std::invalid_argument("weather series length != " + std::to_string(expected));
    for (double t : temperature_c)
        if (!std::isfinite(t)) throw std::invalid_argument("non-finite temperature");
    for (double s : ssrd_kw_m2) {
        if (!std::isfinite(s)) throw std::invalid_argument("non-finite ssrd");
        if (s < 0.0) throw std::invalid_argument("negative ssrd value");
    }
}

WeatherSeries ingest_weather(const std::string& path, int year) {
    const std::string text = read_text_file(path);
    const auto lines = split_lines(text);
    const auto expected = static_cast<std::size_t>(hours_in_year(year));

    WeatherSeries w;
    w.year = year;
    w.temperature_c.assign(expected, std::nan(""));
    w.ssrd_kw_m2.assign(expected, std::nan(""));

    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        const auto fields = split_fields(lines[ln]);
        if (ln == 0 && !fields.empty() && fields[0] == "timestamp") continue;
        if (fields.size() != 3)
            throw std::invalid_argument("weather line " + std::to_string(ln + 1) +
                                        ": expected 3 fields");
        const TimedReading r = parse_local_timestamp(fields[0]);
        if (r.year != year)
            throw std::invalid_argument("weather line " + std::to_string(ln + 1) +
                                        ": year outside declared year");
        if (r.slot % kQuartersPerHour != 0)
            throw std::invalid_argument("weather line " + std::to_string(ln + 1) +
                                        ": timestamp not on the hour");
        const auto temp = parse_double(fields[1]);
        const auto ssrd = parse_double(fields[2]);
        if (!temp || !ssrd)
            throw std::invalid_argument("weather line " + std::to_string(ln + 1) + ": bad value");
        const std::size_t hour = static_cast<std::size_t>(r.day) * kHoursPerDay +
                                 static_cast<std::size_t>(r.slot / kQuartersPerHour);
        w.temperature_c[hour] = *temp;
        w.ssrd_kw_m2[hour] = *ssrd;
    }

    for (std::size_t h = 0; h < expected; ++h) {
        if (std::isnan(w.temperature_c[h]) || std::isnan(w.ssrd_kw_m2[h])) {
            const int day = static_cast<int>(h) / kHoursPerDay;
            throw std::invalid_argument(
                "weather file does not cover the full year: missing hour at " +
                format_local_timestamp(year, day, (static_cast<int>(h) % kHoursPerDay) *
                                                      kQuartersPerHour));
        }
    }
    w.validate();
    return w;
}

void export_weather(const WeatherSeries& w, const std::string& path) {
    std::string out = "timestamp,temperature_c,ssrd_kw_m2\n";
    out.reserve(w.temperature_c.size() * 40);
    for (std::size_t h = 0; h < w.temperature_c.size(); ++h) {
        const int day = static_cast<int>(h) / kHoursPerDay;
        const int slot = (static_cast<int>(h) % kHoursPerDay) * kQuartersPerHour;
        out += format_local_timestamp(w.year, day, slot);
        out += ',';
        out += format_double_exact(w.temperature_c[h]);
        out += ',';
        out += format_double_exact(w.ssrd_kw_m2[h]);
        out += '\n';
    }
    write_text_file(path, out);
}

namespace {
template <typename Fold>
std::vector<double> daily_fold(const WeatherSeries& w, const std::vector<double>& hourly,
                               Fold fold) {
    const int days = days_in_year(w.year);
    std::vector<double> out(static_cast<std::size_t>(days));
    for (int d = 0; d < days; ++d) {
        const std::size_t base = static_cast<std::size_t>(d) * kHoursPerDay;
        out[static_cast<std::size_t>(d)] = fold(&hourly[base]);
    }
    return out;
}
}  // namespace

std::vector<double> daily_mean_temperature(const WeatherSeries& w) {
    w.validate();
    return daily_fold(w, w.temperature_c, [](const double* day) {
        double sum = 0.0;
        for (int h = 0; h < kHoursPerDay; ++h) sum += day[h];
        return sum / kHoursPerDay;
    });
}

std::vector<double> daily_max_ssrd(const WeatherSeries& w) {
    w.validate();
    return daily_fold(w, w.ssrd_kw_m2, [](const double* day) {
        return *std::max_element(day, day + kHoursPerDay);
    });
}

std::vector<double> expand_to_quarter_hours(std::span<const double> hourly) {
    std::vector<double> out;
    out.reserve(hourly.size() * kQuartersPerHour);
    for (double v : hourly)
        for (int q = 0; q < kQuartersPerHour; ++q) out.push_back(v);
    return out;
}

}  // namespace feedersim
