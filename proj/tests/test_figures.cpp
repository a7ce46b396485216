#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "feedersim/calendar.hpp"
#include "feedersim/figures.hpp"
#include "feedersim/profile.hpp"
#include "feedersim/sampler.hpp"
#include "feedersim/stats.hpp"
#include "feedersim/synth.hpp"
#include "feedersim/timing.hpp"

using namespace feedersim;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size())) {
        ++n;
    }
    return n;
}

bool well_formed_svg(const std::string& svg) {
    return svg.rfind("<svg ", 0) == 0 && svg.size() > 8 &&
           svg.compare(svg.size() - 7, 7, "</svg>\n") == 0 &&
           svg.find("nan") == std::string::npos && svg.find("inf") == std::string::npos;
}

struct Fixture {
    ProfileSet population;
    WeatherSeries weather;
    SamplingReport report;

    Fixture() : weather(synthetic_weather(2022)) {
        GeneratorConfig config;
        config.seed = 7;
        config.counts = {6, 3, 3, 0};
        population = generate_population(config, weather);

        SamplingConfig sc;
        sc.n_connections = {2, 4};
        sc.n_samples = 40;
        sc.seed = 11;
        sc.direction = DirectionMode::both;
        sc.threads = 1;
        report = run_sampling(population, sc);
    }
};

const Fixture& fixture() {
    static const Fixture f;
    return f;
}

}  // namespace

TEST_CASE("trend figures render for both metrics and directions") {
    const SamplingReport& report = fixture().report;
    for (Direction dir : {Direction::offtake, Direction::injection}) {
        for (TrendMetric metric : {TrendMetric::peak_per_connection, TrendMetric::simultaneity}) {
            const std::string svg = render_trend_svg(report, dir, metric, "trend fixture");
            CHECK(well_formed_svg(svg));
            CHECK(svg.find("trend fixture") != std::string::npos);
            CHECK(svg == render_trend_svg(report, dir, metric, "trend fixture"));
        }
    }
}

TEST_CASE("peak time figures have one cell per day and hour") {
    const Fixture& f = fixture();
    const DirectionResult& offtake = direction_result(f.report.sizes[1], Direction::offtake);
    const PeakTimeDistribution dist =
        peak_time_distribution(offtake.samples, 2022, Direction::offtake, 4);

    const std::string hour_day = render_hour_day_svg(dist, "hour by day");
    CHECK(well_formed_svg(hour_day));
    CHECK(count_occurrences(hour_day, " class=\"c\"") == 365u * 24u);

    const std::string with_weather = render_day_histogram_svg(dist, &f.weather, "peak days");
    const std::string without_weather = render_day_histogram_svg(dist, nullptr, "peak days");
    CHECK(well_formed_svg(with_weather));
    CHECK(well_formed_svg(without_weather));
    // The weather overlay adds content; both renders stay deterministic.
    CHECK(with_weather.size() > without_weather.size());
    CHECK(with_weather == render_day_histogram_svg(dist, &f.weather, "peak days"));
}

TEST_CASE("envelope figure renders a one-week winter band") {
    const Fixture& f = fixture();
    EnvelopeConfig config;
    config.n_connections = 4;
    config.n_samples = 30;
    config.seed = 11;
    config.direction = Direction::offtake;
    config.threads = 1;
    const FeederEnvelope envelope =
        feeder_envelope(f.population, config, DayRange{31, 37}, f.weather);
    const std::string svg = render_envelope_svg(envelope, "winter week");
    CHECK(well_formed_svg(svg));
    CHECK(svg.find("winter week") != std::string::npos);
    CHECK(svg == render_envelope_svg(envelope, "winter week"));
}

TEST_CASE("histogram figure renders peak distributions") {
    const Fixture& f = fixture();
    const DirectionResult& offtake = direction_result(f.report.sizes[0], Direction::offtake);
    std::vector<double> peaks;
    for (const SampleRow& row : offtake.samples) peaks.push_back(row.peak_kw);
    const Histogram h = make_histogram(std::span<const double>(peaks), 0.5);
    const std::string svg = render_histogram_svg(h, "feeder peaks", "peak (kW)");
    CHECK(well_formed_svg(svg));
    CHECK(svg.find("feeder peaks") != std::string::npos);
    CHECK(svg.find("peak (kW)") != std::string::npos);

    SUBCASE("single-bin histogram still renders") {
        const std::vector<double> constant(5, 2.0);
        const Histogram one = make_histogram(std::span<const double>(constant), 0.25);
        CHECK(well_formed_svg(render_histogram_svg(one, "constant", "kW")));
    }
}

TEST_CASE("profile panel figure shows the full year heatmap") {
    const Fixture& f = fixture();
    const Profile& p = f.population.at(0);
    const PanelData panels = profile_panels(p);
    const std::string svg = render_profile_panels_svg(p, panels, std::string("profile ") + p.id);
    CHECK(well_formed_svg(svg));
    CHECK(svg.find(p.id) != std::string::npos);
    CHECK(svg.find("kWh net over the year") != std::string::npos);
    CHECK(count_occurrences(svg, " class=\"c\"") == 365u * 96u);
    CHECK(svg == render_profile_panels_svg(p, panels, std::string("profile ") + p.id));
}
