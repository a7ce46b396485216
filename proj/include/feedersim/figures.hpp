#pragma once

#include <string>

#include "feedersim/profile.hpp"
#include "feedersim/sampler.hpp"
#include "feedersim/stats.hpp"
#include "feedersim/timing.hpp"

namespace feedersim {

enum class TrendMetric { peak_per_connection, simultaneity };

/// Self-contained SVG renderers. Coordinates are written with fixed
/// precision and no external resources are referenced, so identical inputs
/// produce byte-identical files.
/// Percentile bands of a report metric against the number of connections.
std::string render_trend_svg(const SamplingReport& report, Direction direction,
                             TrendMetric metric, const std::string& title);
std::string render_envelope_svg(const FeederEnvelope& e, const std::string& title);
std::string render_day_histogram_svg(const PeakTimeDistribution& dist,
                                     const WeatherSeries* weather, const std::string& title);
std::string render_hour_day_svg(const PeakTimeDistribution& dist, const std::string& title);
std::string render_histogram_svg(const Histogram& h, const std::string& title,
                                 const std::string& x_label);
std::string render_profile_panels_svg(const Profile& p, const PanelData& panels,
                                      const std::string& title);

}  // namespace feedersim
