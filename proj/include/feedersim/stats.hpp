#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace feedersim {

class Rng;

struct MeanSd {
    double mean = 0.0;
    double sd = 0.0;
};

/// Mean and population standard deviation (divisor N).
MeanSd mean_sd(std::span<const double> values);

/// Quantile by linear interpolation between order statistics:
/// h = (n-1) * p/100, result = x[floor(h)] + frac(h) * (x[floor(h)+1] - x[floor(h)]).
/// `sorted` must be ascending and nonempty; p in [0, 100].
double quantile_sorted(std::span<const double> sorted, double p);

/// quantile_sorted over an unsorted copy, one value per requested percentile.
std::vector<double> percentiles(std::vector<double> values, std::span<const double> ps);

/// Fixed-width histogram over signed values. Bin i counts values in
/// [origin + i*bin_width, origin + (i+1)*bin_width).
struct Histogram {
    double bin_width = 0.25;
    double origin = 0.0;  // left edge of counts[0]
    std::vector<std::int64_t> counts;

    std::int64_t total() const;
    double bin_left(std::size_t i) const { return origin + static_cast<double>(i) * bin_width; }
    double bin_center(std::size_t i) const { return bin_left(i) + 0.5 * bin_width; }
};

Histogram make_histogram(std::span<const float> values, double bin_width);
Histogram make_histogram(std::span<const double> values, double bin_width);

/// Standard error of the mean estimated by bootstrap resampling.
double bootstrap_mean_sigma(std::span<const double> values, int resamples, Rng& rng);

}  // namespace feedersim
