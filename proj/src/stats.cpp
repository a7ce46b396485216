#include "feedersim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "feedersim/rng.hpp"

namespace feedersim {

MeanSd mean_sd(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("mean_sd: empty input");
    const double n = static_cast<double>(values.size());
    double sum = 0.0;
    for (double v : values) sum += v;
    const double mean = sum / n;
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    return MeanSd{mean, std::sqrt(ss / n)};
}

double quantile_sorted(std::span<const double> sorted, double p) {
    if (sorted.empty()) throw std::invalid_argument("quantile_sorted: empty input");
    if (p < 0.0 || p > 100.0) throw std::invalid_argument("quantile_sorted: p out of [0,100]");
    if (sorted.size() == 1) return sorted[0];
    const double h = static_cast<double>(sorted.size() - 1) * (p / 100.0);
    const auto lo = static_cast<std::size_t>(h);
    if (lo + 1 >= sorted.size()) return sorted.back();
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

std::vector<double> percentiles(std::vector<double> values, std::span<const double> ps) {
    std::sort(values.begin(), values.end());
    std::vector<double> out;
    out.reserve(ps.size());
    for (double p : ps) out.push_back(quantile_sorted(values, p));
    return out;
}

std::int64_t Histogram::total() const {
    return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

namespace {

template <typename T>
Histogram build_histogram(std::span<const T> values, double bin_width) {
    if (bin_width <= 0.0) throw std::invalid_argument("histogram: bin_width must be positive");
    Histogram h;
    h.bin_width = bin_width;
    if (values.empty()) return h;
    std::int64_t lo = 0, hi = 0;
    bool first = true;
    for (T v : values) {
        const auto bin = static_cast<std::int64_t>(std::floor(static_cast<double>(v) / bin_width));
        if (first) {
            lo = hi = bin;
            first = false;
        } else {
            lo = std::min(lo, bin);
            hi = std::max(hi, bin);
        }
    }
    h.origin = static_cast<double>(lo) * bin_width;
    h.counts.assign(static_cast<std::size_t>(hi - lo + 1), 0);
    for (T v : values) {
        const auto bin = static_cast<std::int64_t>(std::floor(static_cast<double>(v) / bin_width));
        ++h.counts[static_cast<std::size_t>(bin - lo)];
    }
    return h;
}

}  // namespace

Histogram make_histogram(std::span<const float> values, double bin_width) {
    return build_histogram(values, bin_width);
}

Histogram make_histogram(std::span<const double> values, double bin_width) {
    return build_histogram(values, bin_width);
}

double bootstrap_mean_sigma(std::span<const double> values, int resamples, Rng& rng) {
    if (values.empty()) throw std::invalid_argument("bootstrap: empty input");
    if (resamples < 2) throw std::invalid_argument("bootstrap: need at least 2 resamples");
    const std::size_t n = values.size();
    std::vector<double> means;
    means.reserve(static_cast<std::size_t>(resamples));
    for (int b = 0; b < resamples; ++b) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) sum += values[rng.bounded(n)];
        means.push_back(sum / static_cast<double>(n));
    }
    return mean_sd(means).sd;
}

}  // namespace feedersim
