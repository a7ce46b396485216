#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "feedersim/profile.hpp"
#include "feedersim/rng.hpp"
#include "feedersim/stats.hpp"

namespace feedersim {

enum class DirectionMode { offtake, injection, both };

DirectionMode direction_mode_from_name(std::string_view name);
const char* direction_mode_name(DirectionMode m);

struct SamplingConfig {
    std::vector<std::uint32_t> n_connections;  // feeder sizes to sweep
    std::uint64_t n_samples = 10000;
    std::uint64_t seed = 0;
    DirectionMode direction = DirectionMode::both;
    std::string subset_name = "all";  // echoed into the report
    int threads = 0;                  // <=0: hardware concurrency
};

/// One sampled feeder. Offtake peak is the max of the summed series,
/// injection peak the min (signed kW). The simultaneity denominator counts
/// only profiles with an extreme in the same direction.
struct FeederMetrics {
    double peak_kw = 0.0;
    std::uint32_t peak_quarter = 0;
    std::optional<double> simultaneity;
    double peak_per_connection_kw = 0.0;
    std::vector<std::uint32_t> drawn_indices;
};

/// Uniform draw of n distinct indices in [0, set_size); order is draw order.
std::vector<std::uint32_t> sample_feeder(std::size_t set_size, std::uint32_t n_connections,
                                         Rng& rng);
std::vector<std::uint32_t> sample_feeder(const ProfileSet& set, std::uint32_t n_connections,
                                         Rng& rng);

FeederMetrics feeder_metrics(std::span<const Profile* const> profiles, Direction direction);
FeederMetrics feeder_metrics(const ProfileSet& set, std::span<const std::uint32_t> indices,
                             Direction direction);

struct SampleRow {
    double peak_kw = 0.0;
    std::uint32_t peak_quarter = 0;
    double simultaneity = 0.0;
    bool sim_defined = false;
};

struct DistStats {
    double mean = 0.0;
    double min = 0.0;
    double p5 = 0.0;
    double p25 = 0.0;
    double p75 = 0.0;
    double p95 = 0.0;
    double max = 0.0;
};

DistStats make_dist_stats(std::span<const double> values);
bool dist_stats_ordered(const DistStats& s);

struct DirectionResult {
    Direction direction = Direction::offtake;
    std::vector<SampleRow> samples;  // indexed by sample id
    DistStats peak_per_connection;
    DistStats simultaneity;  // over samples where it is defined
    std::uint64_t sim_defined_count = 0;
};

struct SizeResult {
    std::uint32_t n_connections = 0;
    std::optional<DirectionResult> offtake;
    std::optional<DirectionResult> injection;
};

struct SamplingReport {
    std::string subset_name;
    DirectionMode direction = DirectionMode::both;
    std::uint64_t n_samples = 0;
    std::uint64_t seed = 0;
    int year = 0;
    std::vector<SizeResult> sizes;
};

/// Algorithm: for each feeder size, draw n_samples feeders (without
/// replacement within a draw, independently across draws), sum the member
/// profiles per quarter hour, and record peak, peak time, and simultaneity.
/// Sample i uses RNG stream (seed, n_connections, i), so the result is
/// bit-identical for any thread count.
SamplingReport run_sampling(const ProfileSet& set, const SamplingConfig& config);

/// Deterministic pass over the same draws run_sampling would make for one
/// feeder size, handing each sample's summed series to `visit`. Concurrent
/// calls receive distinct sample indices.
using SampleSumVisitor = std::function<void(std::uint64_t sample_index, std::span<const double> sum,
                                            std::span<const std::uint32_t> drawn)>;
void for_each_sample_sum(const ProfileSet& set, std::uint32_t n_connections,
                         std::uint64_t n_samples, std::uint64_t seed, int threads,
                         const SampleSumVisitor& visit);

struct ContributionStats {
    double mean = 0.0;
    double min = 0.0;
    double p5 = 0.0;
    double p25 = 0.0;
    double p75 = 0.0;
    double p95 = 0.0;
    double max = 0.0;
};

struct ContributionRow {
    std::uint32_t n_connections = 0;
    ContributionStats peak_per_connection;  // with minus without, kW
    ContributionStats simultaneity;
};

struct ContributionReport {
    std::string with_name;
    std::string without_name;
    Direction direction = Direction::offtake;
    std::vector<ContributionRow> rows;
};

/// Population differencing: per-connection peak (and simultaneity) statistics
/// of `with` minus `without` on a shared n_connections grid.
ContributionReport lct_contribution(const SamplingReport& with, const SamplingReport& without,
                                    Direction direction);

/// Delimited serializations. report_csv emits one record per feeder size;
/// samples_csv is the raw per-sample table consumed by the timing module.
std::string report_csv(const SamplingReport& report, Direction direction);
std::string samples_csv(const SamplingReport& report, std::uint32_t n_connections,
                        Direction direction);
std::vector<SampleRow> read_samples_csv(const std::string& path);
std::string contribution_csv(const ContributionReport& report);

const DirectionResult& direction_result(const SizeResult& size, Direction direction);

}  // namespace feedersim
