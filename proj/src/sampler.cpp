#include "feedersim/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "feedersim/csvio.hpp"

namespace feedersim {

namespace {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Partial Fisher-Yates on a caller-owned identity pool. The swaps are undone
// afterwards so the pool can be reused without a re-fill; the undo keeps the
// draw sequence a pure function of the RNG state.
void draw_into(std::vector<std::uint32_t>& pool, std::uint32_t n, Rng& rng,
               std::vector<std::uint32_t>& out, std::vector<std::uint32_t>& swaps) {
    const std::size_t size = pool.size();
    out.clear();
    swaps.clear();
    for (std::uint32_t k = 0; k < n; ++k) {
        const std::size_t j = k + static_cast<std::size_t>(rng.bounded(static_cast<std::uint64_t>(size - k)));
        swaps.push_back(static_cast<std::uint32_t>(j));
        std::swap(pool[k], pool[j]);
        out.push_back(pool[k]);
    }
    for (std::uint32_t k = n; k-- > 0;) {
        std::swap(pool[k], pool[swaps[k]]);
    }
}

struct ScanResult {
    double max_kw;
    double min_kw;
    std::uint32_t max_quarter;
    std::uint32_t min_quarter;
};

ScanResult scan_extremes(std::span<const double> sum) {
    ScanResult r{sum[0], sum[0], 0, 0};
    for (std::size_t q = 1; q < sum.size(); ++q) {
        if (sum[q] > r.max_kw) {
            r.max_kw = sum[q];
            r.max_quarter = static_cast<std::uint32_t>(q);
        }
        if (sum[q] < r.min_kw) {
            r.min_kw = sum[q];
            r.min_quarter = static_cast<std::uint32_t>(q);
        }
    }
    return r;
}

SampleRow offtake_row(const ScanResult& scan, double denom) {
    SampleRow row;
    row.peak_kw = scan.max_kw;
    row.peak_quarter = scan.max_quarter;
    if (denom > 0.0) {
        row.simultaneity = std::abs(scan.max_kw) / denom;
        row.sim_defined = true;
    }
    return row;
}

SampleRow injection_row(const ScanResult& scan, double denom) {
    SampleRow row;
    row.peak_kw = scan.min_kw;
    row.peak_quarter = scan.min_quarter;
    if (denom > 0.0) {
        row.simultaneity = std::abs(scan.min_kw) / denom;
        row.sim_defined = true;
    }
    return row;
}

struct RawSample {
    SampleRow offtake;
    SampleRow injection;
};

// Shared per-size sampling pass. Writes sample i into rows[i]; when `visit`
// is set it also receives each summed series. Static index striding keeps
// every thread's work a function of the sample index alone.
void sample_pass(const ProfileSet& set, std::uint32_t n_connections, std::uint64_t n_samples,
                 std::uint64_t seed, int threads, std::vector<RawSample>* rows,
                 const SampleSumVisitor* visit) {
    const std::size_t n_quarters = set.quarters();
    const std::size_t set_size = set.size();
    const int n_threads = std::max(1, std::min<int>(resolve_threads(threads),
                                                    static_cast<int>(n_samples)));

    auto worker = [&](std::uint64_t first, std::uint64_t stride) {
        std::vector<std::uint32_t> pool(set_size);
        std::iota(pool.begin(), pool.end(), 0u);
        std::vector<std::uint32_t> drawn;
        std::vector<std::uint32_t> swaps;
        drawn.reserve(n_connections);
        swaps.reserve(n_connections);
        std::vector<double> sum(n_quarters);

        for (std::uint64_t i = first; i < n_samples; i += stride) {
            Rng rng = Rng::stream(seed, n_connections, i);
            draw_into(pool, n_connections, rng, drawn, swaps);

            std::fill(sum.begin(), sum.end(), 0.0);
            double denom_off = 0.0;
            double denom_inj = 0.0;
            for (std::uint32_t view_idx : drawn) {
                const Profile& p = set.at(view_idx);
                const float* row = p.power.data();
                for (std::size_t q = 0; q < n_quarters; ++q) sum[q] += static_cast<double>(row[q]);
                denom_off += std::max(0.0, set.offtake_peak(view_idx).value_kw);
                denom_inj += std::max(0.0, -set.injection_peak(view_idx).value_kw);
            }

            if (rows != nullptr) {
                const ScanResult scan = scan_extremes(sum);
                (*rows)[i].offtake = offtake_row(scan, denom_off);
                (*rows)[i].injection = injection_row(scan, denom_inj);
            }
            if (visit != nullptr) (*visit)(i, sum, drawn);
        }
    };

    if (n_threads == 1) {
        worker(0, 1);
        return;
    }
    std::vector<std::thread> team;
    team.reserve(static_cast<std::size_t>(n_threads));
    for (int t = 0; t < n_threads; ++t) {
        team.emplace_back(worker, static_cast<std::uint64_t>(t),
                          static_cast<std::uint64_t>(n_threads));
    }
    for (std::thread& t : team) t.join();
}

DirectionResult build_direction_result(Direction direction, std::uint32_t n_connections,
                                       const std::vector<RawSample>& raw) {
    DirectionResult out;
    out.direction = direction;
    out.samples.reserve(raw.size());
    std::vector<double> ppc;
    std::vector<double> sims;
    ppc.reserve(raw.size());
    for (const RawSample& r : raw) {
        const SampleRow& row = direction == Direction::offtake ? r.offtake : r.injection;
        out.samples.push_back(row);
        ppc.push_back(row.peak_kw / static_cast<double>(n_connections));
        if (row.sim_defined) sims.push_back(row.simultaneity);
    }
    out.peak_per_connection = make_dist_stats(ppc);
    out.sim_defined_count = sims.size();
    if (!sims.empty()) out.simultaneity = make_dist_stats(sims);
    return out;
}

void append_dist_stats(std::string& out, const DistStats& s) {
    out += ',';
    out += format_double(s.mean);
    out += ',';
    out += format_double(s.min);
    out += ',';
    out += format_double(s.p5);
    out += ',';
    out += format_double(s.p25);
    out += ',';
    out += format_double(s.p75);
    out += ',';
    out += format_double(s.p95);
    out += ',';
    out += format_double(s.max);
}

void append_contribution_stats(std::string& out, const ContributionStats& s) {
    out += ',';
    out += format_double(s.mean);
    out += ',';
    out += format_double(s.min);
    out += ',';
    out += format_double(s.p5);
    out += ',';
    out += format_double(s.p25);
    out += ',';
    out += format_double(s.p75);
    out += ',';
    out += format_double(s.p95);
    out += ',';
    out += format_double(s.max);
}

double quantile_delta(const std::vector<double>& with, const std::vector<double>& without,
                      double p) {
    return quantile_sorted(with, p) - quantile_sorted(without, p);
}

ContributionStats diff_stats(std::vector<double> with, std::vector<double> without) {
    std::sort(with.begin(), with.end());
    std::sort(without.begin(), without.end());
    ContributionStats s;
    const double with_mean =
        std::accumulate(with.begin(), with.end(), 0.0) / static_cast<double>(with.size());
    const double without_mean =
        std::accumulate(without.begin(), without.end(), 0.0) / static_cast<double>(without.size());
    s.mean = with_mean - without_mean;
    s.min = with.front() - without.front();
    s.p5 = quantile_delta(with, without, 5.0);
    s.p25 = quantile_delta(with, without, 25.0);
    s.p75 = quantile_delta(with, without, 75.0);
    s.p95 = quantile_delta(with, without, 95.0);
    s.max = with.back() - without.back();
    return s;
}

}  // namespace

DirectionMode direction_mode_from_name(std::string_view name) {
    if (name == "offtake") return DirectionMode::offtake;
    if (name == "injection") return DirectionMode::injection;
    if (name == "both") return DirectionMode::both;
    throw std::invalid_argument("unknown direction: " + std::string(name));
}

const char* direction_mode_name(DirectionMode m) {
    switch (m) {
        case DirectionMode::offtake: return "offtake";
        case DirectionMode::injection: return "injection";
        case DirectionMode::both: return "both";
    }
    return "both";
}

std::vector<std::uint32_t> sample_feeder(std::size_t set_size, std::uint32_t n_connections,
                                         Rng& rng) {
    if (n_connections == 0) throw std::invalid_argument("feeder size must be positive");
    if (n_connections > set_size) {
        throw std::invalid_argument("feeder size exceeds profile set size");
    }
    std::vector<std::uint32_t> pool(set_size);
    std::iota(pool.begin(), pool.end(), 0u);
    std::vector<std::uint32_t> drawn;
    std::vector<std::uint32_t> swaps;
    draw_into(pool, n_connections, rng, drawn, swaps);
    return drawn;
}

std::vector<std::uint32_t> sample_feeder(const ProfileSet& set, std::uint32_t n_connections,
                                         Rng& rng) {
    return sample_feeder(set.size(), n_connections, rng);
}

FeederMetrics feeder_metrics(std::span<const Profile* const> profiles, Direction direction) {
    if (profiles.empty()) throw std::invalid_argument("feeder_metrics needs at least one profile");
    const std::size_t n_quarters = profiles.front()->power.size();
    std::vector<double> sum(n_quarters, 0.0);
    double denom = 0.0;
    for (const Profile* p : profiles) {
        if (p->power.size() != n_quarters) {
            throw std::invalid_argument("profiles differ in length");
        }
        for (std::size_t q = 0; q < n_quarters; ++q) sum[q] += static_cast<double>(p->power[q]);
        const Peak peak = profile_peak(*p, direction);
        denom += direction == Direction::offtake ? std::max(0.0, peak.value_kw)
                                                 : std::max(0.0, -peak.value_kw);
    }
    const ScanResult scan = scan_extremes(sum);
    const SampleRow row = direction == Direction::offtake ? offtake_row(scan, denom)
                                                          : injection_row(scan, denom);
    FeederMetrics m;
    m.peak_kw = row.peak_kw;
    m.peak_quarter = row.peak_quarter;
    if (row.sim_defined) m.simultaneity = row.simultaneity;
    m.peak_per_connection_kw = row.peak_kw / static_cast<double>(profiles.size());
    return m;
}

FeederMetrics feeder_metrics(const ProfileSet& set, std::span<const std::uint32_t> indices,
                             Direction direction) {
    if (indices.empty()) throw std::invalid_argument("feeder_metrics needs at least one profile");
    const std::size_t n_quarters = set.quarters();
    std::vector<double> sum(n_quarters, 0.0);
    double denom = 0.0;
    for (std::uint32_t idx : indices) {
        const Profile& p = set.at(idx);
        for (std::size_t q = 0; q < n_quarters; ++q) sum[q] += static_cast<double>(p.power[q]);
        denom += direction == Direction::offtake
                     ? std::max(0.0, set.offtake_peak(idx).value_kw)
                     : std::max(0.0, -set.injection_peak(idx).value_kw);
    }
    const ScanResult scan = scan_extremes(sum);
    const SampleRow row = direction == Direction::offtake ? offtake_row(scan, denom)
                                                          : injection_row(scan, denom);
    FeederMetrics m;
    m.peak_kw = row.peak_kw;
    m.peak_quarter = row.peak_quarter;
    if (row.sim_defined) m.simultaneity = row.simultaneity;
    m.peak_per_connection_kw = row.peak_kw / static_cast<double>(indices.size());
    m.drawn_indices.assign(indices.begin(), indices.end());
    return m;
}

DistStats make_dist_stats(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("make_dist_stats: empty input");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    DistStats s;
    s.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) /
             static_cast<double>(sorted.size());
    s.min = sorted.front();
    s.max = sorted.back();
    s.p5 = quantile_sorted(sorted, 5.0);
    s.p25 = quantile_sorted(sorted, 25.0);
    s.p75 = quantile_sorted(sorted, 75.0);
    s.p95 = quantile_sorted(sorted, 95.0);
    return s;
}

bool dist_stats_ordered(const DistStats& s) {
    return s.min <= s.p5 && s.p5 <= s.p25 && s.p25 <= s.p75 && s.p75 <= s.p95 && s.p95 <= s.max &&
           s.min <= s.mean && s.mean <= s.max;
}

SamplingReport run_sampling(const ProfileSet& set, const SamplingConfig& config) {
    if (set.size() == 0) throw std::invalid_argument("profile set is empty");
    if (config.n_samples == 0) throw std::invalid_argument("n_samples must be positive");
    if (config.n_connections.empty()) {
        throw std::invalid_argument("no feeder sizes requested");
    }
    for (std::uint32_t n : config.n_connections) {
        if (n == 0) throw std::invalid_argument("feeder size must be positive");
        if (n > set.size()) {
            throw std::invalid_argument("feeder size " + std::to_string(n) +
                                        " exceeds profile set size " + std::to_string(set.size()));
        }
    }

    SamplingReport report;
    report.subset_name = config.subset_name;
    report.direction = config.direction;
    report.n_samples = config.n_samples;
    report.seed = config.seed;
    report.year = set.year();
    report.sizes.reserve(config.n_connections.size());

    for (std::uint32_t n : config.n_connections) {
        std::vector<RawSample> raw(config.n_samples);
        sample_pass(set, n, config.n_samples, config.seed, config.threads, &raw, nullptr);

        SizeResult size;
        size.n_connections = n;
        if (config.direction != DirectionMode::injection) {
            size.offtake = build_direction_result(Direction::offtake, n, raw);
        }
        if (config.direction != DirectionMode::offtake) {
            size.injection = build_direction_result(Direction::injection, n, raw);
        }
        report.sizes.push_back(std::move(size));
    }
    return report;
}

void for_each_sample_sum(const ProfileSet& set, std::uint32_t n_connections,
                         std::uint64_t n_samples, std::uint64_t seed, int threads,
                         const SampleSumVisitor& visit) {
    if (set.size() == 0) throw std::invalid_argument("profile set is empty");
    if (n_connections == 0 || n_connections > set.size()) {
        throw std::invalid_argument("feeder size out of range");
    }
    sample_pass(set, n_connections, n_samples, seed, threads, nullptr, &visit);
}

const DirectionResult& direction_result(const SizeResult& size, Direction direction) {
    const std::optional<DirectionResult>& r =
        direction == Direction::offtake ? size.offtake : size.injection;
    if (!r.has_value()) {
        throw std::invalid_argument(std::string("report lacks direction ") +
                                    direction_name(direction));
    }
    return *r;
}

ContributionReport lct_contribution(const SamplingReport& with, const SamplingReport& without,
                                    Direction direction) {
    if (with.sizes.size() != without.sizes.size()) {
        throw std::invalid_argument("contribution reports use different feeder size grids");
    }
    ContributionReport out;
    out.with_name = with.subset_name;
    out.without_name = without.subset_name;
    out.direction = direction;
    for (std::size_t i = 0; i < with.sizes.size(); ++i) {
        const SizeResult& a = with.sizes[i];
        const SizeResult& b = without.sizes[i];
        if (a.n_connections != b.n_connections) {
            throw std::invalid_argument("contribution reports use different feeder size grids");
        }
        const DirectionResult& ra = direction_result(a, direction);
        const DirectionResult& rb = direction_result(b, direction);

        std::vector<double> ppc_with, ppc_without, sim_with, sim_without;
        ppc_with.reserve(ra.samples.size());
        ppc_without.reserve(rb.samples.size());
        for (const SampleRow& row : ra.samples) {
            ppc_with.push_back(row.peak_kw / static_cast<double>(a.n_connections));
            if (row.sim_defined) sim_with.push_back(row.simultaneity);
        }
        for (const SampleRow& row : rb.samples) {
            ppc_without.push_back(row.peak_kw / static_cast<double>(b.n_connections));
            if (row.sim_defined) sim_without.push_back(row.simultaneity);
        }

        ContributionRow crow;
        crow.n_connections = a.n_connections;
        crow.peak_per_connection = diff_stats(std::move(ppc_with), std::move(ppc_without));
        if (!sim_with.empty() && !sim_without.empty()) {
            crow.simultaneity = diff_stats(std::move(sim_with), std::move(sim_without));
        }
        out.rows.push_back(crow);
    }
    return out;
}

std::string report_csv(const SamplingReport& report, Direction direction) {
    std::string out =
        "n_connections,n_samples,seed,subset,direction,"
        "ppc_mean_kw,ppc_min_kw,ppc_p5_kw,ppc_p25_kw,ppc_p75_kw,ppc_p95_kw,ppc_max_kw,"
        "sim_mean,sim_min,sim_p5,sim_p25,sim_p75,sim_p95,sim_max,sim_defined_samples\n";
    for (const SizeResult& size : report.sizes) {
        const DirectionResult& r = direction_result(size, direction);
        out += std::to_string(size.n_connections);
        out += ',';
        out += std::to_string(report.n_samples);
        out += ',';
        out += std::to_string(report.seed);
        out += ',';
        out += report.subset_name;
        out += ',';
        out += direction_name(direction);
        append_dist_stats(out, r.peak_per_connection);
        if (r.sim_defined_count > 0) {
            append_dist_stats(out, r.simultaneity);
        } else {
            out += ",,,,,,,";
        }
        out += ',';
        out += std::to_string(r.sim_defined_count);
        out += '\n';
    }
    return out;
}

std::string samples_csv(const SamplingReport& report, std::uint32_t n_connections,
                        Direction direction) {
    const SizeResult* size = nullptr;
    for (const SizeResult& s : report.sizes) {
        if (s.n_connections == n_connections) {
            size = &s;
            break;
        }
    }
    if (size == nullptr) {
        throw std::invalid_argument("report has no feeder size " + std::to_string(n_connections));
    }
    const DirectionResult& r = direction_result(*size, direction);
    std::string out = "sample_id,peak_kw,peak_quarter_index,simultaneity\n";
    for (std::size_t i = 0; i < r.samples.size(); ++i) {
        const SampleRow& row = r.samples[i];
        out += std::to_string(i);
        out += ',';
        out += format_double(row.peak_kw);
        out += ',';
        out += std::to_string(row.peak_quarter);
        out += ',';
        if (row.sim_defined) out += format_double(row.simultaneity);
        out += '\n';
    }
    return out;
}

std::vector<SampleRow> read_samples_csv(const std::string& path) {
    const std::string text = read_text_file(path);
    const std::vector<std::string_view> lines = split_lines(text);
    if (lines.empty()) throw std::runtime_error(path + ": empty sample table");
    std::vector<SampleRow> rows;
    rows.reserve(lines.size() - 1);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::vector<std::string_view> fields = split_fields(lines[i], ',');
        const auto bad = [&]() {
            return std::runtime_error(path + ": bad sample row: " + std::string(lines[i]));
        };
        if (fields.size() != 4) throw bad();
        const std::optional<double> peak = parse_double(fields[1]);
        const std::optional<std::int64_t> quarter = parse_int(fields[2]);
        if (!peak || !quarter || *quarter < 0) throw bad();
        SampleRow row;
        row.peak_kw = *peak;
        row.peak_quarter = static_cast<std::uint32_t>(*quarter);
        if (!fields[3].empty()) {
            const std::optional<double> sim = parse_double(fields[3]);
            if (!sim) throw bad();
            row.simultaneity = *sim;
            row.sim_defined = true;
        }
        rows.push_back(row);
    }
    return rows;
}

std::string contribution_csv(const ContributionReport& report) {
    std::string out =
        "n_connections,with_subset,without_subset,direction,"
        "ppc_delta_mean_kw,ppc_delta_min_kw,ppc_delta_p5_kw,ppc_delta_p25_kw,"
        "ppc_delta_p75_kw,ppc_delta_p95_kw,ppc_delta_max_kw,"
        "sim_delta_mean,sim_delta_min,sim_delta_p5,sim_delta_p25,"
        "sim_delta_p75,sim_delta_p95,sim_delta_max\n";
    for (const ContributionRow& row : report.rows) {
        out += std::to_string(row.n_connections);
        out += ',';
        out += report.with_name;
        out += ',';
        out += report.without_name;
        out += ',';
        out += direction_name(report.direction);
        append_contribution_stats(out, row.peak_per_connection);
        append_contribution_stats(out, row.simultaneity);
        out += '\n';
    }
    return out;
}

}  // namespace feedersim
