// feedersim: Monte Carlo feeder-load statistics from quarter-hour smart-meter
// profiles. Subcommands cover the full pipeline: synth/ingest build a profile
// store, summarize/sample/contribution/timing/panels analyze it.
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "feedersim/csvio.hpp"
#include "feedersim/figures.hpp"
#include "feedersim/ingest.hpp"
#include "feedersim/sampler.hpp"
#include "feedersim/store.hpp"
#include "feedersim/subsets.hpp"
#include "feedersim/synth.hpp"
#include "feedersim/timing.hpp"

namespace fs = std::filesystem;
using namespace feedersim;

namespace {

struct OutputFormat {
    bool tables = true;
    bool figures = false;
};

OutputFormat parse_format(const std::string& format) {
    if (format == "table") return {true, false};
    if (format == "figures") return {false, true};
    return {true, true};
}

std::string join(const std::string& dir, const std::string& name) {
    return (fs::path(dir) / name).string();
}

// Writes one output file and records its digest in the manifest.
void emit(RunManifest& manifest, const std::string& dir, const std::string& name,
          const std::string& content) {
    const std::string path = join(dir, name);
    write_text_file(path, content);
    manifest.output_digests[name] = text_digest(content);
}

void note_store_inputs(RunManifest& manifest, const std::string& store_dir) {
    for (const char* name : {"meta.json", "power.f32", "labels.csv", "weather.csv"}) {
        manifest.input_digests[join(store_dir, name)] = file_digest(join(store_dir, name));
    }
}

RunManifest make_manifest(const std::string& command, std::uint64_t seed,
                          const std::string& config_text) {
    RunManifest manifest;
    manifest.command = command;
    manifest.seed = seed;
    manifest.config_digest = text_digest(config_text);
    manifest.created_utc = RunManifest::utc_timestamp();
    return manifest;
}

ProfileSet select_subset(const ProfileSet& all, const std::string& subset_name) {
    const ProfileSet subset = apply_subset(all, subset_by_name(subset_name));
    if (subset.empty()) {
        throw std::runtime_error("subset '" + subset_name + "' selects no profiles");
    }
    return subset;
}

std::string summary_csv_header() {
    return "subset,count,pct_pv,pv_kva_mean,pv_kva_sd,connection_power_kva_mean,"
           "connection_power_kva_sd,consumption_kwh_mean,consumption_kwh_sd\n";
}

void append_summary_row(std::string& out, const std::string& name, const SubsetSummary& s) {
    out += name;
    out += ',';
    out += std::to_string(s.count);
    out += ',';
    out += format_double(s.pct_pv);
    out += ',';
    if (s.pv_kva) {
        out += format_double(s.pv_kva->mean);
        out += ',';
        out += format_double(s.pv_kva->sd);
    } else {
        out += ',';
    }
    out += ',';
    if (s.connection_power_kva) {
        out += format_double(s.connection_power_kva->mean);
        out += ',';
        out += format_double(s.connection_power_kva->sd);
    } else {
        out += ',';
    }
    out += ',';
    out += format_double(s.consumption_kwh.mean);
    out += ',';
    out += format_double(s.consumption_kwh.sd);
    out += '\n';
}

std::string histogram_csv(const Histogram& h) {
    std::string out = "bin_left,bin_width,count\n";
    for (std::size_t i = 0; i < h.counts.size(); ++i) {
        out += format_double(h.bin_left(i));
        out += ',';
        out += format_double(h.bin_width);
        out += ',';
        out += std::to_string(h.counts[i]);
        out += '\n';
    }
    return out;
}

std::string seed_tag(std::uint64_t seed) { return "s" + std::to_string(seed); }

// ---------------------------------------------------------------- commands

struct SynthArgs {
    std::string config_path;
    std::string out_dir;
    int year = 2022;
    std::uint64_t seed = 0;
    bool seed_set = false;
};

int cmd_synth(const SynthArgs& args) {
    GeneratorConfig config;
    if (!args.config_path.empty()) config = GeneratorConfig::load(args.config_path);
    if (args.seed_set) config.seed = args.seed;
    config.validate();

    const WeatherSeries weather = synthetic_weather(args.year);
    const ProfileSet population = generate_population(config, weather);
    write_store(args.out_dir, population, weather);

    RunManifest manifest = make_manifest("synth", config.seed, config.to_json());
    if (!args.config_path.empty()) {
        manifest.input_digests[args.config_path] = file_digest(args.config_path);
    }
    emit(manifest, args.out_dir, "generator_config.json", config.to_json());
    for (const char* name : {"meta.json", "power.f32", "labels.csv", "weather.csv"}) {
        manifest.output_digests[name] = file_digest(join(args.out_dir, name));
    }
    manifest.save(join(args.out_dir, "run_manifest.json"));
    std::printf("store written: %s (%zu profiles, year %d)\n", args.out_dir.c_str(),
                population.size(), population.year());
    return 0;
}

struct IngestArgs {
    std::string profiles_path;
    std::string labels_path;
    std::string weather_path;
    std::string out_dir;
    int year = 2022;
    std::string timezone = "Europe/Brussels";
    int max_gap = 96;
};

int cmd_ingest(const IngestArgs& args) {
    IngestConfig config;
    config.year = args.year;
    config.timezone = args.timezone;
    config.max_gap_quarters = args.max_gap;

    IngestResult result = ingest_profiles(args.profiles_path, args.labels_path, config);
    const WeatherSeries weather = ingest_weather(args.weather_path, args.year);
    if (result.set.empty()) throw std::runtime_error("no profile survived ingestion");
    write_store(args.out_dir, result.set, weather);

    std::string diagnostics;
    for (const IngestDiagnostic& d : result.diagnostics) {
        diagnostics += "diagnostic," + d.profile_id + "," + d.message + "\n";
    }
    for (const IngestRejection& r : result.rejected) {
        diagnostics += "rejected," + r.profile_id + "," + r.reason + "\n";
    }

    RunManifest manifest = make_manifest("ingest", 0, args.profiles_path + "\n" + args.labels_path);
    for (const std::string& p : {args.profiles_path, args.labels_path, args.weather_path}) {
        manifest.input_digests[p] = file_digest(p);
    }
    emit(manifest, args.out_dir, "diagnostics.csv", diagnostics);
    for (const char* name : {"meta.json", "power.f32", "labels.csv", "weather.csv"}) {
        manifest.output_digests[name] = file_digest(join(args.out_dir, name));
    }
    manifest.save(join(args.out_dir, "run_manifest.json"));
    std::printf("store written: %s (%zu profiles, %zu rejected, %zu diagnostics)\n",
                args.out_dir.c_str(), result.set.size(), result.rejected.size(),
                result.diagnostics.size());
    return 0;
}

struct SummarizeArgs {
    std::string store_dir;
    std::string subset;
    std::string out_dir;
    std::string format = "table";
};

int cmd_summarize(const SummarizeArgs& args) {
    const Store store = read_store(args.store_dir);
    const OutputFormat format = parse_format(args.format);

    std::vector<std::string> names;
    if (args.subset.empty()) {
        names.push_back("all");
        for (const std::string& n : builtin_subset_names()) names.push_back(n);
    } else {
        names.push_back(args.subset);
    }

    std::string table = summary_csv_header();
    RunManifest manifest = make_manifest("summarize", 0, args.subset);
    note_store_inputs(manifest, args.store_dir);

    for (const std::string& name : names) {
        const ProfileSet subset = apply_subset(store.profiles, subset_by_name(name));
        if (subset.empty()) {
            std::fprintf(stderr, "note: subset '%s' is empty, skipped\n", name.c_str());
            continue;
        }
        append_summary_row(table, name, summarize(subset));
        if (!args.out_dir.empty() && format.figures) {
            for (Direction direction : {Direction::offtake, Direction::injection}) {
                const Histogram peaks = peak_histogram(subset, direction);
                emit(manifest, args.out_dir,
                     "peaks_" + name + "_" + direction_name(direction) + ".svg",
                     render_histogram_svg(peaks,
                                          "per-profile " + std::string(direction_name(direction)) +
                                              " peaks, subset " + name,
                                          "peak (kW)"));
            }
        }
    }
    std::fputs(table.c_str(), stdout);

    if (!args.out_dir.empty()) {
        fs::create_directories(args.out_dir);
        if (format.tables) emit(manifest, args.out_dir, "summary.csv", table);
        manifest.save(join(args.out_dir, "run_manifest.json"));
    }
    return 0;
}

struct SampleArgs {
    std::string store_dir;
    std::string subset = "all";
    std::vector<std::uint32_t> connections{10, 20, 40, 70, 100, 150, 250};
    std::uint64_t samples = 10000;
    std::uint64_t seed = 0;
    std::string direction = "both";
    std::string out_dir;
    std::string format = "table";
    int threads = 0;
    bool raw_samples = true;
};

// Serializes the flags that affect sampling, for the manifest's config digest.
std::string sample_config_echo(const SampleArgs& args) {
    std::string echo = args.subset + "|" + args.direction + "|" +
                       std::to_string(args.samples) + "|" + std::to_string(args.seed);
    for (std::uint32_t n : args.connections) echo += "|" + std::to_string(n);
    return echo;
}

SamplingReport run_sample_command(const Store& store, const SampleArgs& args) {
    const ProfileSet subset = select_subset(store.profiles, args.subset);
    SamplingConfig config;
    config.n_connections = args.connections;
    config.n_samples = args.samples;
    config.seed = args.seed;
    config.direction = direction_mode_from_name(args.direction);
    config.subset_name = args.subset;
    config.threads = args.threads;
    return run_sampling(subset, config);
}

int cmd_sample(const SampleArgs& args) {
    const Store store = read_store(args.store_dir);
    const OutputFormat format = parse_format(args.format);
    const SamplingReport report = run_sample_command(store, args);

    fs::create_directories(args.out_dir);
    RunManifest manifest = make_manifest("sample", args.seed, sample_config_echo(args));
    note_store_inputs(manifest, args.store_dir);

    std::vector<Direction> directions;
    if (report.direction != DirectionMode::injection) directions.push_back(Direction::offtake);
    if (report.direction != DirectionMode::offtake) directions.push_back(Direction::injection);

    for (Direction direction : directions) {
        const std::string tag =
            args.subset + "_" + direction_name(direction) + "_" + seed_tag(args.seed);
        if (format.tables) {
            emit(manifest, args.out_dir, "report_" + tag + ".csv", report_csv(report, direction));
            if (args.raw_samples) {
                for (const SizeResult& size : report.sizes) {
                    emit(manifest, args.out_dir,
                         "samples_" + args.subset + "_n" + std::to_string(size.n_connections) +
                             "_" + direction_name(direction) + "_" + seed_tag(args.seed) + ".csv",
                         samples_csv(report, size.n_connections, direction));
                }
            }
        }
        if (format.figures) {
            emit(manifest, args.out_dir, "trend_peak_" + tag + ".svg",
                 render_trend_svg(report, direction, TrendMetric::peak_per_connection,
                                  "peak per connection vs connections (" + args.subset + ", " +
                                      direction_name(direction) + ")"));
            emit(manifest, args.out_dir, "trend_simultaneity_" + tag + ".svg",
                 render_trend_svg(report, direction, TrendMetric::simultaneity,
                                  "simultaneity vs connections (" + args.subset + ", " +
                                      direction_name(direction) + ")"));
        }
    }
    manifest.save(join(args.out_dir, "run_manifest.json"));
    std::printf("sampling report written to %s\n", args.out_dir.c_str());
    return 0;
}

struct ContributionArgs {
    std::string store_dir;
    std::string subset_with;
    std::string subset_without;
    std::vector<std::uint32_t> connections{10, 20, 40, 70, 100, 150, 250};
    std::uint64_t samples = 10000;
    std::uint64_t seed = 0;
    std::string direction = "offtake";
    std::string out_dir;
    int threads = 0;
};

int cmd_contribution(const ContributionArgs& args) {
    const Store store = read_store(args.store_dir);
    const Direction direction = direction_from_name(args.direction);

    SampleArgs base;
    base.store_dir = args.store_dir;
    base.connections = args.connections;
    base.samples = args.samples;
    base.seed = args.seed;
    base.direction = args.direction;
    base.threads = args.threads;

    SampleArgs with = base;
    with.subset = args.subset_with;
    SampleArgs without = base;
    without.subset = args.subset_without;

    const SamplingReport report_with = run_sample_command(store, with);
    const SamplingReport report_without = run_sample_command(store, without);
    const ContributionReport contribution =
        lct_contribution(report_with, report_without, direction);

    fs::create_directories(args.out_dir);
    RunManifest manifest = make_manifest(
        "contribution", args.seed, args.subset_with + " minus " + args.subset_without);
    note_store_inputs(manifest, args.store_dir);
    emit(manifest, args.out_dir,
         "contribution_" + args.subset_with + "_minus_" + args.subset_without + "_" +
             args.direction + "_" + seed_tag(args.seed) + ".csv",
         contribution_csv(contribution));
    manifest.save(join(args.out_dir, "run_manifest.json"));
    std::printf("contribution report written to %s\n", args.out_dir.c_str());
    return 0;
}

struct TimingArgs {
    std::string store_dir;
    std::string subset = "all";
    std::uint32_t connections = 40;
    std::uint64_t samples = 10000;
    std::uint64_t seed = 0;
    std::string direction = "offtake";
    std::string samples_csv_path;  // optional reuse of a sample command output
    int day_first = 0;
    int day_last = -1;  // -1: through the last day of the year
    std::string out_dir;
    std::string format = "both";
    int threads = 0;
};

int cmd_timing(const TimingArgs& args) {
    const Store store = read_store(args.store_dir);
    const ProfileSet subset = select_subset(store.profiles, args.subset);
    const Direction direction = direction_from_name(args.direction);
    const OutputFormat format = parse_format(args.format);

    std::vector<SampleRow> rows;
    if (!args.samples_csv_path.empty()) {
        rows = read_samples_csv(args.samples_csv_path);
    } else {
        SamplingConfig config;
        config.n_connections = {args.connections};
        config.n_samples = args.samples;
        config.seed = args.seed;
        config.direction = direction == Direction::offtake ? DirectionMode::offtake
                                                           : DirectionMode::injection;
        config.subset_name = args.subset;
        config.threads = args.threads;
        const SamplingReport report = run_sampling(subset, config);
        rows = direction_result(report.sizes.front(), direction).samples;
    }

    const PeakTimeDistribution dist =
        peak_time_distribution(rows, store.profiles.year(), direction, args.connections);
    const std::vector<WeatherOverlayRow> overlay = weather_overlay(dist, store.weather);

    DayRange range{args.day_first,
                   args.day_last < 0 ? days_in_year(store.profiles.year()) - 1 : args.day_last};
    EnvelopeConfig envelope_config;
    envelope_config.n_connections = args.connections;
    envelope_config.n_samples = args.samples;
    envelope_config.seed = args.seed;
    envelope_config.direction = direction;
    envelope_config.threads = args.threads;
    const FeederEnvelope envelope = feeder_envelope(subset, envelope_config, range, store.weather);

    fs::create_directories(args.out_dir);
    RunManifest manifest = make_manifest("timing", args.seed, args.subset);
    note_store_inputs(manifest, args.store_dir);
    if (!args.samples_csv_path.empty()) {
        manifest.input_digests[args.samples_csv_path] = file_digest(args.samples_csv_path);
    }

    const std::string tag = args.subset + "_n" + std::to_string(args.connections) + "_" +
                            args.direction + "_" + seed_tag(args.seed);
    if (format.tables) {
        emit(manifest, args.out_dir, "day_histogram_" + tag + ".csv", day_histogram_csv(dist));
        emit(manifest, args.out_dir, "hour_day_" + tag + ".csv", hour_day_csv(dist));
        emit(manifest, args.out_dir, "overlay_" + tag + ".csv", overlay_csv(overlay));
        emit(manifest, args.out_dir, "envelope_" + tag + ".csv", envelope_csv(envelope));
        emit(manifest, args.out_dir, "envelope_days_" + tag + ".csv", envelope_days_csv(envelope));
    }
    if (format.figures) {
        emit(manifest, args.out_dir, "day_histogram_" + tag + ".svg",
             render_day_histogram_svg(dist, &store.weather,
                                      "feeder peak day of year (" + tag + ")"));
        emit(manifest, args.out_dir, "hour_day_" + tag + ".svg",
             render_hour_day_svg(dist, "feeder peak time (" + tag + ")"));
        emit(manifest, args.out_dir, "envelope_" + tag + ".svg",
             render_envelope_svg(envelope, "feeder load envelope (" + tag + ")"));
    }
    manifest.save(join(args.out_dir, "run_manifest.json"));
    std::printf("timing outputs written to %s\n", args.out_dir.c_str());
    return 0;
}

struct PanelsArgs {
    std::string store_dir;
    std::string profile_id;
    std::string out_dir;
    std::string format = "both";
    double bin_kw = 0.25;
};

int cmd_panels(const PanelsArgs& args) {
    const Store store = read_store(args.store_dir);
    const auto index = store.profiles.index_of(args.profile_id);
    if (!index) throw std::runtime_error("no profile with id '" + args.profile_id + "'");
    const Profile& profile = store.profiles.at(*index);
    const PanelData panels = profile_panels(profile, args.bin_kw);
    const OutputFormat format = parse_format(args.format);

    fs::create_directories(args.out_dir);
    RunManifest manifest = make_manifest("panels", 0, args.profile_id);
    note_store_inputs(manifest, args.store_dir);

    if (format.tables) {
        std::string envelope = "quarter_of_day,min_kw,mean_kw,max_kw\n";
        for (int q = 0; q < kQuartersPerDay; ++q) {
            envelope += std::to_string(q);
            envelope += ',';
            envelope += format_double(panels.env_min[q]);
            envelope += ',';
            envelope += format_double(panels.env_mean[q]);
            envelope += ',';
            envelope += format_double(panels.env_max[q]);
            envelope += '\n';
        }
        emit(manifest, args.out_dir, "panel_envelope_" + args.profile_id + ".csv", envelope);

        std::string heatmap = "day_of_year";
        for (int q = 0; q < kQuartersPerDay; ++q) heatmap += ",q" + std::to_string(q);
        heatmap += '\n';
        for (int d = 0; d < panels.days; ++d) {
            heatmap += std::to_string(d);
            for (int q = 0; q < kQuartersPerDay; ++q) {
                heatmap += ',';
                heatmap += format_float(
                    panels.heatmap[static_cast<std::size_t>(d) * kQuartersPerDay + q]);
            }
            heatmap += '\n';
        }
        emit(manifest, args.out_dir, "panel_heatmap_" + args.profile_id + ".csv", heatmap);
        emit(manifest, args.out_dir, "panel_histogram_" + args.profile_id + ".csv",
             histogram_csv(panels.histogram));
    }
    if (format.figures) {
        emit(manifest, args.out_dir, "panels_" + args.profile_id + ".svg",
             render_profile_panels_svg(profile, panels, "profile " + args.profile_id));
    }
    manifest.save(join(args.out_dir, "run_manifest.json"));
    std::printf("panel outputs written to %s\n", args.out_dir.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monte Carlo feeder-load statistics from smart-meter profiles"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
    app.require_subcommand(1);

    SynthArgs synth_args;
    CLI::App* synth = app.add_subcommand("synth", "generate a synthetic profile store");
    synth->add_option("--config", synth_args.config_path, "generator config JSON")
        ->check(CLI::ExistingFile);
    synth->add_option("--out", synth_args.out_dir, "store directory")->required();
    synth->add_option("--year", synth_args.year, "calendar year");
    synth->add_option("--seed", synth_args.seed, "override the config seed")
        ->each([&](const std::string&) { synth_args.seed_set = true; });

    IngestArgs ingest_args;
    CLI::App* ingest = app.add_subcommand("ingest", "build a store from delimited meter data");
    ingest->add_option("--profiles", ingest_args.profiles_path, "profile readings CSV")
        ->required()
        ->check(CLI::ExistingFile);
    ingest->add_option("--labels", ingest_args.labels_path, "labels CSV")
        ->required()
        ->check(CLI::ExistingFile);
    ingest->add_option("--weather", ingest_args.weather_path, "hourly weather CSV")
        ->required()
        ->check(CLI::ExistingFile);
    ingest->add_option("--out", ingest_args.out_dir, "store directory")->required();
    ingest->add_option("--year", ingest_args.year, "calendar year");
    ingest->add_option("--timezone", ingest_args.timezone, "IANA zone of the timestamps");
    ingest->add_option("--max-gap", ingest_args.max_gap,
                       "longest interpolatable gap in quarter-hours");

    SummarizeArgs summarize_args;
    CLI::App* summarize = app.add_subcommand("summarize", "population summary statistics");
    summarize->add_option("--store", summarize_args.store_dir, "store directory")->required();
    summarize->add_option("--subset", summarize_args.subset,
                          "subset name (default: all built-ins)");
    summarize->add_option("--out", summarize_args.out_dir, "output directory");
    summarize->add_option("--format", summarize_args.format, "table, figures, or both")
        ->check(CLI::IsMember({"table", "figures", "both"}));

    SampleArgs sample_args;
    CLI::App* sample = app.add_subcommand("sample", "Monte Carlo feeder sampling sweep");
    sample->add_option("--store", sample_args.store_dir, "store directory")->required();
    sample->add_option("--subset", sample_args.subset, "profile subset");
    sample->add_option("--connections", sample_args.connections, "feeder sizes to sweep")
        ->delimiter(',');
    sample->add_option("--samples", sample_args.samples, "Monte Carlo draws per size");
    sample->add_option("--seed", sample_args.seed, "RNG seed");
    sample->add_option("--direction", sample_args.direction, "offtake, injection, or both")
        ->check(CLI::IsMember({"offtake", "injection", "both"}));
    sample->add_option("--out", sample_args.out_dir, "output directory")->required();
    sample->add_option("--format", sample_args.format, "table, figures, or both")
        ->check(CLI::IsMember({"table", "figures", "both"}));
    sample->add_option("--threads", sample_args.threads, "worker threads (0: all cores)")
        ->envname("FEEDERSIM_THREADS");
    sample->add_flag("--raw-samples,!--no-raw-samples", sample_args.raw_samples,
                     "write per-sample tables");

    ContributionArgs contribution_args;
    CLI::App* contribution =
        app.add_subcommand("contribution", "population-differencing peak contribution");
    contribution->add_option("--store", contribution_args.store_dir, "store directory")
        ->required();
    contribution->add_option("--subset-with", contribution_args.subset_with, "population with the technology")
        ->required();
    contribution->add_option("--subset-without", contribution_args.subset_without, "reference population")
        ->required();
    contribution->add_option("--connections", contribution_args.connections, "feeder sizes")
        ->delimiter(',');
    contribution->add_option("--samples", contribution_args.samples, "Monte Carlo draws per size");
    contribution->add_option("--seed", contribution_args.seed, "RNG seed");
    contribution->add_option("--direction", contribution_args.direction, "offtake or injection")
        ->check(CLI::IsMember({"offtake", "injection"}));
    contribution->add_option("--out", contribution_args.out_dir, "output directory")->required();
    contribution->add_option("--threads", contribution_args.threads, "worker threads (0: all cores)")
        ->envname("FEEDERSIM_THREADS");

    TimingArgs timing_args;
    CLI::App* timing = app.add_subcommand("timing", "peak timing and feeder envelope");
    timing->add_option("--store", timing_args.store_dir, "store directory")->required();
    timing->add_option("--subset", timing_args.subset, "profile subset");
    timing->add_option("--connections", timing_args.connections, "feeder size");
    timing->add_option("--samples", timing_args.samples, "Monte Carlo draws");
    timing->add_option("--seed", timing_args.seed, "RNG seed");
    timing->add_option("--direction", timing_args.direction, "offtake or injection")
        ->check(CLI::IsMember({"offtake", "injection"}));
    timing->add_option("--samples-csv", timing_args.samples_csv_path,
                       "per-sample table from a previous sample run")
        ->check(CLI::ExistingFile);
    timing->add_option("--day-first", timing_args.day_first, "first day of the envelope range");
    timing->add_option("--day-last", timing_args.day_last,
                       "last day of the envelope range (default: end of year)");
    timing->add_option("--out", timing_args.out_dir, "output directory")->required();
    timing->add_option("--format", timing_args.format, "table, figures, or both")
        ->check(CLI::IsMember({"table", "figures", "both"}));
    timing->add_option("--threads", timing_args.threads, "worker threads (0: all cores)")
        ->envname("FEEDERSIM_THREADS");

    PanelsArgs panels_args;
    CLI::App* panels = app.add_subcommand("panels", "per-profile three-panel export");
    panels->add_option("--store", panels_args.store_dir, "store directory")->required();
    panels->add_option("--id", panels_args.profile_id, "profile id")->required();
    panels->add_option("--out", panels_args.out_dir, "output directory")->required();
    panels->add_option("--format", panels_args.format, "table, figures, or both")
        ->check(CLI::IsMember({"table", "figures", "both"}));
    panels->add_option("--bin", panels_args.bin_kw, "histogram bin width (kW)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (synth->parsed()) return cmd_synth(synth_args);
        if (ingest->parsed()) return cmd_ingest(ingest_args);
        if (summarize->parsed()) return cmd_summarize(summarize_args);
        if (sample->parsed()) return cmd_sample(sample_args);
        if (contribution->parsed()) return cmd_contribution(contribution_args);
        if (timing->parsed()) return cmd_timing(timing_args);
        if (panels->parsed()) return cmd_panels(panels_args);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
