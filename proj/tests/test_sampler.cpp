#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "feedersim/calendar.hpp"
#include "feedersim/csvio.hpp"
#include "feedersim/profile.hpp"
#include "feedersim/rng.hpp"
#include "feedersim/sampler.hpp"

using namespace feedersim;

namespace {

// Year-long profile whose first `pattern.size()` quarters carry the pattern;
// the rest is zero, which leaves peaks and sums where the pattern puts them.
Profile patterned(std::string id, std::vector<float> pattern) {
    Profile p;
    p.id = std::move(id);
    p.power.assign(quarters_in_year(2022), 0.0f);
    std::copy(pattern.begin(), pattern.end(), p.power.begin());
    return p;
}

ProfileSet tiny_set(const std::vector<std::vector<float>>& patterns) {
    std::vector<Profile> v;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        v.push_back(patterned("t" + std::to_string(i), patterns[i]));
    }
    return ProfileSet(std::move(v), 2022, "Europe/Brussels");
}

}  // namespace

TEST_CASE("hand-computed kernel, offtake") {
    Profile a = patterned("a", {1.0f, 2.0f});
    Profile b = patterned("b", {2.0f, 1.0f});
    const std::array<const Profile*, 2> pair{&a, &b};
    const FeederMetrics m = feeder_metrics(std::span<const Profile* const>(pair), Direction::offtake);
    CHECK(m.peak_kw == 3.0);
    CHECK(m.peak_quarter == 0);  // first of the tied quarters
    REQUIRE(m.simultaneity.has_value());
    CHECK(*m.simultaneity == 0.75);
    CHECK(m.peak_per_connection_kw == 1.5);
}

TEST_CASE("hand-computed kernel, injection") {
    Profile a = patterned("a", {-2.0f, 0.0f});
    Profile b = patterned("b", {0.0f, -2.0f});
    const std::array<const Profile*, 2> pair{&a, &b};
    const FeederMetrics m = feeder_metrics(std::span<const Profile* const>(pair), Direction::injection);
    CHECK(m.peak_kw == -2.0);
    REQUIRE(m.simultaneity.has_value());
    CHECK(*m.simultaneity == 0.5);
}

TEST_CASE("single profile has simultaneity one") {
    Profile a = patterned("a", {0.3f, 1.7f, 0.4f});
    const std::array<const Profile*, 1> one{&a};
    const FeederMetrics m = feeder_metrics(std::span<const Profile* const>(one), Direction::offtake);
    REQUIRE(m.simultaneity.has_value());
    CHECK(*m.simultaneity == 1.0);
    CHECK(m.peak_kw == doctest::Approx(1.7));
}

TEST_CASE("all-zero profiles leave simultaneity undefined") {
    Profile a = patterned("a", {0.0f});
    Profile b = patterned("b", {0.0f});
    const std::array<const Profile*, 2> pair{&a, &b};
    const FeederMetrics m = feeder_metrics(std::span<const Profile* const>(pair), Direction::offtake);
    CHECK(!m.simultaneity.has_value());
}

TEST_CASE("injection denominator counts only injecting profiles") {
    // One pure-offtake profile contributes nothing to the injection denominator.
    Profile a = patterned("a", {-4.0f, 0.0f});
    Profile b = patterned("b", {1.0f, 1.0f});  // never injects
    const std::array<const Profile*, 2> pair{&a, &b};
    const FeederMetrics m = feeder_metrics(std::span<const Profile* const>(pair), Direction::injection);
    CHECK(m.peak_kw == -3.0);
    REQUIRE(m.simultaneity.has_value());
    CHECK(*m.simultaneity == doctest::Approx(3.0 / 4.0));
}

TEST_CASE("set-and-indices overload matches pointer overload") {
    const ProfileSet set = tiny_set({{1.0f, 0.5f}, {0.25f, 2.0f}, {3.0f, 0.0f}});
    const std::vector<std::uint32_t> idx{0, 2};
    const FeederMetrics via_set = feeder_metrics(set, idx, Direction::offtake);
    const std::array<const Profile*, 2> ptrs{&set.at(0), &set.at(2)};
    const FeederMetrics via_ptr = feeder_metrics(std::span<const Profile* const>(ptrs), Direction::offtake);
    CHECK(via_set.peak_kw == via_ptr.peak_kw);
    CHECK(via_set.peak_quarter == via_ptr.peak_quarter);
    CHECK(via_set.simultaneity == via_ptr.simultaneity);
}

TEST_CASE("feeder draw covers the whole set when n equals its size") {
    Rng rng(1);
    const std::vector<std::uint32_t> drawn = sample_feeder(5, 5, rng);
    std::set<std::uint32_t> unique(drawn.begin(), drawn.end());
    CHECK(unique.size() == 5);
    CHECK(*unique.begin() == 0);
    CHECK(*unique.rbegin() == 4);
}

TEST_CASE("feeder draw rejects oversized requests") {
    Rng rng(1);
    CHECK_THROWS(sample_feeder(3, 4, rng));
}

TEST_CASE("feeder draws are deterministic and distinct") {
    Rng a(99), b(99);
    for (int i = 0; i < 50; ++i) {
        const auto da = sample_feeder(100, 10, a);
        const auto db = sample_feeder(100, 10, b);
        CHECK(da == db);
        std::set<std::uint32_t> unique(da.begin(), da.end());
        CHECK(unique.size() == 10);
        for (std::uint32_t v : da) CHECK(v < 100);
    }
}

TEST_CASE("draws of one are uniform over the set") {
    // 10,000 draws of 1 from 4: each index expected 2,500 times,
    // sigma = sqrt(n p (1-p)) = 43.3; require within 3 sigma.
    Rng rng(2);
    std::array<int, 4> counts{};
    for (int i = 0; i < 10000; ++i) ++counts[sample_feeder(4, 1, rng)[0]];
    for (int c : counts) CHECK(std::abs(c - 2500) <= 3.0 * 43.3013);
}

TEST_CASE("degenerate monte carlo equals whole-set metrics") {
    const ProfileSet set = tiny_set({{1.0f, 0.0f, 2.0f}, {0.5f, 1.5f, 0.0f}, {0.0f, 0.25f, 1.0f}});
    SamplingConfig config;
    config.n_connections = {3};
    config.n_samples = 1;
    config.seed = 9;
    config.direction = DirectionMode::offtake;
    const SamplingReport report = run_sampling(set, config);
    REQUIRE(report.sizes.size() == 1);
    const DirectionResult& r = direction_result(report.sizes[0], Direction::offtake);
    REQUIRE(r.samples.size() == 1);

    std::vector<std::uint32_t> all{0, 1, 2};
    const FeederMetrics whole = feeder_metrics(set, all, Direction::offtake);
    CHECK(r.samples[0].peak_kw == whole.peak_kw);
    CHECK(r.samples[0].peak_quarter == whole.peak_quarter);
    CHECK(r.samples[0].simultaneity == *whole.simultaneity);
    CHECK(r.peak_per_connection.mean == whole.peak_per_connection_kw);
    CHECK(r.peak_per_connection.min == r.peak_per_connection.max);
}

TEST_CASE("monte carlo mean matches exhaustive enumeration") {
    // 4 profiles, feeders of 2: the exact mean over all C(4,2)=6 feeders is
    // the oracle; the Monte Carlo mean must land within 3 sigma of it.
    const ProfileSet set = tiny_set({
        {1.0f, 0.2f, 0.1f},
        {0.3f, 1.4f, 0.6f},
        {2.2f, 0.0f, 0.5f},
        {0.9f, 0.8f, 0.7f},
    });

    std::vector<double> exact_ppc;
    std::vector<double> exact_sim;
    for (std::uint32_t i = 0; i < 4; ++i) {
        for (std::uint32_t j = i + 1; j < 4; ++j) {
            const std::vector<std::uint32_t> idx{i, j};
            const FeederMetrics m = feeder_metrics(set, idx, Direction::offtake);
            exact_ppc.push_back(m.peak_per_connection_kw);
            exact_sim.push_back(*m.simultaneity);
        }
    }
    const double exact_mean =
        std::accumulate(exact_ppc.begin(), exact_ppc.end(), 0.0) / exact_ppc.size();
    double exact_var = 0.0;
    for (double v : exact_ppc) exact_var += (v - exact_mean) * (v - exact_mean);
    exact_var /= exact_ppc.size();

    SamplingConfig config;
    config.n_connections = {2};
    config.n_samples = 20000;
    config.seed = 4;
    config.direction = DirectionMode::offtake;
    const SamplingReport report = run_sampling(set, config);
    const DirectionResult& r = direction_result(report.sizes[0], Direction::offtake);

    const double sigma = std::sqrt(exact_var / static_cast<double>(config.n_samples));
    CHECK(std::abs(r.peak_per_connection.mean - exact_mean) <= 3.0 * sigma);

    const double exact_sim_mean =
        std::accumulate(exact_sim.begin(), exact_sim.end(), 0.0) / exact_sim.size();
    double sim_var = 0.0;
    for (double v : exact_sim) sim_var += (v - exact_sim_mean) * (v - exact_sim_mean);
    sim_var /= exact_sim.size();
    CHECK(std::abs(r.simultaneity.mean - exact_sim_mean) <=
          3.0 * std::sqrt(sim_var / static_cast<double>(config.n_samples)));
}

TEST_CASE("every feeder combination appears at its enumeration frequency") {
    // 6 profiles, feeders of 3: all C(6,3)=20 subsets equally likely. Count
    // each over 20,000 samples and apply a two-sided binomial test at
    // alpha=0.001 (z = 3.2905): expected 1000, sigma = sqrt(N p (1-p)).
    std::vector<std::vector<float>> patterns;
    for (int i = 0; i < 6; ++i) {
        patterns.push_back({static_cast<float>(0.1 * (i + 1)), static_cast<float>(0.05 * (6 - i))});
    }
    const ProfileSet set = tiny_set(patterns);

    const std::uint64_t n_samples = 20000;
    std::map<std::vector<std::uint32_t>, int> counts;
    for (std::uint64_t i = 0; i < n_samples; ++i) {
        Rng rng = Rng::stream(77, 3, i);
        std::vector<std::uint32_t> drawn = sample_feeder(set, 3, rng);
        std::sort(drawn.begin(), drawn.end());
        ++counts[drawn];
    }
    CHECK(counts.size() == 20);
    const double p = 1.0 / 20.0;
    const double expected = n_samples * p;
    const double sigma = std::sqrt(n_samples * p * (1.0 - p));
    for (const auto& [combo, count] : counts) {
        CHECK(std::abs(count - expected) <= 3.2905 * sigma);
    }
}

TEST_CASE("simultaneity stays in its unit interval across a sweep") {
    const ProfileSet set = tiny_set({
        {0.5f, 1.0f, 0.2f}, {1.5f, 0.1f, 0.3f}, {0.7f, 0.7f, 0.7f},
        {0.0f, 2.0f, 0.4f}, {1.1f, 0.6f, 0.9f},
    });
    SamplingConfig config;
    config.n_connections = {1, 2, 4};
    config.n_samples = 400;
    config.seed = 21;
    config.direction = DirectionMode::offtake;
    const SamplingReport report = run_sampling(set, config);
    for (const SizeResult& size : report.sizes) {
        const DirectionResult& r = direction_result(size, Direction::offtake);
        CHECK(r.sim_defined_count == config.n_samples);
        for (const SampleRow& row : r.samples) {
            CHECK(row.simultaneity > 0.0);
            CHECK(row.simultaneity <= 1.0);
            if (size.n_connections == 1) CHECK(row.simultaneity == 1.0);
        }
        CHECK(dist_stats_ordered(r.peak_per_connection));
        CHECK(dist_stats_ordered(r.simultaneity));
    }
}

TEST_CASE("reports are identical for any worker count") {
    std::vector<std::vector<float>> patterns;
    for (int i = 0; i < 12; ++i) {
        std::vector<float> p;
        for (int q = 0; q < 8; ++q) p.push_back(static_cast<float>((i * 31 + q * 7) % 13) * 0.25f);
        patterns.push_back(p);
    }
    const ProfileSet set = tiny_set(patterns);

    SamplingConfig config;
    config.n_connections = {2, 5};
    config.n_samples = 600;
    config.seed = 31;
    config.direction = DirectionMode::both;

    config.threads = 1;
    const SamplingReport serial = run_sampling(set, config);
    config.threads = 3;
    const SamplingReport three = run_sampling(set, config);
    config.threads = 8;
    const SamplingReport eight = run_sampling(set, config);

    for (Direction d : {Direction::offtake, Direction::injection}) {
        CHECK(report_csv(serial, d) == report_csv(three, d));
        CHECK(report_csv(serial, d) == report_csv(eight, d));
        CHECK(samples_csv(serial, 5, d) == samples_csv(three, 5, d));
        CHECK(samples_csv(serial, 5, d) == samples_csv(eight, 5, d));
    }
}

TEST_CASE("direction both shares draws with single-direction runs") {
    const ProfileSet set = tiny_set({
        {1.0f, -1.0f}, {0.5f, -2.0f}, {2.0f, 0.0f}, {-0.5f, 0.75f},
    });
    SamplingConfig config;
    config.n_connections = {2};
    config.n_samples = 300;
    config.seed = 5;

    config.direction = DirectionMode::both;
    const SamplingReport both = run_sampling(set, config);
    config.direction = DirectionMode::offtake;
    const SamplingReport off = run_sampling(set, config);
    config.direction = DirectionMode::injection;
    const SamplingReport inj = run_sampling(set, config);

    CHECK(report_csv(both, Direction::offtake) == report_csv(off, Direction::offtake));
    CHECK(report_csv(both, Direction::injection) == report_csv(inj, Direction::injection));
}

TEST_CASE("sum visitor replays the exact sampling draws") {
    const ProfileSet set = tiny_set({
        {1.0f, 0.0f, 3.0f}, {0.0f, 2.0f, 1.0f}, {0.5f, 0.5f, 0.5f}, {2.0f, 1.0f, 0.0f},
    });
    SamplingConfig config;
    config.n_connections = {2};
    config.n_samples = 50;
    config.seed = 13;
    config.direction = DirectionMode::offtake;
    const SamplingReport report = run_sampling(set, config);
    const DirectionResult& r = direction_result(report.sizes[0], Direction::offtake);

    std::vector<double> peaks(50, -1.0);
    for_each_sample_sum(set, 2, 50, 13, 2,
                        [&](std::uint64_t i, std::span<const double> sum,
                            std::span<const std::uint32_t> drawn) {
                            CHECK(drawn.size() == 2);
                            peaks[i] = *std::max_element(sum.begin(), sum.end());
                        });
    for (std::size_t i = 0; i < 50; ++i) {
        CHECK(peaks[i] == doctest::Approx(r.samples[i].peak_kw).epsilon(1e-12));
    }
}

TEST_CASE("per-sample table round trips through its file form") {
    const ProfileSet set = tiny_set({{1.0f, 2.0f}, {0.5f, 0.1f}, {0.0f, 0.9f}});
    SamplingConfig config;
    config.n_connections = {2};
    config.n_samples = 25;
    config.seed = 3;
    config.direction = DirectionMode::offtake;
    const SamplingReport report = run_sampling(set, config);

    const std::string path =
        (std::filesystem::temp_directory_path() / "fs_samples_rt.csv").string();
    write_text_file(path, samples_csv(report, 2, Direction::offtake));
    const std::vector<SampleRow> back = read_samples_csv(path);
    const DirectionResult& r = direction_result(report.sizes[0], Direction::offtake);
    REQUIRE(back.size() == r.samples.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(back[i].peak_quarter == r.samples[i].peak_quarter);
        CHECK(back[i].sim_defined == r.samples[i].sim_defined);
        CHECK(back[i].peak_kw == doctest::Approx(r.samples[i].peak_kw).epsilon(1e-8));
        if (back[i].sim_defined)
            CHECK(back[i].simultaneity == doctest::Approx(r.samples[i].simultaneity).epsilon(1e-8));
    }
    std::filesystem::remove(path);
}

TEST_CASE("identical populations cancel in the contribution report") {
    const ProfileSet set = tiny_set({{1.0f, 0.3f}, {0.2f, 1.1f}, {0.8f, 0.8f}});
    SamplingConfig config;
    config.n_connections = {2, 3};
    config.n_samples = 200;
    config.seed = 6;
    config.direction = DirectionMode::offtake;
    const SamplingReport a = run_sampling(set, config);
    const SamplingReport b = run_sampling(set, config);
    const ContributionReport delta = lct_contribution(a, b, Direction::offtake);
    REQUIRE(delta.rows.size() == 2);
    for (const ContributionRow& row : delta.rows) {
        CHECK(row.peak_per_connection.mean == 0.0);
        CHECK(row.peak_per_connection.min == 0.0);
        CHECK(row.peak_per_connection.max == 0.0);
        CHECK(row.peak_per_connection.p5 == 0.0);
        CHECK(row.simultaneity.mean == 0.0);
    }
}

TEST_CASE("a one kilowatt shift surfaces as a one kilowatt contribution") {
    std::vector<std::vector<float>> base_patterns = {
        {0.4f, 1.2f, 0.6f}, {1.0f, 0.1f, 0.3f}, {0.2f, 0.9f, 1.4f},
        {0.7f, 0.7f, 0.2f}, {1.3f, 0.5f, 0.8f},
    };
    std::vector<Profile> without_v, with_v;
    for (std::size_t i = 0; i < base_patterns.size(); ++i) {
        Profile p = patterned("p" + std::to_string(i), base_patterns[i]);
        without_v.push_back(p);
        for (float& f : p.power) f += 1.0f;  // constant shift, all year
        p.id = "q" + std::to_string(i);
        with_v.push_back(p);
    }
    const ProfileSet without_set(without_v, 2022, "Europe/Brussels");
    const ProfileSet with_set(with_v, 2022, "Europe/Brussels");

    SamplingConfig config;
    config.n_connections = {1, 2, 4};
    config.n_samples = 500;
    config.seed = 11;
    config.direction = DirectionMode::offtake;
    const SamplingReport with_report = run_sampling(with_set, config);
    const SamplingReport without_report = run_sampling(without_set, config);
    const ContributionReport delta =
        lct_contribution(with_report, without_report, Direction::offtake);
    for (const ContributionRow& row : delta.rows) {
        CHECK(row.peak_per_connection.mean == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(row.peak_per_connection.p25 == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(row.peak_per_connection.p95 == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("mismatched grids are rejected") {
    const ProfileSet set = tiny_set({{1.0f}, {2.0f}, {0.5f}});
    SamplingConfig a;
    a.n_connections = {2};
    a.n_samples = 10;
    a.direction = DirectionMode::offtake;
    SamplingConfig b = a;
    b.n_connections = {3};
    const SamplingReport ra = run_sampling(set, a);
    const SamplingReport rb = run_sampling(set, b);
    CHECK_THROWS(lct_contribution(ra, rb, Direction::offtake));
}

TEST_CASE("mean per-connection peak does not grow with feeder size") {
    std::vector<std::vector<float>> patterns;
    Rng shape(2);
    for (int i = 0; i < 30; ++i) {
        std::vector<float> p;
        for (int q = 0; q < 96; ++q) p.push_back(static_cast<float>(shape.unit() * 2.0));
        patterns.push_back(p);
    }
    const ProfileSet set = tiny_set(patterns);
    SamplingConfig config;
    config.n_connections = {2, 8, 25};
    config.n_samples = 800;
    config.seed = 17;
    config.direction = DirectionMode::offtake;
    const SamplingReport report = run_sampling(set, config);
    double prev = 1e18;
    for (const SizeResult& size : report.sizes) {
        const double mean = direction_result(size, Direction::offtake).peak_per_connection.mean;
        CHECK(mean <= prev + 1e-12);
        prev = mean;
    }
}

TEST_CASE("report csv carries config echo and ordered statistics") {
    const ProfileSet set = tiny_set({{1.0f, 0.2f}, {0.1f, 1.5f}, {0.6f, 0.6f}});
    SamplingConfig config;
    config.n_connections = {2};
    config.n_samples = 64;
    config.seed = 23;
    config.subset_name = "all";
    config.direction = DirectionMode::offtake;
    const SamplingReport report = run_sampling(set, config);
    const std::string csv = report_csv(report, Direction::offtake);
    CHECK(csv.rfind("n_connections,n_samples,seed,subset,direction,", 0) == 0);
    CHECK(csv.find("\n2,64,23,all,offtake,") != std::string::npos);
}
