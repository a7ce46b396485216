#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <stdexcept>
#include <vector>

#include "feedersim/calendar.hpp"
#include "feedersim/profile.hpp"
#include "feedersim/store.hpp"
#include "feedersim/weather.hpp"

using namespace feedersim;

namespace {

Profile year_profile(std::string id, float value, ProfileLabels labels = {}) {
    Profile p;
    p.id = std::move(id);
    p.power.assign(quarters_in_year(2022), value);
    p.labels = labels;
    return p;
}

WeatherSeries flat_weather(int year, double temp = 10.0, double ssrd = 0.2) {
    WeatherSeries w;
    w.year = year;
    w.temperature_c.assign(hours_in_year(year), temp);
    w.ssrd_kw_m2.assign(hours_in_year(year), ssrd);
    return w;
}

}  // namespace

TEST_CASE("profile peak picks the extreme and its first index") {
    Profile p;
    p.id = "a";
    p.power = {1.0f, 3.0f, 2.0f, 3.0f};
    const Peak off = profile_peak(p, Direction::offtake);
    CHECK(off.value_kw == 3.0);
    CHECK(off.quarter == 1);

    p.power = {-2.0f, 0.0f, -5.0f};
    const Peak inj = profile_peak(p, Direction::injection);
    CHECK(inj.value_kw == -5.0);
    CHECK(inj.quarter == 2);
}

TEST_CASE("peak bounds every element") {
    Profile p;
    p.id = "b";
    p.power = {0.5f, -1.5f, 2.25f, 2.25f, -1.5f};
    const Peak off = profile_peak(p, Direction::offtake);
    const Peak inj = profile_peak(p, Direction::injection);
    for (float v : p.power) {
        CHECK(off.value_kw >= v);
        CHECK(inj.value_kw <= v);
    }
    CHECK(off.quarter == 2);  // first of the tied maxima
    CHECK(inj.quarter == 1);
}

TEST_CASE("yearly consumption is quarter-hour energy") {
    const Profile one = year_profile("one", 1.0f);
    CHECK(yearly_consumption_kwh(one) == doctest::Approx(8760.0));
    const Profile neg = year_profile("neg", -1.0f);
    CHECK(yearly_consumption_kwh(neg) == doctest::Approx(-8760.0));

    Profile mixed = year_profile("mixed", 0.0f);
    mixed.power[0] = 4.0f;  // 1 kWh
    mixed.power[1] = -2.0f; // -0.5 kWh
    CHECK(yearly_consumption_kwh(mixed) == doctest::Approx(0.5));

    double manual = 0.0;
    for (float v : mixed.power) manual += v;
    CHECK(yearly_consumption_kwh(mixed) ==
          doctest::Approx(0.25 * manual).epsilon(1e-9));
}

TEST_CASE("profile set validation") {
    std::vector<Profile> good{year_profile("a", 1.0f), year_profile("b", 2.0f)};
    const ProfileSet set(good, 2022, "Europe/Brussels");
    CHECK(set.size() == 2);
    CHECK(set.year() == 2022);
    CHECK(set.quarters() == 35040);

    SUBCASE("wrong length rejected") {
        std::vector<Profile> bad{year_profile("a", 1.0f)};
        bad[0].power.resize(180 * kQuartersPerDay);
        CHECK_THROWS_AS(ProfileSet(bad, 2022, "Europe/Brussels"), std::invalid_argument);
    }
    SUBCASE("non-finite rejected") {
        std::vector<Profile> bad{year_profile("a", 1.0f)};
        bad[0].power[17] = std::nanf("");
        CHECK_THROWS_AS(ProfileSet(bad, 2022, "Europe/Brussels"), std::invalid_argument);
    }
    SUBCASE("duplicate id rejected") {
        std::vector<Profile> bad{year_profile("a", 1.0f), year_profile("a", 2.0f)};
        CHECK_THROWS_AS(ProfileSet(bad, 2022, "Europe/Brussels"), std::invalid_argument);
    }
}

TEST_CASE("set lookup and precomputed peaks") {
    std::vector<Profile> v{year_profile("a", 1.0f), year_profile("b", -2.0f)};
    v[0].power[100] = 7.0f;
    const ProfileSet set(v, 2022, "Europe/Brussels");
    REQUIRE(set.index_of("a").has_value());
    CHECK(*set.index_of("a") == 0);
    CHECK(!set.index_of("zzz").has_value());
    CHECK(set.offtake_peak(0).value_kw == 7.0);
    CHECK(set.offtake_peak(0).quarter == 100);
    CHECK(set.injection_peak(1).value_kw == -2.0);
}

TEST_CASE("subset view shares storage and original survives") {
    std::vector<Profile> v{year_profile("a", 1.0f), year_profile("b", 2.0f),
                           year_profile("c", 3.0f)};
    const ProfileSet set(v, 2022, "Europe/Brussels");
    const ProfileSet sub = set.subset_view({2, 0});
    CHECK(sub.size() == 2);
    CHECK(sub.at(0).id == "c");
    CHECK(sub.at(1).id == "a");
    CHECK(set.size() == 3);
    CHECK(sub.offtake_peak(0).value_kw == 3.0);
}

TEST_CASE("panels of a constant profile") {
    const Profile p = year_profile("c2", 2.0f);
    const PanelData d = profile_panels(p);
    REQUIRE(d.env_min.size() == static_cast<std::size_t>(kQuartersPerDay));
    for (int q = 0; q < kQuartersPerDay; ++q) {
        CHECK(d.env_min[q] == doctest::Approx(2.0));
        CHECK(d.env_mean[q] == doctest::Approx(2.0));
        CHECK(d.env_max[q] == doctest::Approx(2.0));
    }
    CHECK(d.days == 365);
    CHECK(d.heatmap.size() == static_cast<std::size_t>(365 * kQuartersPerDay));
    int nonzero = 0;
    for (auto c : d.histogram.counts) nonzero += c > 0;
    CHECK(nonzero == 1);
    CHECK(d.histogram.total() == 35040);
}

TEST_CASE("panel mean ties back to yearly consumption") {
    Profile p = year_profile("v", 0.0f);
    for (std::size_t i = 0; i < p.power.size(); ++i) {
        p.power[i] = static_cast<float>(0.5 + 0.25 * ((i / 96) % 3));
    }
    const PanelData d = profile_panels(p);
    double mean_of_env = 0.0;
    for (double m : d.env_mean) mean_of_env += m;
    mean_of_env /= kQuartersPerDay;
    const double mean_power = yearly_consumption_kwh(p) / (365.0 * 24.0);
    CHECK(mean_of_env == doctest::Approx(mean_power).epsilon(1e-9));
}

TEST_CASE("store round trip is bit exact") {
    std::vector<Profile> v{year_profile("a", 1.25f), year_profile("b", -0.5f)};
    v[0].labels.has_hp = true;
    v[0].labels.connection_power_kva = 9.2;
    v[1].labels.has_ev = true;
    v[1].labels.pv_inverter_kva = 4.0;
    for (std::size_t i = 0; i < v[1].power.size(); ++i) {
        v[1].power[i] = static_cast<float>(std::sin(0.001 * static_cast<double>(i)));
    }
    const ProfileSet set(v, 2022, "Europe/Brussels");
    const WeatherSeries w = flat_weather(2022);

    const std::string dir = (std::filesystem::temp_directory_path() / "fs_store_rt").string();
    std::filesystem::remove_all(dir);
    write_store(dir, set, w);
    const Store back = read_store(dir);

    REQUIRE(back.profiles.size() == 2);
    CHECK(back.profiles.year() == 2022);
    CHECK(back.profiles.timezone() == "Europe/Brussels");
    for (std::size_t i = 0; i < 2; ++i) {
        const Profile& orig = set.at(i);
        const Profile& got = back.profiles.at(i);
        CHECK(got.id == orig.id);
        CHECK(got.labels.has_hp == orig.labels.has_hp);
        CHECK(got.labels.has_ev == orig.labels.has_ev);
        CHECK(got.labels.pv_inverter_kva == orig.labels.pv_inverter_kva);
        CHECK(got.labels.connection_power_kva == orig.labels.connection_power_kva);
        REQUIRE(got.power.size() == orig.power.size());
        CHECK(std::memcmp(got.power.data(), orig.power.data(),
                          orig.power.size() * sizeof(float)) == 0);
    }
    CHECK(back.weather.year == 2022);
    CHECK(back.weather.temperature_c == w.temperature_c);
    std::filesystem::remove_all(dir);
}

TEST_CASE("digests are stable and content sensitive") {
    CHECK(text_digest("abc") == text_digest("abc"));
    CHECK(text_digest("abc") != text_digest("abd"));
    CHECK(text_digest("").rfind("fnv1a64:", 0) == 0);
}

TEST_CASE("manifest timestamp honors SOURCE_DATE_EPOCH") {
    setenv("SOURCE_DATE_EPOCH", "0", 1);
    CHECK(RunManifest::utc_timestamp() == "1970-01-01T00:00:00Z");
    setenv("SOURCE_DATE_EPOCH", "1660000000", 1);
    CHECK(RunManifest::utc_timestamp() == "2022-08-08T23:06:40Z");
    unsetenv("SOURCE_DATE_EPOCH");
}
