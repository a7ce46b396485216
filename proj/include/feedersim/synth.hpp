#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "feedersim/profile.hpp"
#include "feedersim/rng.hpp"
#include "feedersim/weather.hpp"

namespace feedersim {

struct GroupCounts {
    std::uint32_t plain = 850;
    std::uint32_t hp_only = 350;
    std::uint32_t ev_only = 650;
    std::uint32_t hp_and_ev = 150;

    std::uint32_t total() const { return plain + hp_only + ev_only + hp_and_ev; }
};

struct BaseLoadParams {
    double mean_daily_energy_kwh = 8.0;
    double daily_energy_sd_kwh = 2.5;
    double min_daily_energy_kwh = 2.0;
    double morning_weight = 0.35;
    double evening_weight = 0.8;
    double winter_evening_boost = 0.6;
    double noise_kw = 0.06;
};

struct PvParams {
    double ownership = 0.4;
    double inverter_kva_mean = 5.6;
    double inverter_kva_sd = 2.1;
    double inverter_kva_min = 1.5;
    double undersizing = 1.4;        // panel peak over inverter rating
    double system_efficiency = 0.85; // kW produced per kW panel at 1 kW/m2
};

struct HpParams {
    double operating_power_kw = 2.5;
    double operating_power_sd = 0.4;
    double operating_power_min_kw = 1.0;
    double balance_temp_c = 15.0; // no heating at or above this daily mean
    double design_temp_c = -8.0;  // full duty at or below this daily mean
    double modulation_period_h = 2.0; // <=0 disables on/off cycling
    bool night_setback = true;
    double night_setback_factor = 0.6;
};

struct EvChargerOption {
    double power_kw = 0.0;
    double probability = 0.0;
};

struct EvParams {
    std::vector<EvChargerOption> chargers = {
        {3.6, 0.35}, {4.6, 0.25}, {7.4, 0.15}, {11.0, 0.15}, {22.0, 0.10}};
    double sessions_per_week = 3.0;
    double session_energy_kwh = 11.0;
    bool night_tariff_mode = true;   // false: all sessions start 17h-21h45
    double night_tariff_share = 0.85;
};

struct BatteryParams {
    double fraction = 0.02;
    double peak_kw = 2.5;
    double summer_night_suppression = 0.15;
};

struct GeneratorConfig {
    std::uint64_t seed = 20220101;
    GroupCounts counts;
    BaseLoadParams base;
    PvParams pv;
    HpParams hp;
    EvParams ev;
    BatteryParams battery;

    void validate() const; // throws std::invalid_argument on bad parameters

    std::string to_json() const;
    static GeneratorConfig from_json(const std::string& text);
    static GeneratorConfig load(const std::string& path);
    void save(const std::string& path) const;
};

enum class ComponentKind { base, pv, hp, ev, battery };
ComponentKind component_kind_from_name(std::string_view name);

/// Additive load components, quarter-hour kW for the weather's year. PV is
/// returned with injection sign (<= 0); everything else is >= 0.
std::vector<float> base_component(const BaseLoadParams& params, int year,
                                  double daily_energy_kwh, Rng& rng);
std::vector<float> pv_component(const PvParams& params, const WeatherSeries& weather,
                                double inverter_kva);
std::vector<float> hp_component(const HpParams& params, const WeatherSeries& weather,
                                double operating_kw, Rng& rng);
std::vector<float> ev_component(const EvParams& params, int year, double charger_kw, Rng& rng);
std::vector<float> battery_component(const BatteryParams& params, int year, Rng& rng);

/// Dispatcher over the per-component generators using the config's central
/// parameter values (mean inverter size, mean operating power, ...).
std::vector<float> generate_component(ComponentKind kind, const GeneratorConfig& config,
                                      const WeatherSeries& weather, Rng& rng);

/// Builds the labeled synthetic population. Net power per profile is
/// base + hp + ev + battery + pv (pv <= 0), with the battery flag also
/// damping summer-night base offtake. Deterministic given config.seed; each
/// profile draws from its own RNG streams keyed by (seed, profile index).
ProfileSet generate_population(const GeneratorConfig& config, const WeatherSeries& weather);

/// Deterministic test-fixture climate: a smooth seasonal cycle with one
/// unambiguous cold spell (days 31..40, each day a degree colder, the final
/// day the year's coldest), day-night temperature swing, and a clouded solar
/// curve that is zero at night.
WeatherSeries synthetic_weather(int year, std::uint64_t seed = 0x57454154u);

/// First and last day-of-year (inclusive) of the fixture's cold spell.
constexpr int kColdSpellFirstDay = 31;
constexpr int kColdSpellLastDay = 40;

}  // namespace feedersim
