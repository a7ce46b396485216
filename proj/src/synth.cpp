#include "feedersim/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "feedersim/calendar.hpp"
#include "feedersim/csvio.hpp"

namespace feedersim {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kSummerFirstDay = 150;
constexpr int kSummerLastDay = 240;

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

// Relative winter strength of day d: ~1 in mid-January, ~0 in mid-July.
double winterness(int day, int days) {
    return (1.0 + std::cos(2.0 * kPi * (day - 15) / static_cast<double>(days))) / 2.0;
}

double bump(double hour, double center, double width) {
    const double z = (hour - center) / width;
    return std::exp(-0.5 * z * z);
}

int ev_session_count(double sessions_per_week, int days) {
    const long n = std::lround(sessions_per_week * static_cast<double>(days) / 7.0);
    return static_cast<int>(std::clamp<long>(n, 0, days));
}

int ev_session_quarters(double session_energy_kwh, double charger_kw) {
    if (session_energy_kwh <= 0.0 || charger_kw <= 0.0) return 0;
    return static_cast<int>(std::ceil(session_energy_kwh / (charger_kw * kHoursPerQuarter) - 1e-9));
}

std::vector<double> daily_mean_duty(const HpParams& params, const WeatherSeries& weather) {
    const std::vector<double> means = daily_mean_temperature(weather);
    std::vector<double> duty(means.size());
    const double span = params.balance_temp_c - params.design_temp_c;
    for (std::size_t d = 0; d < means.size(); ++d) {
        duty[d] = clamp01((params.balance_temp_c - means[d]) / span);
    }
    return duty;
}

// Distinct day draw via partial Fisher-Yates; draw order is the session order.
std::vector<int> draw_session_days(int days, int n_sessions, Rng& rng) {
    std::vector<int> pool(static_cast<std::size_t>(days));
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n_sessions));
    for (int k = 0; k < n_sessions; ++k) {
        const std::size_t j =
            static_cast<std::size_t>(k) + static_cast<std::size_t>(rng.bounded(
                                              static_cast<std::uint64_t>(days - k)));
        std::swap(pool[static_cast<std::size_t>(k)], pool[j]);
        out.push_back(pool[static_cast<std::size_t>(k)]);
    }
    return out;
}

double pick_charger_kw(const EvParams& params, double u) {
    double cumulative = 0.0;
    for (const EvChargerOption& option : params.chargers) {
        cumulative += option.probability;
        if (u < cumulative) return option.power_kw;
    }
    return params.chargers.back().power_kw;
}

double min_charger_kw(const EvParams& params) {
    double m = params.chargers.front().power_kw;
    for (const EvChargerOption& option : params.chargers) m = std::min(m, option.power_kw);
    return m;
}

void require(bool ok, const char* message) {
    if (!ok) throw std::invalid_argument(message);
}

}  // namespace

void GeneratorConfig::validate() const {
    require(counts.total() >= 1, "population is empty");

    require(base.mean_daily_energy_kwh >= 0.0, "base mean daily energy must be >= 0");
    require(base.daily_energy_sd_kwh >= 0.0, "base daily energy sd must be >= 0");
    require(base.min_daily_energy_kwh >= 0.0, "base min daily energy must be >= 0");
    require(base.morning_weight >= 0.0 && base.evening_weight >= 0.0,
            "base activity weights must be >= 0");
    require(base.winter_evening_boost >= 0.0, "winter evening boost must be >= 0");
    require(base.noise_kw >= 0.0, "base noise must be >= 0");

    require(pv.ownership >= 0.0 && pv.ownership <= 1.0, "pv ownership must be in [0,1]");
    require(pv.inverter_kva_mean >= 0.0 && pv.inverter_kva_sd >= 0.0 && pv.inverter_kva_min >= 0.0,
            "pv inverter parameters must be >= 0");
    require(pv.undersizing > 0.0, "pv undersizing must be positive");
    require(pv.system_efficiency > 0.0 && pv.system_efficiency <= 2.0,
            "pv system efficiency out of range");

    require(hp.operating_power_kw >= 0.0 && hp.operating_power_sd >= 0.0 &&
                hp.operating_power_min_kw >= 0.0,
            "hp power parameters must be >= 0");
    require(hp.balance_temp_c > hp.design_temp_c, "hp balance temperature must exceed design");
    require(hp.night_setback_factor >= 0.0 && hp.night_setback_factor <= 1.0,
            "hp night setback factor must be in [0,1]");

    require(!ev.chargers.empty(), "ev charger list is empty");
    double mass = 0.0;
    for (const EvChargerOption& option : ev.chargers) {
        require(option.power_kw > 0.0, "ev charger power must be positive");
        require(option.probability >= 0.0, "ev charger probability must be >= 0");
        mass += option.probability;
    }
    require(std::abs(mass - 1.0) <= 1e-9, "ev charger probabilities must sum to 1");
    require(ev.sessions_per_week >= 0.0, "ev sessions per week must be >= 0");
    require(ev.session_energy_kwh >= 0.0, "ev session energy must be >= 0");
    require(ev.night_tariff_share >= 0.0 && ev.night_tariff_share <= 1.0,
            "ev night tariff share must be in [0,1]");
    require(ev_session_quarters(ev.session_energy_kwh, min_charger_kw(ev)) <= 72,
            "ev session longer than 18 h on the slowest charger");

    require(battery.fraction >= 0.0 && battery.fraction <= 1.0,
            "battery fraction must be in [0,1]");
    require(battery.peak_kw >= 0.0, "battery peak must be >= 0");
    require(battery.summer_night_suppression >= 0.0 && battery.summer_night_suppression <= 1.0,
            "battery suppression must be in [0,1]");
}

ComponentKind component_kind_from_name(std::string_view name) {
    if (name == "base") return ComponentKind::base;
    if (name == "pv") return ComponentKind::pv;
    if (name == "hp") return ComponentKind::hp;
    if (name == "ev") return ComponentKind::ev;
    if (name == "battery") return ComponentKind::battery;
    throw std::invalid_argument("unknown component kind: " + std::string(name));
}

std::vector<float> base_component(const BaseLoadParams& params, int year,
                                  double daily_energy_kwh, Rng& rng) {
    const int days = days_in_year(year);
    std::vector<float> out(quarters_in_year(year));
    if (daily_energy_kwh <= 0.0) return out;

    double morning_shape[kQuartersPerDay];
    double evening_shape[kQuartersPerDay];
    double morning_mean = 0.0;
    double evening_mean = 0.0;
    for (int q = 0; q < kQuartersPerDay; ++q) {
        const double hour = (q + 0.5) * kHoursPerQuarter;
        morning_shape[q] = bump(hour, 7.5, 1.5);
        evening_shape[q] = bump(hour, 18.5, 2.0);
        morning_mean += morning_shape[q];
        evening_mean += evening_shape[q];
    }
    morning_mean /= kQuartersPerDay;
    evening_mean /= kQuartersPerDay;

    std::size_t idx = 0;
    for (int d = 0; d < days; ++d) {
        const double evening_gain =
            params.evening_weight * (1.0 + params.winter_evening_boost * winterness(d, days));
        const double mean_weight =
            1.0 + params.morning_weight * morning_mean + evening_gain * evening_mean;
        const double level = daily_energy_kwh / kHoursPerDay / mean_weight;
        for (int q = 0; q < kQuartersPerDay; ++q, ++idx) {
            const double weight =
                1.0 + params.morning_weight * morning_shape[q] + evening_gain * evening_shape[q];
            const double value = level * weight + params.noise_kw * rng.normal();
            out[idx] = static_cast<float>(std::max(0.0, value));
        }
    }
    return out;
}

std::vector<float> pv_component(const PvParams& params, const WeatherSeries& weather,
                                double inverter_kva) {
    std::vector<float> out(quarters_in_year(weather.year));
    if (inverter_kva <= 0.0) return out;
    const double panel_kw = inverter_kva * params.undersizing * params.system_efficiency;
    std::size_t idx = 0;
    for (double ssrd : weather.ssrd_kw_m2) {
        const double production = std::min(inverter_kva, panel_kw * ssrd);
        const float value = static_cast<float>(-std::max(0.0, production));
        for (int r = 0; r < kQuartersPerHour; ++r) out[idx++] = value;
    }
    return out;
}

std::vector<float> hp_component(const HpParams& params, const WeatherSeries& weather,
                                double operating_kw, Rng& rng) {
    std::vector<float> out(quarters_in_year(weather.year));
    if (operating_kw <= 0.0) return out;
    const std::vector<double> duty_day = daily_mean_duty(params, weather);
    const double phase = rng.unit();
    const bool cycling = params.modulation_period_h > 0.0;

    std::size_t idx = 0;
    for (std::size_t d = 0; d < duty_day.size(); ++d) {
        for (int q = 0; q < kQuartersPerDay; ++q, ++idx) {
            double duty = duty_day[d];
            if (params.night_setback && (q >= 92 || q < 24)) duty *= params.night_setback_factor;
            if (duty <= 0.0) continue;
            if (!cycling) {
                out[idx] = static_cast<float>(operating_kw * duty);
                continue;
            }
            const double t_hours = static_cast<double>(idx) * kHoursPerQuarter;
            const double position = t_hours / params.modulation_period_h + phase;
            if (position - std::floor(position) < duty) {
                out[idx] = static_cast<float>(operating_kw);
            }
        }
    }
    return out;
}

std::vector<float> ev_component(const EvParams& params, int year, double charger_kw, Rng& rng) {
    const int days = days_in_year(year);
    const std::size_t n_quarters = quarters_in_year(year);
    std::vector<float> out(n_quarters);
    const int n_sessions = ev_session_count(params.sessions_per_week, days);
    if (n_sessions == 0 || charger_kw <= 0.0 || params.session_energy_kwh <= 0.0) return out;

    const double quarter_energy = charger_kw * kHoursPerQuarter;
    const int full_quarters =
        static_cast<int>(std::floor(params.session_energy_kwh / quarter_energy + 1e-9));
    const double remainder_kwh =
        params.session_energy_kwh - static_cast<double>(full_quarters) * quarter_energy;

    const std::vector<int> session_days = draw_session_days(days, n_sessions, rng);
    for (int day : session_days) {
        std::uint32_t start_qod;
        const bool night = params.night_tariff_mode && rng.unit() < params.night_tariff_share;
        if (night) {
            start_qod = 88 + static_cast<std::uint32_t>(rng.bounded(4));  // 22:00 - 22:45
        } else {
            start_qod = 68 + static_cast<std::uint32_t>(rng.bounded(20));  // 17:00 - 21:45
        }
        std::size_t idx = static_cast<std::size_t>(day) * kQuartersPerDay + start_qod;
        for (int k = 0; k < full_quarters; ++k) {
            out[idx % n_quarters] += static_cast<float>(charger_kw);
            ++idx;
        }
        if (remainder_kwh > 1e-12) {
            out[idx % n_quarters] += static_cast<float>(remainder_kwh / kHoursPerQuarter);
        }
    }
    return out;
}

std::vector<float> battery_component(const BatteryParams& params, int year, Rng& rng) {
    const int days = days_in_year(year);
    std::vector<float> out(quarters_in_year(year));
    if (params.peak_kw <= 0.0) return out;
    for (int d = 0; d < days; ++d) {
        const std::size_t day_base = static_cast<std::size_t>(d) * kQuartersPerDay;
        const std::uint32_t noon = 47 + static_cast<std::uint32_t>(rng.bounded(3));
        const std::uint32_t night = 87 + static_cast<std::uint32_t>(rng.bounded(3));
        for (std::uint32_t q : {noon, night}) {
            out[day_base + q] += static_cast<float>(params.peak_kw);
            out[day_base + q + 1] += static_cast<float>(params.peak_kw);
        }
    }
    return out;
}

std::vector<float> generate_component(ComponentKind kind, const GeneratorConfig& config,
                                      const WeatherSeries& weather, Rng& rng) {
    switch (kind) {
        case ComponentKind::base:
            return base_component(config.base, weather.year, config.base.mean_daily_energy_kwh,
                                  rng);
        case ComponentKind::pv:
            return pv_component(config.pv, weather, config.pv.inverter_kva_mean);
        case ComponentKind::hp:
            return hp_component(config.hp, weather, config.hp.operating_power_kw, rng);
        case ComponentKind::ev: {
            double expected_kw = 0.0;
            for (const EvChargerOption& option : config.ev.chargers) {
                expected_kw += option.probability * option.power_kw;
            }
            return ev_component(config.ev, weather.year, expected_kw, rng);
        }
        case ComponentKind::battery:
            return battery_component(config.battery, weather.year, rng);
    }
    throw std::invalid_argument("unknown component kind");
}

ProfileSet generate_population(const GeneratorConfig& config, const WeatherSeries& weather) {
    config.validate();
    weather.validate();
    const int year = weather.year;
    const std::size_t n_quarters = quarters_in_year(year);
    const std::uint32_t total = config.counts.total();

    std::vector<Profile> profiles;
    profiles.reserve(total);

    // Profile index runs through the groups in order: plain, hp_only,
    // ev_only, hp_and_ev.
    const std::uint32_t hp_only_end = config.counts.plain + config.counts.hp_only;
    const std::uint32_t ev_only_end = hp_only_end + config.counts.ev_only;
    for (std::uint32_t i = 0; i < total; ++i) {
        const bool has_hp = (i >= config.counts.plain && i < hp_only_end) || i >= ev_only_end;
        const bool has_ev = i >= hp_only_end;

        // One stream per profile for the static draws, fixed draw order so a
        // profile's identity does not depend on its neighbours.
        Rng traits = Rng::stream(config.seed, i, 0);
        const double u_pv = traits.unit();
        const double kva_draw = traits.normal(config.pv.inverter_kva_mean, config.pv.inverter_kva_sd);
        const double conn_draw = traits.normal(9.2, 2.3);
        const double energy_draw =
            traits.normal(config.base.mean_daily_energy_kwh, config.base.daily_energy_sd_kwh);
        const double hp_draw =
            traits.normal(config.hp.operating_power_kw, config.hp.operating_power_sd);
        const double u_charger = traits.unit();
        const double u_battery = traits.unit();

        const bool has_pv = u_pv < config.pv.ownership;
        const bool has_battery = u_battery < config.battery.fraction;
        const double inverter_kva = std::max(config.pv.inverter_kva_min, kva_draw);
        const double connection_kva = std::max(4.0, conn_draw);
        const double daily_energy =
            std::max(config.base.min_daily_energy_kwh, energy_draw);
        const double hp_operating = std::max(config.hp.operating_power_min_kw, hp_draw);

        Rng base_rng = Rng::stream(config.seed, i, 1);
        std::vector<float> base = base_component(config.base, year, daily_energy, base_rng);
        if (has_battery && config.battery.summer_night_suppression < 1.0) {
            for (int d = kSummerFirstDay; d <= kSummerLastDay; ++d) {
                const std::size_t day_base = static_cast<std::size_t>(d) * kQuartersPerDay;
                for (int q = 0; q < 24; ++q) {
                    base[day_base + static_cast<std::size_t>(q)] *=
                        static_cast<float>(config.battery.summer_night_suppression);
                }
            }
        }

        std::vector<double> net(n_quarters);
        for (std::size_t q = 0; q < n_quarters; ++q) net[q] = static_cast<double>(base[q]);

        if (has_pv) {
            const std::vector<float> pv = pv_component(config.pv, weather, inverter_kva);
            for (std::size_t q = 0; q < n_quarters; ++q) net[q] += static_cast<double>(pv[q]);
        }
        if (has_hp) {
            Rng hp_rng = Rng::stream(config.seed, i, 3);
            const std::vector<float> hp =
                hp_component(config.hp, weather, hp_operating, hp_rng);
            for (std::size_t q = 0; q < n_quarters; ++q) net[q] += static_cast<double>(hp[q]);
        }
        if (has_ev) {
            Rng ev_rng = Rng::stream(config.seed, i, 4);
            const double charger_kw = pick_charger_kw(config.ev, u_charger);
            const std::vector<float> ev =
                ev_component(config.ev, year, charger_kw, ev_rng);
            for (std::size_t q = 0; q < n_quarters; ++q) net[q] += static_cast<double>(ev[q]);
        }
        if (has_battery) {
            Rng battery_rng = Rng::stream(config.seed, i, 5);
            const std::vector<float> batt =
                battery_component(config.battery, year, battery_rng);
            for (std::size_t q = 0; q < n_quarters; ++q) net[q] += static_cast<double>(batt[q]);
        }

        Profile p;
        char id[16];
        std::snprintf(id, sizeof id, "syn-%06u", i);
        p.id = id;
        p.power.resize(n_quarters);
        for (std::size_t q = 0; q < n_quarters; ++q) p.power[q] = static_cast<float>(net[q]);
        p.labels.has_hp = has_hp;
        p.labels.has_ev = has_ev;
        if (has_pv) p.labels.pv_inverter_kva = inverter_kva;
        p.labels.connection_power_kva = connection_kva;
        profiles.push_back(std::move(p));
    }

    return ProfileSet(std::move(profiles), year, "Europe/Brussels");
}

WeatherSeries synthetic_weather(int year, std::uint64_t seed) {
    const int days = days_in_year(year);
    WeatherSeries w;
    w.year = year;
    w.temperature_c.reserve(static_cast<std::size_t>(days) * kHoursPerDay);
    w.ssrd_kw_m2.reserve(static_cast<std::size_t>(days) * kHoursPerDay);

    const auto day_uniform = [seed](int d, std::uint64_t salt) {
        std::uint64_t s = seed ^ (static_cast<std::uint64_t>(d) << 20 | salt);
        return static_cast<double>(splitmix64(s) >> 11) * 0x1.0p-53;
    };
    for (int d = 0; d < days; ++d) {
        const double noise = -1.5 + 3.0 * day_uniform(d, 1);
        double daily_mean = 11.0 - 10.0 * std::cos(2.0 * kPi * (d - 10) / static_cast<double>(days)) + noise;
        if (d >= kColdSpellFirstDay && d <= kColdSpellLastDay) {
            daily_mean = -3.0 - static_cast<double>(d - kColdSpellFirstDay);
        }
        const double cloud = 0.25 + 0.75 * day_uniform(d, 2);
        const double peak_ssrd =
            (0.35 + 0.55 * (1.0 + std::cos(2.0 * kPi * (d - 197) / static_cast<double>(days))) / 2.0) *
            cloud;
        for (int h = 0; h < kHoursPerDay; ++h) {
            const double hour = h + 0.5;
            w.temperature_c.push_back(daily_mean + 3.0 * std::sin(2.0 * kPi * (h - 9) / 24.0));
            const double sun = std::sin(kPi * (hour - 6.0) / 12.0);
            w.ssrd_kw_m2.push_back(hour > 6.0 && hour < 18.0 ? peak_ssrd * std::max(0.0, sun)
                                                             : 0.0);
        }
    }
    w.validate();
    return w;
}

namespace {

using nlohmann::json;

json counts_json(const GroupCounts& c) {
    return json{{"plain", c.plain},
                {"hp_only", c.hp_only},
                {"ev_only", c.ev_only},
                {"hp_and_ev", c.hp_and_ev}};
}

json base_json(const BaseLoadParams& b) {
    return json{{"mean_daily_energy_kwh", b.mean_daily_energy_kwh},
                {"daily_energy_sd_kwh", b.daily_energy_sd_kwh},
                {"min_daily_energy_kwh", b.min_daily_energy_kwh},
                {"morning_weight", b.morning_weight},
                {"evening_weight", b.evening_weight},
                {"winter_evening_boost", b.winter_evening_boost},
                {"noise_kw", b.noise_kw}};
}

json pv_json(const PvParams& p) {
    return json{{"ownership", p.ownership},
                {"inverter_kva_mean", p.inverter_kva_mean},
                {"inverter_kva_sd", p.inverter_kva_sd},
                {"inverter_kva_min", p.inverter_kva_min},
                {"undersizing", p.undersizing},
                {"system_efficiency", p.system_efficiency}};
}

json hp_json(const HpParams& h) {
    return json{{"operating_power_kw", h.operating_power_kw},
                {"operating_power_sd", h.operating_power_sd},
                {"operating_power_min_kw", h.operating_power_min_kw},
                {"balance_temp_c", h.balance_temp_c},
                {"design_temp_c", h.design_temp_c},
                {"modulation_period_h", h.modulation_period_h},
                {"night_setback", h.night_setback},
                {"night_setback_factor", h.night_setback_factor}};
}

json ev_json(const EvParams& e) {
    json chargers = json::array();
    for (const EvChargerOption& option : e.chargers) {
        chargers.push_back(json{{"power_kw", option.power_kw},
                                {"probability", option.probability}});
    }
    return json{{"chargers", chargers},
                {"sessions_per_week", e.sessions_per_week},
                {"session_energy_kwh", e.session_energy_kwh},
                {"night_tariff_mode", e.night_tariff_mode},
                {"night_tariff_share", e.night_tariff_share}};
}

json battery_json(const BatteryParams& b) {
    return json{{"fraction", b.fraction},
                {"peak_kw", b.peak_kw},
                {"summer_night_suppression", b.summer_night_suppression}};
}

}  // namespace

std::string GeneratorConfig::to_json() const {
    json j{{"seed", seed},
           {"counts", counts_json(counts)},
           {"base", base_json(base)},
           {"pv", pv_json(pv)},
           {"hp", hp_json(hp)},
           {"ev", ev_json(ev)},
           {"battery", battery_json(battery)}};
    return j.dump(2) + "\n";
}

GeneratorConfig GeneratorConfig::from_json(const std::string& text) {
    const json j = json::parse(text);
    GeneratorConfig c;
    const auto pick = [](const json& obj, const char* key, auto& field) {
        if (auto it = obj.find(key); it != obj.end()) {
            field = it->get<std::decay_t<decltype(field)>>();
        }
    };

    pick(j, "seed", c.seed);
    if (auto it = j.find("counts"); it != j.end()) {
        pick(*it, "plain", c.counts.plain);
        pick(*it, "hp_only", c.counts.hp_only);
        pick(*it, "ev_only", c.counts.ev_only);
        pick(*it, "hp_and_ev", c.counts.hp_and_ev);
    }
    if (auto it = j.find("base"); it != j.end()) {
        pick(*it, "mean_daily_energy_kwh", c.base.mean_daily_energy_kwh);
        pick(*it, "daily_energy_sd_kwh", c.base.daily_energy_sd_kwh);
        pick(*it, "min_daily_energy_kwh", c.base.min_daily_energy_kwh);
        pick(*it, "morning_weight", c.base.morning_weight);
        pick(*it, "evening_weight", c.base.evening_weight);
        pick(*it, "winter_evening_boost", c.base.winter_evening_boost);
        pick(*it, "noise_kw", c.base.noise_kw);
    }
    if (auto it = j.find("pv"); it != j.end()) {
        pick(*it, "ownership", c.pv.ownership);
        pick(*it, "inverter_kva_mean", c.pv.inverter_kva_mean);
        pick(*it, "inverter_kva_sd", c.pv.inverter_kva_sd);
        pick(*it, "inverter_kva_min", c.pv.inverter_kva_min);
        pick(*it, "undersizing", c.pv.undersizing);
        pick(*it, "system_efficiency", c.pv.system_efficiency);
    }
    if (auto it = j.find("hp"); it != j.end()) {
        pick(*it, "operating_power_kw", c.hp.operating_power_kw);
        pick(*it, "operating_power_sd", c.hp.operating_power_sd);
        pick(*it, "operating_power_min_kw", c.hp.operating_power_min_kw);
        pick(*it, "balance_temp_c", c.hp.balance_temp_c);
        pick(*it, "design_temp_c", c.hp.design_temp_c);
        pick(*it, "modulation_period_h", c.hp.modulation_period_h);
        pick(*it, "night_setback", c.hp.night_setback);
        pick(*it, "night_setback_factor", c.hp.night_setback_factor);
    }
    if (auto it = j.find("ev"); it != j.end()) {
        if (auto chargers = it->find("chargers"); chargers != it->end()) {
            c.ev.chargers.clear();
            for (const json& option : *chargers) {
                c.ev.chargers.push_back({option.at("power_kw").get<double>(),
                                         option.at("probability").get<double>()});
            }
        }
        pick(*it, "sessions_per_week", c.ev.sessions_per_week);
        pick(*it, "session_energy_kwh", c.ev.session_energy_kwh);
        pick(*it, "night_tariff_mode", c.ev.night_tariff_mode);
        pick(*it, "night_tariff_share", c.ev.night_tariff_share);
    }
    if (auto it = j.find("battery"); it != j.end()) {
        pick(*it, "fraction", c.battery.fraction);
        pick(*it, "peak_kw", c.battery.peak_kw);
        pick(*it, "summer_night_suppression", c.battery.summer_night_suppression);
    }

    c.validate();
    return c;
}

GeneratorConfig GeneratorConfig::load(const std::string& path) {
    return from_json(read_text_file(path));
}

void GeneratorConfig::save(const std::string& path) const { write_text_file(path, to_json()); }

}  // namespace feedersim
