#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "feedersim/calendar.hpp"
#include "feedersim/stats.hpp"

namespace feedersim {

struct ProfileLabels {
    bool has_hp = false;
    bool has_ev = false;
    std::optional<double> pv_inverter_kva;
    std::optional<double> connection_power_kva;
};

/// One connection: a year of quarter-hour average power in kW.
/// Sign convention: offtake positive, injection negative.
struct Profile {
    std::string id;
    std::vector<float> power;
    ProfileLabels labels;
};

enum class Direction { offtake, injection };

const char* direction_name(Direction d);
Direction direction_from_name(std::string_view name);

struct Peak {
    double value_kw = 0.0;
    std::uint32_t quarter = 0;  // first quarter attaining the extreme
};

/// Offtake: (max, first argmax). Injection: (min, first argmin).
Peak profile_peak(const Profile& p, Direction direction);

/// sum(power) * 0.25 h; negative for net injectors.
double yearly_consumption_kwh(const Profile& p);

/// Immutable, validated collection of equally long profiles. Subset
/// selection produces views over shared storage, so filtering never copies
/// profile data and concurrent reads are safe.
class ProfileSet {
  public:
    ProfileSet() = default;
    ProfileSet(std::vector<Profile> profiles, int year, std::string timezone);

    std::size_t size() const { return view_.size(); }
    bool empty() const { return view_.empty(); }
    const Profile& at(std::size_t i) const { return storage_->profiles[view_[i]]; }
    const Profile& operator[](std::size_t i) const { return at(i); }

    /// Per-profile extremes, precomputed once at construction.
    const Peak& offtake_peak(std::size_t i) const { return storage_->offtake_peaks[view_[i]]; }
    const Peak& injection_peak(std::size_t i) const { return storage_->injection_peaks[view_[i]]; }

    int year() const { return year_; }
    const std::string& timezone() const { return timezone_; }
    int quarters() const { return quarters_in_year(year_); }

    std::optional<std::size_t> index_of(std::string_view id) const;

    /// View over the same storage restricted to the given member indices.
    ProfileSet subset_view(std::vector<std::uint32_t> members) const;

  private:
    struct Storage {
        std::vector<Profile> profiles;
        std::vector<Peak> offtake_peaks;
        std::vector<Peak> injection_peaks;
    };

    std::shared_ptr<const Storage> storage_;
    std::vector<std::uint32_t> view_;
    int year_ = 0;
    std::string timezone_;
};

/// Data behind the three-panel profile figure: per-quarter-of-day envelopes
/// over the year's daily curves, the day-by-quarter heatmap, and the
/// histogram of all quarter-hour values.
struct PanelData {
    std::vector<double> env_min;   // size 96
    std::vector<double> env_mean;  // size 96
    std::vector<double> env_max;   // size 96
    int days = 0;
    std::vector<float> heatmap;  // days x 96, day-major; same values as the profile
    Histogram histogram;
};

PanelData profile_panels(const Profile& p, double histogram_bin_kw = 0.25);

}  // namespace feedersim
