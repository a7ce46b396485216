#include "feedersim/profile.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace feedersim {

const char* direction_name(Direction d) {
    return d == Direction::offtake ? "offtake" : "injection";
}

Direction direction_from_name(std::string_view name) {
    if (name == "offtake") return Direction::offtake;
    if (name == "injection") return Direction::injection;
    throw std::invalid_argument("unknown direction: " + std::string(name));
}

Peak profile_peak(const Profile& p, Direction direction) {
    if (p.power.empty()) throw std::invalid_argument("profile_peak: empty profile");
    std::size_t best = 0;
    if (direction == Direction::offtake) {
        for (std::size_t i = 1; i < p.power.size(); ++i)
            if (p.power[i] > p.power[best]) best = i;
    } else {
        for (std::size_t i = 1; i < p.power.size(); ++i)
            if (p.power[i] < p.power[best]) best = i;
    }
    return Peak{static_cast<double>(p.power[best]), static_cast<std::uint32_t>(best)};
}

double yearly_consumption_kwh(const Profile& p) {
    double sum = 0.0;
    for (float v : p.power) sum += v;
    return sum * kHoursPerQuarter;
}

ProfileSet::ProfileSet(std::vector<Profile> profiles, int year, std::string timezone)
    : year_(year), timezone_(std::move(timezone)) {
    const auto expected = static_cast<std::size_t>(quarters_in_year(year));
    std::unordered_set<std::string> ids;
    ids.reserve(profiles.size());
    for (const Profile& p : profiles) {
        if (p.power.size() != expected)
            throw std::invalid_argument("profile " + p.id + ": length " +
                                        std::to_string(p.power.size()) + " != " +
                                        std::to_string(expected));
        for (float v : p.power)
            if (!std::isfinite(v))
                throw std::invalid_argument("profile " + p.id + ": non-finite power value");
        if (!ids.insert(p.id).second)
            throw std::invalid_argument("duplicate profile id: " + p.id);
    }
    auto storage = std::make_shared<Storage>();
    storage->profiles = std::move(profiles);
    storage->offtake_peaks.reserve(storage->profiles.size());
    storage->injection_peaks.reserve(storage->profiles.size());
    for (const Profile& p : storage->profiles) {
        storage->offtake_peaks.push_back(profile_peak(p, Direction::offtake));
        storage->injection_peaks.push_back(profile_peak(p, Direction::injection));
    }
    view_.resize(storage->profiles.size());
    for (std::size_t i = 0; i < view_.size(); ++i) view_[i] = static_cast<std::uint32_t>(i);
    storage_ = std::move(storage);
}

std::optional<std::size_t> ProfileSet::index_of(std::string_view id) const {
    for (std::size_t i = 0; i < view_.size(); ++i)
        if (at(i).id == id) return i;
    return std::nullopt;
}

ProfileSet ProfileSet::subset_view(std::vector<std::uint32_t> members) const {
    ProfileSet out;
    out.storage_ = storage_;
    out.year_ = year_;
    out.timezone_ = timezone_;
    out.view_.reserve(members.size());
    for (std::uint32_t m : members) {
        if (m >= view_.size()) throw std::out_of_range("subset_view: index out of range");
        out.view_.push_back(view_[m]);
    }
    return out;
}

PanelData profile_panels(const Profile& p, double histogram_bin_kw) {
    if (p.power.empty() || p.power.size() % kQuartersPerDay != 0)
        throw std::invalid_argument("profile_panels: power length must be a multiple of 96");
    PanelData out;
    out.days = static_cast<int>(p.power.size()) / kQuartersPerDay;
    out.env_min.assign(kQuartersPerDay, 0.0);
    out.env_max.assign(kQuartersPerDay, 0.0);
    out.env_mean.assign(kQuartersPerDay, 0.0);
    for (int q = 0; q < kQuartersPerDay; ++q) {
        double lo = p.power[static_cast<std::size_t>(q)];
        double hi = lo;
        double sum = 0.0;
        for (int d = 0; d < out.days; ++d) {
            const double v = p.power[static_cast<std::size_t>(d) * kQuartersPerDay +
                                     static_cast<std::size_t>(q)];
            lo = std::min(lo, v);
            hi = std::max(hi, v);
            sum += v;
        }
        out.env_min[static_cast<std::size_t>(q)] = lo;
        out.env_max[static_cast<std::size_t>(q)] = hi;
        out.env_mean[static_cast<std::size_t>(q)] = sum / out.days;
    }
    out.heatmap = p.power;
    out.histogram = make_histogram(std::span<const float>(p.power), histogram_bin_kw);
    return out;
}

}  // namespace feedersim
