#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "feedersim/profile.hpp"

namespace feedersim {

constexpr double kEvHighPowerThresholdKw = 6.5;

/// Maximum charging power attributed to an EV connection, derived as the
/// profile's whole-year maximum net power (the only observable in the data).
double ev_max_charge_kw(const Profile& p);

/// Strict comparison against the threshold; throws when the profile has no EV.
bool classify_ev_high_power(const Profile& p, double threshold_kw = kEvHighPowerThresholdKw);

/// Named predicate selecting a profile population.
struct SubsetSpec {
    std::string name;
    std::function<bool(const Profile&)> predicate;
};

SubsetSpec subset_all();
SubsetSpec subset_no_hp_no_ev();
SubsetSpec subset_hp();
SubsetSpec subset_ev();
SubsetSpec subset_ev_high_power(double threshold_kw = kEvHighPowerThresholdKw);

/// Lookup by CLI name: all, no_hp_no_ev, hp, ev, ev_high_power.
SubsetSpec subset_by_name(const std::string& name);
std::vector<std::string> builtin_subset_names();

/// Filtered view sharing storage with `set`; empty results are allowed and
/// left to the caller to flag.
ProfileSet apply_subset(const ProfileSet& set, const SubsetSpec& spec);

struct SubsetSummary {
    std::size_t count = 0;
    double pct_pv = 0.0;
    std::optional<MeanSd> pv_kva;  // over PV owners only
    std::optional<MeanSd> connection_power_kva;
    MeanSd consumption_kwh;
};

/// Table-style population statistics; population sd (divisor N). Throws on an
/// empty set.
SubsetSummary summarize(const ProfileSet& set);

/// Histogram of per-profile peaks in the chosen direction.
Histogram peak_histogram(const ProfileSet& set, Direction direction, double bin_kw = 0.5);

}  // namespace feedersim
