#include "feedersim/subsets.hpp"

#include <stdexcept>

namespace feedersim {

double ev_max_charge_kw(const Profile& p) {
    if (!p.labels.has_ev) throw std::invalid_argument("ev_max_charge_kw: profile has no EV");
    return profile_peak(p, Direction::offtake).value_kw;
}

bool classify_ev_high_power(const Profile& p, double threshold_kw) {
    return ev_max_charge_kw(p) > threshold_kw;
}

SubsetSpec subset_all() {
    return {"all", [](const Profile&) { return true; }};
}

SubsetSpec subset_no_hp_no_ev() {
    return {"no_hp_no_ev",
            [](const Profile& p) { return !p.labels.has_hp && !p.labels.has_ev; }};
}

SubsetSpec subset_hp() {
    return {"hp", [](const Profile& p) { return p.labels.has_hp; }};
}

SubsetSpec subset_ev() {
    return {"ev", [](const Profile& p) { return p.labels.has_ev; }};
}

SubsetSpec subset_ev_high_power(double threshold_kw) {
    return {"ev_high_power", [threshold_kw](const Profile& p) {
                return p.labels.has_ev && classify_ev_high_power(p, threshold_kw);
            }};
}

SubsetSpec subset_by_name(const std::string& name) {
    if (name == "all") return subset_all();
    if (name == "no_hp_no_ev") return subset_no_hp_no_ev();
    if (name == "hp") return subset_hp();
    if (name == "ev") return subset_ev();
    if (name == "ev_high_power") return subset_ev_high_power();
    throw std::invalid_argument("unknown subset: " + name);
}

std::vector<std::string> builtin_subset_names() {
    return {"no_hp_no_ev", "hp", "ev", "ev_high_power"};
}

ProfileSet apply_subset(const ProfileSet& set, const SubsetSpec& spec) {
    std::vector<std::uint32_t> members;
    for (std::size_t i = 0; i < set.size(); ++i)
        if (spec.predicate(set.at(i))) members.push_back(static_cast<std::uint32_t>(i));
    return set.subset_view(std::move(members));
}

SubsetSummary summarize(const ProfileSet& set) {
    if (set.empty()) throw std::invalid_argument("summarize: empty set");
    SubsetSummary s;
    s.count = set.size();

    std::vector<double> pv_kva, conn_kva, consumption;
    consumption.reserve(set.size());
    for (std::size_t i = 0; i < set.size(); ++i) {
        const Profile& p = set.at(i);
        if (p.labels.pv_inverter_kva && *p.labels.pv_inverter_kva > 0.0)
            pv_kva.push_back(*p.labels.pv_inverter_kva);
        if (p.labels.connection_power_kva)
            conn_kva.push_back(*p.labels.connection_power_kva);
        consumption.push_back(yearly_consumption_kwh(p));
    }
    s.pct_pv = 100.0 * static_cast<double>(pv_kva.size()) / static_cast<double>(set.size());
    if (!pv_kva.empty()) s.pv_kva = mean_sd(pv_kva);
    if (!conn_kva.empty()) s.connection_power_kva = mean_sd(conn_kva);
    s.consumption_kwh = mean_sd(consumption);
    return s;
}

Histogram peak_histogram(const ProfileSet& set, Direction direction, double bin_kw) {
    if (set.empty()) throw std::invalid_argument("peak_histogram: empty set");
    std::vector<double> peaks;
    peaks.reserve(set.size());
    for (std::size_t i = 0; i < set.size(); ++i)
        peaks.push_back(direction == Direction::offtake ? set.offtake_peak(i).value_kw
                                                        : set.injection_peak(i).value_kw);
    return make_histogram(std::span<const double>(peaks), bin_kw);
}

}  // namespace feedersim
