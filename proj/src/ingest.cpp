#include "feedersim/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "feedersim/csvio.hpp"

namespace feedersim {

namespace {
constexpr float kMissing = std::numeric_limits<float>::quiet_NaN();

int parse_int_strict(std::string_view s, int lo, int hi, const char* what) {
    const auto v = parse_int(s);
    if (!v || *v < lo || *v > hi)
        throw std::invalid_argument(std::string("bad ") + what + " in timestamp");
    return static_cast<int>(*v);
}
}  // namespace

TimedReading parse_local_timestamp(std::string_view stamp, float power_kw) {
    // YYYY-MM-DD[T ]HH:MM[:SS]
    if (stamp.size() < 16 || stamp[4] != '-' || stamp[7] != '-' ||
        (stamp[10] != 'T' && stamp[10] != ' ') || stamp[13] != ':')
        throw std::invalid_argument("malformed timestamp: " + std::string(stamp));
    const int year = parse_int_strict(stamp.substr(0, 4), 1900, 2400, "year");
    const int month = parse_int_strict(stamp.substr(5, 2), 1, 12, "month");
    const int day = parse_int_strict(stamp.substr(8, 2), 1, 31, "day");
    const int hour = parse_int_strict(stamp.substr(11, 2), 0, 23, "hour");
    const int minute = parse_int_strict(stamp.substr(14, 2), 0, 59, "minute");
    if (stamp.size() > 16) {
        if (stamp.size() != 19 || stamp[16] != ':')
            throw std::invalid_argument("malformed timestamp: " + std::string(stamp));
        const int second = parse_int_strict(stamp.substr(17, 2), 0, 59, "second");
        if (second != 0) throw std::invalid_argument("timestamp not on quarter-hour boundary");
    }
    if (minute % 15 != 0) throw std::invalid_argument("timestamp not on quarter-hour boundary");
    TimedReading r;
    r.year = year;
    r.day = day_of_year(Date{year, month, day});
    r.slot = hour * kQuartersPerHour + minute / 15;
    r.power_kw = power_kw;
    return r;
}

std::string format_local_timestamp(int year, int day, int slot) {
    const Date d = date_from_day_of_year(year, day);
    const int hour = slot / kQuartersPerHour;
    const int minute = (slot % kQuartersPerHour) * 15;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d", d.year, d.month, d.day, hour,
                  minute);
    return buf;
}

std::vector<float> normalize_dst(const std::vector<TimedReading>& readings, int year,
                                 const std::string& timezone,
                                 std::vector<std::string>* diagnostics) {
    const auto n_quarters = static_cast<std::size_t>(quarters_in_year(year));
    std::vector<float> grid(n_quarters, kMissing);
    const DstRule rule = dst_rule_for_zone(timezone);
    const int spring_day = rule == DstRule::european ? spring_forward_doy(year) : -1;
    const int fall_day = rule == DstRule::european ? fall_back_doy(year) : -1;

    for (const TimedReading& r : readings) {
        if (r.year != year)
            throw std::invalid_argument("readings span multiple years: saw " +
                                        std::to_string(r.year) + ", expected " +
                                        std::to_string(year));
        const std::size_t idx =
            static_cast<std::size_t>(r.day) * kQuartersPerDay + static_cast<std::size_t>(r.slot);
        if (std::isnan(grid[idx])) {
            grid[idx] = r.power_kw;
        } else {
            const bool fall_back_dup = r.day == fall_day && r.slot >= kDstQuarterSlot &&
                                       r.slot < kDstQuarterSlot + kQuartersPerHour;
            if (!fall_back_dup && diagnostics)
                diagnostics->push_back("duplicate reading at " +
                                       format_local_timestamp(year, r.day, r.slot) +
                                       " dropped (first kept)");
            // Fall-back repeated hour: keep the first occurrence, drop the second.
        }
    }

    if (spring_day >= 0) {
        const std::size_t base =
            static_cast<std::size_t>(spring_day) * kQuartersPerDay + kDstQuarterSlot;
        bool hour_missing = true;
        bool prev_present = true;
        for (int q = 0; q < kQuartersPerHour; ++q) {
            hour_missing = hour_missing && std::isnan(grid[base + static_cast<std::size_t>(q)]);
            prev_present = prev_present &&
                           !std::isnan(grid[base - kQuartersPerHour + static_cast<std::size_t>(q)]);
        }
        // Expected shape of local-time data: the hour does not exist, so the
        // imputation is the normal path and draws no diagnostic.
        if (hour_missing && prev_present) {
            for (int q = 0; q < kQuartersPerHour; ++q)
                grid[base + static_cast<std::size_t>(q)] =
                    grid[base - kQuartersPerHour + static_cast<std::size_t>(q)];
        }
    }
    return grid;
}

bool fill_gaps(std::vector<float>& series, int max_gap, std::vector<std::string>* diagnostics,
               std::string* reject_reason) {
    const std::size_t n = series.size();
    std::size_t i = 0;
    while (i < n) {
        if (!std::isnan(series[i])) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < n && std::isnan(series[j])) ++j;
        const std::size_t run = j - i;
        if (run > static_cast<std::size_t>(max_gap)) {
            if (reject_reason)
                *reject_reason = "gap of " + std::to_string(run) + " quarter-hours exceeds limit " +
                                 std::to_string(max_gap);
            return false;
        }
        if (i == 0 && j == n) {
            if (reject_reason) *reject_reason = "no readings";
            return false;
        }
        if (i == 0) {
            for (std::size_t k = i; k < j; ++k) series[k] = series[j];
        } else if (j == n) {
            for (std::size_t k = i; k < j; ++k) series[k] = series[i - 1];
        } else {
            const double left = series[i - 1];
            const double step = (series[j] - left) / static_cast<double>(run + 1);
            for (std::size_t k = i; k < j; ++k)
                series[k] = static_cast<float>(left + step * static_cast<double>(k - i + 1));
        }
        if (diagnostics)
            diagnostics->push_back("gap of " + std::to_string(run) +
                                   " quarter-hours filled starting at quarter " +
                                   std::to_string(i));
        ++i;
    }
    return true;
}

std::vector<std::pair<std::string, ProfileLabels>> read_labels(
    const std::string& path, std::vector<IngestDiagnostic>* diagnostics) {
    const std::string text = read_text_file(path);
    std::vector<std::pair<std::string, ProfileLabels>> out;
    const auto lines = split_lines(text);
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        const auto fields = split_fields(lines[ln]);
        if (ln == 0 && !fields.empty() && fields[0] == "profile_id") continue;
        if (fields.size() != 5) {
            if (diagnostics)
                diagnostics->push_back({"", "labels line " + std::to_string(ln + 1) +
                                                ": expected 5 fields, got " +
                                                std::to_string(fields.size())});
            continue;
        }
        ProfileLabels labels;
        const auto hp = parse_int(fields[1]);
        const auto ev = parse_int(fields[2]);
        if (!hp || !ev || (*hp != 0 && *hp != 1) || (*ev != 0 && *ev != 1)) {
            if (diagnostics)
                diagnostics->push_back({std::string(fields[0]),
                                        "labels line " + std::to_string(ln + 1) +
                                            ": has_hp/has_ev must be 0 or 1"});
            continue;
        }
        labels.has_hp = *hp == 1;
        labels.has_ev = *ev == 1;
        bool bad = false;
        if (!fields[3].empty()) {
            const auto pv = parse_double(fields[3]);
            if (!pv || *pv < 0.0)
                bad = true;
            else
                labels.pv_inverter_kva = *pv;
        }
        if (!fields[4].empty()) {
            const auto cp = parse_double(fields[4]);
            if (!cp || *cp <= 0.0)
                bad = true;
            else
                labels.connection_power_kva = *cp;
        }
        if (bad) {
            if (diagnostics)
                diagnostics->push_back({std::string(fields[0]),
                                        "labels line " + std::to_string(ln + 1) +
                                            ": invalid kVA value, row skipped"});
            continue;
        }
        out.emplace_back(std::string(fields[0]), labels);
    }
    std::unordered_set<std::string> seen;
    for (const auto& [id, l] : out) {
        if (!seen.insert(id).second)
            throw std::runtime_error("labels file: duplicate profile_id '" + id + "'");
    }
    return out;
}

void write_labels(const std::vector<std::pair<std::string, ProfileLabels>>& labels,
                  const std::string& path) {
    std::string out = "profile_id,has_hp,has_ev,pv_inverter_kva,connection_power_kva\n";
    for (const auto& [id, l] : labels) {
        out += id;
        out += l.has_hp ? ",1," : ",0,";
        out += l.has_ev ? "1," : "0,";
        if (l.pv_inverter_kva) out += format_double(*l.pv_inverter_kva);
        out += ',';
        if (l.connection_power_kva) out += format_double(*l.connection_power_kva);
        out += '\n';
    }
    write_text_file(path, out);
}

IngestResult ingest_profiles(const std::string& profiles_path, const std::string& labels_path,
                             const IngestConfig& config) {
    IngestResult result;

    std::unordered_map<std::string, ProfileLabels> label_map;
    for (auto& [id, labels] : read_labels(labels_path, &result.diagnostics)) {
        label_map.emplace(id, labels);
    }

    const std::string text = read_text_file(profiles_path);
    std::unordered_map<std::string, std::vector<TimedReading>> by_profile;
    std::vector<std::string> order;

    const auto lines = split_lines(text);
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        const auto fields = split_fields(lines[ln], config.delimiter);
        if (ln == 0 && !fields.empty() && fields[0] == "profile_id") continue;
        if (fields.size() != 3) {
            result.diagnostics.push_back({"", "line " + std::to_string(ln + 1) +
                                                  ": expected 3 fields, got " +
                                                  std::to_string(fields.size()) + ", skipped"});
            continue;
        }
        const auto power = parse_double(fields[2]);
        if (!power || !std::isfinite(*power)) {
            result.diagnostics.push_back(
                {std::string(fields[0]),
                 "line " + std::to_string(ln + 1) + ": bad power value, skipped"});
            continue;
        }
        TimedReading reading;
        try {
            reading = parse_local_timestamp(fields[1], static_cast<float>(*power));
        } catch (const std::exception& e) {
            result.diagnostics.push_back(
                {std::string(fields[0]),
                 "line " + std::to_string(ln + 1) + ": " + e.what() + ", skipped"});
            continue;
        }
        if (reading.year != config.year) {
            result.diagnostics.push_back(
                {std::string(fields[0]), "line " + std::to_string(ln + 1) + ": year " +
                                             std::to_string(reading.year) +
                                             " outside declared year, skipped"});
            continue;
        }
        std::string id(fields[0]);
        auto [it, inserted] = by_profile.try_emplace(std::move(id));
        if (inserted) order.push_back(it->first);
        it->second.push_back(reading);
    }

    std::vector<Profile> profiles;
    profiles.reserve(order.size());
    for (const std::string& id : order) {
        std::vector<std::string> notes;
        std::vector<float> series =
            normalize_dst(by_profile[id], config.year, config.timezone, &notes);
        std::string reason;
        if (!fill_gaps(series, config.max_gap_quarters, &notes, &reason)) {
            result.rejected.push_back({id, reason});
            continue;
        }
        for (auto& note : notes) result.diagnostics.push_back({id, std::move(note)});
        Profile p;
        p.id = id;
        p.power = std::move(series);
        if (auto it = label_map.find(id); it != label_map.end()) {
            p.labels = it->second;
        } else {
            result.diagnostics.push_back({id, "no labels row, defaults used"});
        }
        profiles.push_back(std::move(p));
    }

    result.set = ProfileSet(std::move(profiles), config.year, config.timezone);
    return result;
}

void export_profiles(const ProfileSet& set, const std::string& profiles_path,
                     const std::string& labels_path) {
    std::ofstream out(profiles_path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write file: " + profiles_path);
    out << "profile_id,timestamp,power_kw\n";
    const int year = set.year();
    std::string buf;
    for (std::size_t i = 0; i < set.size(); ++i) {
        const Profile& p = set.at(i);
        buf.clear();
        buf.reserve(p.power.size() * 40);
        for (std::size_t q = 0; q < p.power.size(); ++q) {
            buf += p.id;
            buf += ',';
            buf += format_local_timestamp(year, static_cast<int>(q) / kQuartersPerDay,
                                          static_cast<int>(q) % kQuartersPerDay);
            buf += ',';
            buf += format_float(p.power[q]);
            buf += '\n';
        }
        out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    }
    if (!out) throw std::runtime_error("short write: " + profiles_path);

    std::vector<std::pair<std::string, ProfileLabels>> labels;
    labels.reserve(set.size());
    for (std::size_t i = 0; i < set.size(); ++i) labels.emplace_back(set.at(i).id, set.at(i).labels);
    write_labels(labels, labels_path);
}

ProfileSet merge_profile_sets(const std::vector<const ProfileSet*>& sets) {
    if (sets.empty()) throw std::invalid_argument("merge: no sets");
    std::vector<Profile> all;
    for (const ProfileSet* s : sets) {
        if (s->year() != sets[0]->year() || s->timezone() != sets[0]->timezone())
            throw std::invalid_argument("merge: sets disagree on year/timezone");
        for (std::size_t i = 0; i < s->size(); ++i) all.push_back(s->at(i));
    }
    return ProfileSet(std::move(all), sets[0]->year(), sets[0]->timezone());
}

}  // namespace feedersim
