#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "feedersim/profile.hpp"

namespace feedersim {

/// One parsed meter reading in local time.
struct TimedReading {
    std::int32_t year = 0;
    std::int32_t day = 0;   // 0-based day of year
    std::int32_t slot = 0;  // quarter of day, 0..95
    float power_kw = 0.0f;
};

/// Parses "YYYY-MM-DD[T ]HH:MM[:SS]" (local, no offset). Minutes must sit on
/// a quarter-hour boundary. Throws std::invalid_argument on malformed input.
TimedReading parse_local_timestamp(std::string_view stamp, float power_kw = 0.0f);

std::string format_local_timestamp(int year, int day, int slot);

/// Places readings on the year's quarter-hour grid and applies the DST fixes:
/// the spring-forward day's missing hour is imputed by copying the previous
/// hour, the fall-back day's repeated hour keeps the first occurrence and
/// drops the second. Slots nothing maps to are NaN; gap filling is a separate
/// concern (fill_gaps). Throws if readings span more than the declared year.
std::vector<float> normalize_dst(const std::vector<TimedReading>& readings, int year,
                                 const std::string& timezone,
                                 std::vector<std::string>* diagnostics = nullptr);

/// Linear interpolation across NaN runs of at most max_gap quarters; boundary
/// runs take the nearest observed value. Returns false (series unusable) for
/// longer runs or an all-NaN series.
bool fill_gaps(std::vector<float>& series, int max_gap, std::vector<std::string>* diagnostics,
               std::string* reject_reason);

struct IngestConfig {
    int year = 2022;
    std::string timezone = "Europe/Brussels";
    int max_gap_quarters = 96;
    char delimiter = ',';
};

struct IngestDiagnostic {
    std::string profile_id;  // empty for file-level notes
    std::string message;
};

struct IngestRejection {
    std::string profile_id;
    std::string reason;
};

struct IngestResult {
    ProfileSet set;
    std::vector<IngestDiagnostic> diagnostics;
    std::vector<IngestRejection> rejected;
};

/// Reads (profile_id, timestamp, power_kw) rows plus the labels file and
/// returns the validated set. Malformed rows are skipped with a diagnostic;
/// profiles with gaps beyond the configured limit are rejected.
IngestResult ingest_profiles(const std::string& profiles_path, const std::string& labels_path,
                             const IngestConfig& config);

/// Inverse of ingest_profiles: same delimited formats, one row per quarter.
void export_profiles(const ProfileSet& set, const std::string& profiles_path,
                     const std::string& labels_path);

std::vector<std::pair<std::string, ProfileLabels>> read_labels(
    const std::string& path, std::vector<IngestDiagnostic>* diagnostics);
void write_labels(const std::vector<std::pair<std::string, ProfileLabels>>& labels,
                  const std::string& path);

/// Concatenates sets sharing year/timezone; duplicate ids fail validation.
ProfileSet merge_profile_sets(const std::vector<const ProfileSet*>& sets);

}  // namespace feedersim
