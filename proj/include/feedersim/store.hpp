#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "feedersim/profile.hpp"
#include "feedersim/weather.hpp"

namespace feedersim {

inline constexpr const char* kToolName = "feedersim";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kStoreFormatVersion = 1;

/// On-disk store layout under one directory:
///   meta.json    year, timezone, profile ids
///   power.f32    row-major float32 power matrix (profiles x quarters)
///   labels.csv   technology labels per profile id
///   weather.csv  hourly weather for the same year
///   manifest.json  digests of the files above
struct Store {
    ProfileSet profiles;
    WeatherSeries weather;
};

void write_store(const std::string& dir, const ProfileSet& set, const WeatherSeries& weather);
Store read_store(const std::string& dir);

std::uint64_t fnv1a64(std::span<const char> bytes);
std::string text_digest(const std::string& text);
std::string file_digest(const std::string& path);

/// Reproducibility record written next to every command's outputs. The
/// timestamp honours SOURCE_DATE_EPOCH so archived runs can be byte-stable.
struct RunManifest {
    std::string command;
    std::string tool_version = kToolVersion;
    std::uint64_t seed = 0;
    std::string config_digest;
    std::map<std::string, std::string> input_digests;
    std::map<std::string, std::string> output_digests;
    std::string created_utc;

    static std::string utc_timestamp();
    std::string to_json() const;
    void save(const std::string& path) const;
};

}  // namespace feedersim
