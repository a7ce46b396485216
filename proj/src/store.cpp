#include "feedersim/store.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <ctime>
#include <filesystem>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "feedersim/csvio.hpp"
#include "feedersim/ingest.hpp"

namespace feedersim {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string join(const std::string& dir, const char* name) {
    return (fs::path(dir) / name).string();
}

}  // namespace

std::uint64_t fnv1a64(std::span<const char> bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (char c : bytes) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string text_digest(const std::string& text) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                  static_cast<unsigned long long>(fnv1a64(text)));
    return buf;
}

std::string file_digest(const std::string& path) { return text_digest(read_text_file(path)); }

void write_store(const std::string& dir, const ProfileSet& set, const WeatherSeries& weather) {
    if (set.empty()) throw std::invalid_argument("refusing to write an empty store");
    if (weather.year != set.year()) {
        throw std::invalid_argument("weather year does not match profile year");
    }
    weather.validate();
    fs::create_directories(dir);

    json ids = json::array();
    for (std::size_t i = 0; i < set.size(); ++i) ids.push_back(set.at(i).id);
    const json meta{{"format", "feedersim-store"},
                    {"version", kStoreFormatVersion},
                    {"year", set.year()},
                    {"timezone", set.timezone()},
                    {"profiles", set.size()},
                    {"quarters", set.quarters()},
                    {"ids", ids}};
    write_text_file(join(dir, "meta.json"), meta.dump(2) + "\n");

    std::string power;
    power.reserve(set.size() * static_cast<std::size_t>(set.quarters()) * sizeof(float));
    for (std::size_t i = 0; i < set.size(); ++i) {
        const std::vector<float>& row = set.at(i).power;
        power.append(reinterpret_cast<const char*>(row.data()), row.size() * sizeof(float));
    }
    write_text_file(join(dir, "power.f32"), power);

    std::vector<std::pair<std::string, ProfileLabels>> labels;
    labels.reserve(set.size());
    for (std::size_t i = 0; i < set.size(); ++i) labels.emplace_back(set.at(i).id, set.at(i).labels);
    write_labels(labels, join(dir, "labels.csv"));

    export_weather(weather, join(dir, "weather.csv"));

    json digests;
    for (const char* name : {"meta.json", "power.f32", "labels.csv", "weather.csv"}) {
        digests[name] = file_digest(join(dir, name));
    }
    const json manifest{{"format", "feedersim-store"},
                        {"version", kStoreFormatVersion},
                        {"tool_version", kToolVersion},
                        {"files", digests}};
    write_text_file(join(dir, "manifest.json"), manifest.dump(2) + "\n");
}

Store read_store(const std::string& dir) {
    const json meta = json::parse(read_text_file(join(dir, "meta.json")));
    if (meta.at("format").get<std::string>() != "feedersim-store") {
        throw std::runtime_error(dir + ": not a profile store");
    }
    if (meta.at("version").get<int>() != kStoreFormatVersion) {
        throw std::runtime_error(dir + ": unsupported store version");
    }
    const int year = meta.at("year").get<int>();
    const std::string timezone = meta.at("timezone").get<std::string>();
    const std::size_t n_profiles = meta.at("profiles").get<std::size_t>();
    const std::size_t n_quarters = meta.at("quarters").get<std::size_t>();
    if (n_quarters != static_cast<std::size_t>(quarters_in_year(year))) {
        throw std::runtime_error(dir + ": quarter count does not match the year");
    }
    const json& ids = meta.at("ids");
    if (ids.size() != n_profiles) {
        throw std::runtime_error(dir + ": id list does not match profile count");
    }

    const std::string power = read_text_file(join(dir, "power.f32"));
    if (power.size() != n_profiles * n_quarters * sizeof(float)) {
        throw std::runtime_error(dir + ": power matrix has the wrong size");
    }

    std::vector<IngestDiagnostic> label_diags;
    const auto label_rows = read_labels(join(dir, "labels.csv"), &label_diags);
    std::map<std::string, ProfileLabels> label_map;
    for (const auto& [id, labels] : label_rows) label_map[id] = labels;

    std::vector<Profile> profiles;
    profiles.reserve(n_profiles);
    const char* cursor = power.data();
    for (std::size_t i = 0; i < n_profiles; ++i) {
        Profile p;
        p.id = ids[i].get<std::string>();
        p.power.resize(n_quarters);
        std::memcpy(p.power.data(), cursor, n_quarters * sizeof(float));
        cursor += n_quarters * sizeof(float);
        if (const auto it = label_map.find(p.id); it != label_map.end()) p.labels = it->second;
        profiles.push_back(std::move(p));
    }

    Store store{ProfileSet(std::move(profiles), year, timezone),
                ingest_weather(join(dir, "weather.csv"), year)};
    return store;
}

std::string RunManifest::utc_timestamp() {
    std::time_t t = std::time(nullptr);
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
        t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
    }
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[40];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ", tm.tm_year + 1900,
                  tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
    return buf;
}

std::string RunManifest::to_json() const {
    json inputs;
    for (const auto& [path, digest] : input_digests) inputs[path] = digest;
    json outputs;
    for (const auto& [path, digest] : output_digests) outputs[path] = digest;
    const json j{{"tool", kToolName},
                 {"tool_version", tool_version},
                 {"command", command},
                 {"seed", seed},
                 {"config_digest", config_digest},
                 {"inputs", inputs.is_null() ? json::object() : inputs},
                 {"outputs", outputs.is_null() ? json::object() : outputs},
                 {"created_utc", created_utc}};
    return j.dump(2) + "\n";
}

void RunManifest::save(const std::string& path) const { write_text_file(path, to_json()); }

}  // namespace feedersim
