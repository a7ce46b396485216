#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace feedersim {

/// Splits one delimited line. No quoting; the formats here never need it.
std::vector<std::string_view> split_fields(std::string_view line, char delimiter = ',');

/// Locale-independent numeric parsing (std::from_chars). Whole field must parse.
std::optional<double> parse_double(std::string_view field);
std::optional<std::int64_t> parse_int(std::string_view field);

/// Shortest decimal form that round-trips a float32 ("%.9g").
std::string format_float(float v);
/// "%.9g"; used for derived statistics in delimited outputs.
std::string format_double(double v);
/// Round-trip exact ("%.17g"); for persistence, not reports.
std::string format_double_exact(double v);
/// Fixed-precision form for figure coordinates.
std::string format_fixed(double v, int digits);

/// Reads a whole text file, failing loudly when the file is missing.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

/// Iterates non-empty lines of `text`, tolerating trailing '\r'.
std::vector<std::string_view> split_lines(std::string_view text);

}  // namespace feedersim
