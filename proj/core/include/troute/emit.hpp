#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "troute/sweep.hpp"

namespace troute {

enum class Format { CSV, JSON, SVG };

/// Shortest decimal that reads back to the same double (at most 17
/// significant digits).
std::string format_number(double v);

/// `#`-prefixed metadata lines, a column header, then one row per point.
std::string to_csv(const SweepTable& table);
/// {"metadata": {...}, "columns": {"<x>": [...], ...}}
std::string to_json(const SweepTable& table);
/// Static SVG 1.1 line plot, one polyline per quantity.
std::string to_svg(const SweepTable& table);

std::string render(const SweepTable& table, Format format);

/// Writes the rendered table; throws IoFailure when the file cannot be
/// written.
void emit(const SweepTable& table, Format format, const std::filesystem::path& path);

/// Infers the format from the file extension (.csv, .json, .svg).
Format format_from_path(const std::filesystem::path& path);

/// Reads back the output of to_csv. Metadata values stay as strings.
SweepTable parse_csv(std::string_view text);

}  // namespace troute
