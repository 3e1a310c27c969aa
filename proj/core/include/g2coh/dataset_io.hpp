#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "g2coh/sweep_analysis.hpp"

namespace g2coh {

/// One CSV row: axis_name, axis_value, g2, num, den, absJ1..absJ6, flags.
struct DatasetRow {
  double axis_value = 0.0;
  double g2 = 0.0;
  double numerator = 0.0;
  double denominator = 0.0;
  /// NaN where an overlap does not exist for the curve.
  std::array<double, 6> abs_j{};
  std::string flags;
};

inline constexpr std::string_view kCsvHeader =
    "axis_name,axis_value,g2,num,den,absJ1,absJ2,absJ3,absJ4,absJ5,absJ6,flags";

/// Shortest decimal representation that parses back to the same double.
/// NaN is written as an empty field.
std::string format_double(double value);

DatasetRow row_from_record(const SweepRecord& record);
std::vector<DatasetRow> rows_from_records(const std::vector<SweepRecord>& records);

std::string to_csv(std::string_view axis_name, const std::vector<DatasetRow>& rows);

/// Parses a CSV produced by to_csv (round-trip helper for tests and tools).
std::vector<DatasetRow> parse_csv(std::string_view text, std::string* axis_name = nullptr);

void write_text_file(const std::filesystem::path& path, std::string_view content);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace g2coh
