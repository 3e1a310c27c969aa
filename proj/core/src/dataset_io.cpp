#include "g2coh/dataset_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <system_error>

#include "g2coh/errors.hpp"

namespace g2coh {

std::string format_double(double value) {
  if (std::isnan(value)) return {};
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return {buffer, result.ptr};
}

namespace {

double parse_double(std::string_view field) {
  if (field.empty()) return std::numeric_limits<double>::quiet_NaN();
  if (field == "inf") return std::numeric_limits<double>::infinity();
  if (field == "-inf") return -std::numeric_limits<double>::infinity();
  double value = 0.0;
  const auto result = std::from_chars(field.data(), field.data() + field.size(), value);
  if (result.ec != std::errc{} || result.ptr != field.data() + field.size()) {
    throw ConfigError("csv: bad number '" + std::string(field) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t begin = 0;
  for (;;) {
    const std::size_t comma = line.find(',', begin);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(begin));
      return out;
    }
    out.push_back(line.substr(begin, comma - begin));
    begin = comma + 1;
  }
}

}  // namespace

DatasetRow row_from_record(const SweepRecord& record) {
  DatasetRow row;
  row.axis_value = record.axis_value;
  row.abs_j = record.abs_j;
  if (record.failure) {
    row.g2 = row.numerator = row.denominator = std::numeric_limits<double>::quiet_NaN();
    row.flags = "Failed";
    return row;
  }
  row.g2 = record.g2.value;
  row.numerator = record.g2.numerator;
  row.denominator = record.g2.denominator;
  row.flags = flags_to_string(record.g2.flags);
  return row;
}

std::vector<DatasetRow> rows_from_records(const std::vector<SweepRecord>& records) {
  std::vector<DatasetRow> rows;
  rows.reserve(records.size());
  for (const auto& r : records) rows.push_back(row_from_record(r));
  return rows;
}

std::string to_csv(std::string_view axis_name, const std::vector<DatasetRow>& rows) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& row : rows) {
    out += axis_name;
    for (double v : {row.axis_value, row.g2, row.numerator, row.denominator}) {
      out += ',';
      out += format_double(v);
    }
    for (double v : row.abs_j) {
      out += ',';
      out += format_double(v);
    }
    out += ',';
    out += row.flags;
    out += '\n';
  }
  return out;
}

std::vector<DatasetRow> parse_csv(std::string_view text, std::string* axis_name) {
  std::vector<DatasetRow> rows;
  std::size_t begin = 0;
  bool header = true;
  while (begin < text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(begin, end - begin);
    begin = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (header) {
      if (line != kCsvHeader) throw ConfigError("csv: unexpected header");
      header = false;
      continue;
    }
    const auto fields = split(line);
    if (fields.size() != 12) throw ConfigError("csv: expected 12 fields per row");
    if (axis_name != nullptr) *axis_name = std::string(fields[0]);
    DatasetRow row;
    row.axis_value = parse_double(fields[1]);
    row.g2 = parse_double(fields[2]);
    row.numerator = parse_double(fields[3]);
    row.denominator = parse_double(fields[4]);
    for (std::size_t k = 0; k < 6; ++k) row.abs_j[k] = parse_double(fields[5 + k]);
    row.flags = std::string(fields[11]);
    rows.push_back(std::move(row));
  }
  if (header) throw ConfigError("csv: missing header");
  return rows;
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw ConfigError("cannot open '" + path.string() + "' for writing");
  file.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!file) throw ConfigError("write to '" + path.string() + "' failed");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ConfigError("cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

}  // namespace g2coh
