#include "rrg/report.hpp"

#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <json.hpp>

#include "rrg/errors.hpp"

namespace rrg {
namespace {

double parse_double(std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw DomainError(fmt::format("not a number: '{}'", text));
  }
  return value;
}

int parse_int(std::string_view text) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw DomainError(fmt::format("not an integer: '{}'", text));
  }
  return value;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    parts.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

double truncate_decimals(double x, int digits) {
  const long double scale = std::pow(10.0L, digits);
  const long double units = std::trunc(static_cast<long double>(x) * scale);
  // integer / power of ten in double: the nearest double to the decimal
  return static_cast<double>(units) / static_cast<double>(scale);
}

std::string format_truncated(double x, int digits) {
  return fmt::format("{:.{}f}", truncate_decimals(x, digits), digits);
}

std::string format_sig12(double x) { return fmt::format("{:.12g}", x); }

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "pretty") return OutputFormat::Pretty;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  return std::nullopt;
}

std::string record_csv_header(bool with_timing) {
  return with_timing ? std::string(kRecordCsvHeader) + ",elapsed_ms" : std::string(kRecordCsvHeader);
}

std::string to_csv(const OutputRecord& r, int precision) {
  std::string line = fmt::format("{},{},{},{}", r.d, format_truncated(r.alpha, precision),
                                 format_truncated(r.alpha_hat, precision), format_sig12(r.gw_margin));
  if (r.elapsed_ms) line += fmt::format(",{:.3f}", *r.elapsed_ms);
  return line;
}

std::string to_json(const OutputRecord& r, int precision) {
  // Numbers go through the same text as the CSV form so both carry
  // identical values.
  nlohmann::ordered_json j;
  j["d"] = r.d;
  j["alpha"] = parse_double(format_truncated(r.alpha, precision));
  j["alpha_hat"] = parse_double(format_truncated(r.alpha_hat, precision));
  j["gw_margin"] = parse_double(format_sig12(r.gw_margin));
  if (r.elapsed_ms) j["elapsed_ms"] = parse_double(fmt::format("{:.3f}", *r.elapsed_ms));
  return j.dump();
}

OutputRecord record_from_csv(std::string_view line) {
  const auto fields = split(line, ',');
  if (fields.size() != 4 && fields.size() != 5) {
    throw DomainError(fmt::format("record line has {} fields: '{}'", fields.size(), line));
  }
  OutputRecord r;
  r.d = parse_int(fields[0]);
  r.alpha = parse_double(fields[1]);
  r.alpha_hat = parse_double(fields[2]);
  r.gw_margin = parse_double(fields[3]);
  if (fields.size() == 5) r.elapsed_ms = parse_double(fields[4]);
  return r;
}

OutputRecord record_from_json(std::string_view line) {
  try {
    const auto j = nlohmann::json::parse(line);
    OutputRecord r;
    r.d = j.at("d").get<int>();
    r.alpha = j.at("alpha").get<double>();
    r.alpha_hat = j.at("alpha_hat").get<double>();
    r.gw_margin = j.at("gw_margin").get<double>();
    if (j.contains("elapsed_ms")) r.elapsed_ms = j["elapsed_ms"].get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(fmt::format("malformed record JSON: {}", e.what()));
  }
}

}  // namespace rrg
