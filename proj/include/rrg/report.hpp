#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace rrg {

/// Rounds x toward zero at `digits` decimal places. Reported densities are
/// lower bounds, so they are never rounded up.
double truncate_decimals(double x, int digits);

/// Fixed-point text of truncate_decimals(x, digits).
std::string format_truncated(double x, int digits);

/// %.12g; for diagnostics that are not bounds.
std::string format_sig12(double x);

enum class OutputFormat { Pretty, Csv, Json };

std::optional<OutputFormat> parse_format(std::string_view name);

/// One per-degree result line of `alpha` and `table`.
struct OutputRecord {
  int d = 0;
  double alpha = 0.0;
  double alpha_hat = 0.0;
  double gw_margin = 0.0;
  std::optional<double> elapsed_ms;
};

inline constexpr std::string_view kRecordCsvHeader = "d,alpha,alpha_hat,gw_margin";

/// Header matching to_csv for a record with or without timing.
std::string record_csv_header(bool with_timing);
std::string to_csv(const OutputRecord& r, int precision);
std::string to_json(const OutputRecord& r, int precision);

/// Inverse of to_csv / to_json; throws DomainError on malformed input.
OutputRecord record_from_csv(std::string_view line);
OutputRecord record_from_json(std::string_view line);

}  // namespace rrg
