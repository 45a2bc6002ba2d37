#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ruehrkit {

/// Ordered key/value parameters of one check instance.
using Params = std::vector<std::pair<std::string, std::string>>;

/// One verified identity instance. lhs/rhs hold serialized Rationals
/// ("num/den") or Polynomials (JSON arrays of rational strings); property
/// checks that have no exact sides carry a decimal rendering instead.
struct CheckReport {
  std::string check_name;
  Params params;
  std::string lhs;
  std::string rhs;
  bool equal = false;
  std::int64_t elapsed_ms = 0;

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

enum class ReportFormat { Json, Csv, Text };

/// Single-line JSON object with fields check_name, params, lhs, rhs, equal,
/// elapsed_ms (in that order).
std::string to_json_line(const CheckReport& r);
/// Inverse of to_json_line. Throws std::invalid_argument on malformed input.
CheckReport parse_json_line(std::string_view line);

std::string csv_header();
/// params are flattened to "k1=v1;k2=v2". Fields are quoted per RFC 4180.
std::string to_csv_row(const CheckReport& r);

std::string to_text_line(const CheckReport& r);

/// Orders by check_name, then parameter values compared numerically when
/// both parse as rationals and lexicographically otherwise.
bool report_less(const CheckReport& a, const CheckReport& b);

/// Stable sort by report_less.
void sort_reports(std::vector<CheckReport>& reports);

}  // namespace ruehrkit
