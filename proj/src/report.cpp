#include "ruehrkit/report.hpp"

#include "ruehrkit/exact_math.hpp"

#include <json.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace ruehrkit {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string flatten_params(const Params& params) {
  std::string out;
  for (const auto& [key, value] : params) {
    if (!out.empty()) out += ';';
    out += key;
    out += '=';
    out += value;
  }
  return out;
}

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::optional<Rational> try_rational(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

// -1, 0, 1
int compare_values(const std::string& a, const std::string& b) {
  if (a == b) return 0;
  const auto qa = try_rational(a);
  const auto qb = try_rational(b);
  if (qa && qb) return cmp(*qa, *qb) < 0 ? -1 : (cmp(*qa, *qb) > 0 ? 1 : 0);
  return a < b ? -1 : 1;
}

}  // namespace

std::string to_json_line(const CheckReport& r) {
  ordered_json params = ordered_json::object();
  for (const auto& [key, value] : r.params) params[key] = value;
  ordered_json j;
  j["check_name"] = r.check_name;
  j["params"] = std::move(params);
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["equal"] = r.equal;
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump();
}

CheckReport parse_json_line(std::string_view line) {
  try {
    const auto j = ordered_json::parse(line);
    CheckReport r;
    r.check_name = j.at("check_name").get<std::string>();
    for (const auto& [key, value] : j.at("params").items()) {
      r.params.emplace_back(key, value.get<std::string>());
    }
    r.lhs = j.at("lhs").get<std::string>();
    r.rhs = j.at("rhs").get<std::string>();
    r.equal = j.at("equal").get<bool>();
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report line: ") + e.what());
  }
}

std::string csv_header() { return "check_name,params,lhs,rhs,equal,elapsed_ms"; }

std::string to_csv_row(const CheckReport& r) {
  return csv_field(r.check_name) + ',' + csv_field(flatten_params(r.params)) + ',' + csv_field(r.lhs) + ',' +
         csv_field(r.rhs) + ',' + (r.equal ? "true" : "false") + ',' + std::to_string(r.elapsed_ms);
}

std::string to_text_line(const CheckReport& r) {
  std::string out = r.equal ? "PASS " : "FAIL ";
  out += r.check_name;
  out += " [";
  out += flatten_params(r.params);
  out += "] lhs=";
  out += r.lhs;
  out += " rhs=";
  out += r.rhs;
  return out;
}

bool report_less(const CheckReport& a, const CheckReport& b) {
  if (a.check_name != b.check_name) return a.check_name < b.check_name;
  const std::size_t n = std::min(a.params.size(), b.params.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.params[i].first != b.params[i].first) return a.params[i].first < b.params[i].first;
    const int c = compare_values(a.params[i].second, b.params[i].second);
    if (c != 0) return c < 0;
  }
  return a.params.size() < b.params.size();
}

void sort_reports(std::vector<CheckReport>& reports) { std::stable_sort(reports.begin(), reports.end(), report_less); }

}  // namespace ruehrkit
