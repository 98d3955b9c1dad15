#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "realroots/core/numeric.hpp"
#include "realroots/core/version.hpp"

namespace realroots::report {

/// One reported number. result names what was computed and by which route;
/// normalization names the metric or character convention it depends on.
struct Row {
  std::string quantity;
  double value = 0.0;
  std::optional<double> std_error;
  std::optional<double> expected;
  std::optional<double> z;
  std::optional<bool> pass;
  std::string result;
  std::string normalization;
  std::string note;

  friend bool operator==(const Row&, const Row&) = default;
};

inline Row make_row(std::string quantity, double value) {
  Row r;
  r.quantity = std::move(quantity);
  r.value = value;
  return r;
}

struct Report {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  std::vector<Row> rows;
  std::vector<std::string> warnings;
  nlohmann::json data = nlohmann::json::object();
  std::string tool_version = version;
  double wall_time_s = 0.0;

  Row& add(Row r) {
    rows.push_back(std::move(r));
    return rows.back();
  }

  /// True if some row failed its check or sits more than 3 standard errors off.
  bool verification_failed() const {
    for (const auto& r : rows) {
      if (r.pass && !*r.pass) return true;
      if (r.z && std::abs(*r.z) > 3.0) return true;
    }
    return false;
  }

  friend bool operator==(const Report&, const Report&) = default;
};

inline nlohmann::json to_json(const Row& r) {
  nlohmann::json j = {{"quantity", r.quantity}, {"value", r.value}, {"result", r.result}, {"normalization", r.normalization}};
  if (r.std_error) j["std_error"] = *r.std_error;
  if (r.expected) j["expected"] = *r.expected;
  if (r.z) j["z"] = *r.z;
  if (r.pass) j["pass"] = *r.pass;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline Row row_from_json(const nlohmann::json& j) {
  Row r;
  r.quantity = j.at("quantity").get<std::string>();
  r.value = j.at("value").get<double>();
  r.result = j.at("result").get<std::string>();
  r.normalization = j.at("normalization").get<std::string>();
  if (j.contains("std_error")) r.std_error = j["std_error"].get<double>();
  if (j.contains("expected")) r.expected = j["expected"].get<double>();
  if (j.contains("z")) r.z = j["z"].get<double>();
  if (j.contains("pass")) r.pass = j["pass"].get<bool>();
  r.note = j.value("note", "");
  return r;
}

inline nlohmann::json to_json(const Report& rep) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : rep.rows) rows.push_back(to_json(r));
  return {{"tool", "realroots"},    {"version", rep.tool_version}, {"command", rep.command},
          {"inputs", rep.inputs},   {"rows", rows},                {"warnings", rep.warnings},
          {"data", rep.data},       {"wall_time_s", rep.wall_time_s}};
}

inline Report report_from_json(const nlohmann::json& j) {
  Report rep;
  rep.command = j.at("command").get<std::string>();
  rep.inputs = j.value("inputs", nlohmann::json::object());
  for (const auto& r : j.at("rows")) rep.rows.push_back(row_from_json(r));
  rep.warnings = j.value("warnings", std::vector<std::string>{});
  rep.data = j.value("data", nlohmann::json::object());
  rep.tool_version = j.value("version", std::string(version));
  rep.wall_time_s = j.value("wall_time_s", 0.0);
  return rep;
}

namespace detail {

inline std::string fmt(double x, int digits = 17) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

inline std::string fmt(const std::optional<double>& x, int digits = 17) { return x ? fmt(*x, digits) : ""; }

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace detail

/// Fixed columns: quantity,value,std_error,expected,z,pass,result,normalization,note.
inline std::string to_csv(const Report& rep) {
  std::ostringstream os;
  os << "quantity,value,std_error,expected,z,pass,result,normalization,note\n";
  for (const auto& r : rep.rows) {
    os << detail::csv_field(r.quantity) << ',' << detail::fmt(r.value) << ',' << detail::fmt(r.std_error) << ','
       << detail::fmt(r.expected) << ',' << detail::fmt(r.z) << ',' << (r.pass ? (*r.pass ? "true" : "false") : "")
       << ',' << detail::csv_field(r.result) << ',' << detail::csv_field(r.normalization) << ','
       << detail::csv_field(r.note) << '\n';
  }
  return os.str();
}

inline std::string to_markdown(const Report& rep) {
  std::ostringstream os;
  os << "# realroots " << rep.command << "\n\n";
  os << "Inputs: `" << rep.inputs.dump() << "`\n\n";
  os << "| quantity | value | std error | expected | z | check | result | normalization |\n";
  os << "|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : rep.rows) {
    os << "| " << r.quantity << " | " << detail::fmt(r.value, 12) << " | " << detail::fmt(r.std_error, 6) << " | "
       << detail::fmt(r.expected, 12) << " | " << detail::fmt(r.z, 4) << " | "
       << (r.pass ? (*r.pass ? "pass" : "FAIL") : "") << " | " << r.result << " | " << r.normalization << " |\n";
  }
  bool notes = false;
  for (const auto& r : rep.rows)
    if (!r.note.empty()) {
      if (!notes) os << "\nNotes:\n\n";
      notes = true;
      os << "- " << r.quantity << ": " << r.note << '\n';
    }
  if (!rep.warnings.empty()) {
    os << "\nWarnings:\n\n";
    for (const auto& w : rep.warnings) os << "- " << w << '\n';
  }
  os << "\nrealroots " << rep.tool_version << ", " << detail::fmt(rep.wall_time_s, 3) << " s\n";
  return os.str();
}

inline std::string emit(const Report& rep, const std::string& format) {
  if (format == "json") return to_json(rep).dump(2) + "\n";
  if (format == "csv") return to_csv(rep);
  if (format == "md") return to_markdown(rep);
  throw invalid_input("unknown format '" + format + "' (expected json, csv or md)");
}

}  // namespace realroots::report
