#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "realroots/core/numeric.hpp"

namespace realroots::report {

/// Everything a run depends on. Serialises to JSON and back unchanged.
struct ExperimentConfig {
  std::string command;                // torus | group | verify
  std::string target;                 // verify: kac | mixed2d | su2-fform | torus2 | equi
  std::vector<std::string> supports;  // torus and torus-based verify targets
  std::string system;                 // root system code, e.g. A1
  std::string spectrum;               // spectrum shorthand
  double ball_r = 0.0;                // ball spectrum radius (Killing); 0 = unset
  int ball_m = 0;                     // ball spectrum dilation
  int limit = 0;                      // torus: dimension of the limit constant; group: 1 = limit table
  int m = 0;                          // verify kac: segment half-width
  std::size_t samples = 0;
  std::optional<std::uint64_t> seed;
  std::string method = "auto";
  std::string metric = "killing";     // killing | unit
  std::string region = "half";        // equi: half | quarter | whole
  int pairs = 5;                      // mixed2d: number of random ellipse pairs
  std::string format = "md";
  std::string out;
  std::string manifest;               // verify: path prefix for <prefix>.jsonl and <prefix>.csv
  double tolerance = 1e-9;
  bool timing = true;                 // false zeroes the wall time so reruns are bit-identical

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

inline nlohmann::json to_json(const ExperimentConfig& c) {
  nlohmann::json j = {{"command", c.command}, {"target", c.target},   {"supports", c.supports},
                      {"system", c.system},   {"spectrum", c.spectrum}, {"ball_r", c.ball_r},
                      {"ball_m", c.ball_m},   {"limit", c.limit},     {"m", c.m},
                      {"samples", c.samples}, {"method", c.method},   {"metric", c.metric},
                      {"region", c.region},   {"pairs", c.pairs},     {"format", c.format},
                      {"out", c.out},         {"manifest", c.manifest}, {"tolerance", c.tolerance},
                      {"timing", c.timing}};
  j["seed"] = c.seed ? nlohmann::json(*c.seed) : nlohmann::json(nullptr);
  return j;
}

inline ExperimentConfig config_from_json(const nlohmann::json& j) {
  static const std::vector<std::string> known = {"command", "target",  "supports", "system", "spectrum", "ball_r",
                                                 "ball_m",  "limit",   "m",        "samples", "seed",    "method",
                                                 "metric",  "region",  "pairs",    "format", "out",      "manifest",
                                                 "tolerance", "timing"};
  if (!j.is_object()) throw invalid_input("config must be a JSON object");
  for (const auto& [key, value] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end()) throw invalid_input("unknown config key '" + key + "'");
  ExperimentConfig c;
  try {
    c.command = j.value("command", c.command);
    c.target = j.value("target", c.target);
    c.supports = j.value("supports", c.supports);
    c.system = j.value("system", c.system);
    c.spectrum = j.value("spectrum", c.spectrum);
    c.ball_r = j.value("ball_r", c.ball_r);
    c.ball_m = j.value("ball_m", c.ball_m);
    c.limit = j.value("limit", c.limit);
    c.m = j.value("m", c.m);
    c.samples = j.value("samples", c.samples);
    if (j.contains("seed") && !j["seed"].is_null()) c.seed = j["seed"].get<std::uint64_t>();
    c.method = j.value("method", c.method);
    c.metric = j.value("metric", c.metric);
    c.region = j.value("region", c.region);
    c.pairs = j.value("pairs", c.pairs);
    c.format = j.value("format", c.format);
    c.out = j.value("out", c.out);
    c.manifest = j.value("manifest", c.manifest);
    c.tolerance = j.value("tolerance", c.tolerance);
    c.timing = j.value("timing", c.timing);
  } catch (const nlohmann::json::exception& e) {
    throw invalid_input(std::string("bad config value: ") + e.what());
  }
  return c;
}

inline ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot read config file " + path);
  try {
    return config_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw invalid_input(std::string("config is not valid JSON: ") + e.what());
  }
}

/// Sample counts accept integer or scientific notation ("2000", "1e6").
inline std::size_t parse_samples(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (...) {
    throw invalid_input("bad sample count '" + s + "'");
  }
  if (used != s.size() || !(v >= 1.0) || v != std::floor(v) || v > 1e12) throw invalid_input("bad sample count '" + s + "'");
  return static_cast<std::size_t>(v);
}

/// "r=1,m=4" (either order) for ball spectra.
inline std::pair<double, int> parse_ball_spectrum(const std::string& s) {
  double r = -1.0;
  int m = -1;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw invalid_input("bad ball spectrum '" + s + "' (expected r=..,m=..)");
    const std::string key = item.substr(0, eq), val = item.substr(eq + 1);
    try {
      std::size_t used = 0;
      if (key == "r") {
        r = std::stod(val, &used);
      } else if (key == "m") {
        m = std::stoi(val, &used);
      } else {
        throw invalid_input("");
      }
      if (used != val.size()) throw invalid_input("");
    } catch (...) {
      throw invalid_input("bad ball spectrum '" + s + "' (expected r=..,m=..)");
    }
  }
  if (r <= 0.0 || m < 1) throw invalid_input("bad ball spectrum '" + s + "': need r > 0 and m >= 1");
  return {r, m};
}

}  // namespace realroots::report
