#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "realroots/core/numeric.hpp"
#include "realroots/roots/metric.hpp"
#include "realroots/roots/root_system.hpp"
#include "realroots/roots/weyl.hpp"

namespace realroots {

struct RepEntry {
  IntVector weight;
  int multiplicity = 1;
  RealityType type = RealityType::real;

  friend bool operator==(const RepEntry&, const RepEntry&) = default;
};

/// Highest weights (with multiplicities) of the complexification of a real
/// representation of a compact simple group.
class RepEnsemble {
 public:
  RepEnsemble() = default;

  RepEnsemble(RootSystem rs, const std::vector<std::pair<IntVector, int>>& weights, bool flattened = false)
      : rs_(std::move(rs)), flattened_(flattened) {
    std::map<IntVector, int> merged;
    for (const auto& [w, mult] : weights) {
      require_dominant(rs_, w, "RepEnsemble");
      if (mult < 1) throw invalid_input("RepEnsemble: multiplicities must be positive");
      merged[w] += mult;
    }
    if (merged.empty()) throw invalid_input("RepEnsemble: empty spectrum");
    for (const auto& [w, mult] : merged) entries_.push_back({w, flattened ? 1 : mult, reality_type(rs_, w)});
  }

  const RootSystem& system() const { return rs_; }
  const std::vector<RepEntry>& entries() const { return entries_; }
  bool flattened() const { return flattened_; }

  std::vector<IntVector> spectrum() const {
    std::vector<IntVector> out;
    for (const auto& e : entries_) out.push_back(e.weight);
    return out;
  }

  /// Closed under lambda -> lambda', as required for the spectrum of a real representation.
  bool is_symmetric() const {
    std::set<IntVector> s;
    for (const auto& e : entries_) s.insert(e.weight);
    for (const auto& e : entries_)
      if (!s.count(symmetric_partner(rs_, e.weight))) return false;
    return true;
  }

  bool is_trivial() const { return entries_.size() == 1 && std::all_of(entries_[0].weight.begin(), entries_[0].weight.end(), [](int x) { return x == 0; }); }

  friend bool operator==(const RepEnsemble& a, const RepEnsemble& b) {
    return a.rs_.code == b.rs_.code && a.entries_ == b.entries_ && a.flattened_ == b.flattened_;
  }

  friend RepEnsemble flatten(const RepEnsemble& pi);

 private:
  RootSystem rs_;
  std::vector<RepEntry> entries_;
  bool flattened_ = false;
};

/// Same spectrum, all multiplicities one.
inline RepEnsemble flatten(const RepEnsemble& pi) {
  RepEnsemble out = pi;
  for (auto& e : out.entries_) e.multiplicity = 1;
  out.flattened_ = true;
  return out;
}

/// pi_m(B): all dominant weights in the Killing ball of radius m r.
inline RepEnsemble ball_spectrum(const RootSystem& rs, double r, int m) {
  if (r < 0 || m < 0) throw invalid_input("ball_spectrum: r and m must be non-negative");
  std::vector<std::pair<IntVector, int>> w;
  for (auto& lambda : dominant_points_in_ball(killing_metric(rs), r * m)) w.emplace_back(lambda, 1);
  return RepEnsemble(rs, w);
}

inline nlohmann::json to_json(const RepEnsemble& pi) {
  nlohmann::json weights = nlohmann::json::array();
  for (const auto& e : pi.entries())
    weights.push_back({{"coords", e.weight}, {"mult", e.multiplicity}, {"type", to_string(e.type)}});
  return {{"system", pi.system().code}, {"weights", weights}, {"flattened", pi.flattened()}};
}

inline RepEnsemble rep_ensemble_from_json(const nlohmann::json& j) {
  RootSystem rs = root_system_from_code(j.at("system").get<std::string>());
  std::vector<std::pair<IntVector, int>> w;
  for (const auto& e : j.at("weights")) w.emplace_back(e.at("coords").get<IntVector>(), e.value("mult", 1));
  return RepEnsemble(rs, w, j.value("flattened", false));
}

/// Spectrum shorthands: "adjoint", "trivial", "ball:r:m", "ball-spectrum:A1:r:m",
/// a JSON object, or explicit weights ("0,1,2" in rank one, "1,0;0,1" otherwise).
inline RepEnsemble parse_spectrum(const RootSystem& rs, const std::string& spec) {
  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
  };
  auto number = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      double v = std::stod(s, &used);
      if (used != s.size()) throw invalid_input("");
      return v;
    } catch (...) {
      throw invalid_input("bad spectrum spec: " + spec);
    }
  };
  auto integer = [&](const std::string& s) {
    double v = number(s);
    if (v != std::floor(v)) throw invalid_input("bad spectrum spec: " + spec);
    return static_cast<int>(v);
  };
  if (spec.empty()) throw invalid_input("empty spectrum spec");
  if (spec.front() == '{') {
    try {
      return rep_ensemble_from_json(nlohmann::json::parse(spec));
    } catch (const nlohmann::json::exception& e) {
      throw invalid_input(std::string("bad spectrum JSON: ") + e.what());
    }
  }
  if (spec == "adjoint") return RepEnsemble(rs, {{rs.highest_root, 1}});
  if (spec == "trivial") return RepEnsemble(rs, {{IntVector(static_cast<std::size_t>(rs.rank), 0), 1}});
  auto fields = split(spec, ':');
  if (fields.size() == 3 && fields[0] == "ball") return ball_spectrum(rs, number(fields[1]), integer(fields[2]));
  if (fields.size() == 4 && fields[0] == "ball-spectrum")
    return ball_spectrum(root_system_from_code(fields[1]), number(fields[2]), integer(fields[3]));
  std::vector<std::pair<IntVector, int>> weights;
  if (rs.rank == 1) {
    for (auto& part : split(spec, spec.find(';') != std::string::npos ? ';' : ',')) weights.push_back({{integer(part)}, 1});
  } else {
    for (auto& part : split(spec, ';')) {
      IntVector w;
      for (auto& c : split(part, ',')) w.push_back(integer(c));
      if (w.size() != static_cast<std::size_t>(rs.rank)) throw invalid_input("bad spectrum spec: " + spec);
      weights.push_back({w, 1});
    }
  }
  return RepEnsemble(rs, weights);
}

}  // namespace realroots
