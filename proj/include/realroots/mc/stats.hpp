#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>
#include <json.hpp>

#include "realroots/core/numeric.hpp"
#include "realroots/core/version.hpp"
#include "realroots/mc/laurent.hpp"
#include "realroots/mc/random.hpp"
#include "realroots/mc/zero_count.hpp"
#include "realroots/torus/torus_lab.hpp"

namespace realroots::mc {

struct SampleRecord {
  std::size_t index = 0;
  int count = 0;
  bool accepted = true;
  int flagged = 0;  // tangential zeros seen on the circle
};

struct ZeroCountStats {
  double mean = 0.0;
  double variance = 0.0;
  double std_error = 0.0;
  std::size_t sample_count = 0;  // accepted samples
  std::vector<int> counts;       // per accepted sample, in index order
  std::size_t discarded = 0;
  double discard_rate = 0.0;
};

inline ZeroCountStats summarize(const std::vector<SampleRecord>& records) {
  ZeroCountStats s;
  for (const auto& r : records) {
    if (r.accepted)
      s.counts.push_back(r.count);
    else
      ++s.discarded;
  }
  s.sample_count = s.counts.size();
  if (!records.empty()) s.discard_rate = static_cast<double>(s.discarded) / static_cast<double>(records.size());
  if (s.sample_count == 0) return s;
  double sum = 0.0;
  for (int c : s.counts) sum += c;
  s.mean = sum / static_cast<double>(s.sample_count);
  if (s.sample_count > 1) {
    double ss = 0.0;
    for (int c : s.counts) ss += (c - s.mean) * (c - s.mean);
    s.variance = ss / static_cast<double>(s.sample_count - 1);
  }
  s.std_error = std::sqrt(s.variance / static_cast<double>(s.sample_count));
  return s;
}

struct EnsembleRun {
  std::vector<SampleRecord> records;
  std::vector<std::vector<std::vector<double>>> zeros;  // per sample, when kept
  ZeroCountStats stats;
};

/// Zero counts of independent samples on T^1; sample i uses child_stream(seed, i).
inline EnsembleRun run_circle_ensemble(const Support& s, std::size_t samples, std::uint64_t seed,
                                       bool keep_zeros = false) {
  if (s.dim() != 1) throw dimension_mismatch("run_circle_ensemble: need a support in dimension one");
  if (samples == 0) throw invalid_input("run_circle_ensemble: need at least one sample");
  if (!is_centrally_symmetric(s)) throw invalid_input("run_circle_ensemble: support is not centrally symmetric");
  EnsembleRun run;
  run.records.resize(samples);
  if (keep_zeros) run.zeros.resize(samples);
  parallel_for(samples, [&](std::size_t i) {
    auto rng = child_stream(seed, i);
    const auto f = sample_real_laurent(s, rng);
    const auto z = count_zeros_circle(f);
    run.records[i] = {i, z.count, true, z.tangential};
    if (keep_zeros)
      for (double r : z.roots) run.zeros[i].push_back({r});
  });
  run.stats = summarize(run.records);
  return run;
}

/// Common zero counts of independent pairs (f, g) on T^2. Uncertified samples are
/// discarded and counted in the discard rate.
inline EnsembleRun run_torus2_ensemble(const Support& s1, const Support& s2, std::size_t samples, std::uint64_t seed,
                                       bool keep_zeros = false) {
  if (s1.dim() != 2 || s2.dim() != 2) throw dimension_mismatch("run_torus2_ensemble: need supports in dimension two");
  if (samples == 0) throw invalid_input("run_torus2_ensemble: need at least one sample");
  if (!is_centrally_symmetric(s1) || !is_centrally_symmetric(s2))
    throw invalid_input("run_torus2_ensemble: supports must be centrally symmetric");
  EnsembleRun run;
  run.records.resize(samples);
  if (keep_zeros) run.zeros.resize(samples);
  parallel_for(samples, [&](std::size_t i) {
    auto rng = child_stream(seed, i);
    const auto f = sample_real_laurent(s1, rng);
    const auto g = sample_real_laurent(s2, rng);
    const auto z = count_common_zeros_torus2(f, g);
    run.records[i] = {i, z.count, z.certified, 0};
    if (keep_zeros && z.certified)
      for (const auto& r : z.roots) run.zeros[i].push_back({r[0], r[1]});
  });
  run.stats = summarize(run.records);
  return run;
}

/// Coordinate box prod [lo_j, hi_j) inside [0, 1)^n.
struct Box {
  std::vector<std::pair<double, double>> ranges;

  double mass() const {
    double m = 1.0;
    for (const auto& [lo, hi] : ranges) m *= hi - lo;
    return m;
  }
  bool contains(const std::vector<double>& x) const {
    for (std::size_t j = 0; j < ranges.size(); ++j)
      if (x[j] < ranges[j].first || x[j] >= ranges[j].second) return false;
    return true;
  }
};

struct EquidistributionResult {
  std::size_t total = 0;
  std::size_t inside = 0;
  double mass = 0.0;
  double fraction = 0.0;
  double chi_square = 0.0;
  double p_value = 1.0;
};

/// Pooled zeros against the Haar mass of U: two-cell chi-square test, one degree of freedom.
inline EquidistributionResult equidistribution_check(const std::vector<std::vector<std::vector<double>>>& zeros,
                                                     const Box& u) {
  for (const auto& [lo, hi] : u.ranges)
    if (!(0.0 <= lo && lo < hi && hi <= 1.0)) throw invalid_input("equidistribution_check: bad box");
  EquidistributionResult r;
  r.mass = u.mass();
  for (const auto& sample : zeros)
    for (const auto& z : sample) {
      if (z.size() != u.ranges.size()) throw dimension_mismatch("equidistribution_check");
      ++r.total;
      if (u.contains(z)) ++r.inside;
    }
  if (r.total < 200) throw invalid_input("equidistribution_check: fewer than 200 pooled zeros");
  const double n = static_cast<double>(r.total);
  r.fraction = static_cast<double>(r.inside) / n;
  if (r.mass >= 1.0) return r;
  const double e_in = n * r.mass, e_out = n - e_in;
  const double o_in = static_cast<double>(r.inside), o_out = n - o_in;
  r.chi_square = (o_in - e_in) * (o_in - e_in) / e_in + (o_out - e_out) * (o_out - e_out) / e_out;
  r.p_value = boost::math::cdf(boost::math::complement(boost::math::chi_squared(1.0), r.chi_square));
  return r;
}

/// JSON-lines: one manifest line (spec, seed, version, workers), then one line per sample.
inline void write_manifest_jsonl(std::ostream& os, const nlohmann::json& spec, std::uint64_t seed,
                                 const EnsembleRun& run) {
  nlohmann::json head = {{"type", "manifest"},     {"spec", spec},
                         {"seed", seed},           {"version", version},
                         {"workers", worker_count()}, {"samples", run.records.size()}};
  os << head.dump() << '\n';
  for (const auto& r : run.records) {
    nlohmann::json line = {{"type", "sample"}, {"index", r.index}, {"count", r.count}, {"accepted", r.accepted}};
    if (r.flagged) line["flagged"] = r.flagged;
    os << line.dump() << '\n';
  }
}

inline void write_summary_csv(std::ostream& os, const std::vector<std::pair<std::string, ZeroCountStats>>& rows) {
  os << "name,mean,std_error,variance,samples,discarded,discard_rate\n";
  for (const auto& [name, s] : rows) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%zu,%zu,%.17g", s.mean, s.std_error, s.variance, s.sample_count,
                  s.discarded, s.discard_rate);
    os << name << ',' << buf << '\n';
  }
}

}  // namespace realroots::mc
