#pragma once

#include <array>
#include <cmath>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "realroots/convex/serialize.hpp"
#include "realroots/group/group_lab.hpp"
#include "realroots/mc/gaussian_mixed_volume.hpp"
#include "realroots/mc/stats.hpp"
#include "realroots/mc/su2.hpp"
#include "realroots/report/config.hpp"
#include "realroots/report/report.hpp"
#include "realroots/torus/torus_lab.hpp"

namespace realroots::report {

inline constexpr const char* torus_normalization = "characters exp(2 pi i lambda.theta), L2-Gaussian coefficients";
inline constexpr const char* lattice_normalization = "lattice volume, exponent lattice Z^n";
inline constexpr const char* fundamental_normalization = "lattice measure in fundamental-weight coordinates";

namespace detail {

inline std::uint64_t require_seed(const ExperimentConfig& c) {
  if (!c.seed) throw invalid_input("--seed is required for Monte Carlo paths");
  return *c.seed;
}

inline std::size_t require_samples(const ExperimentConfig& c, std::size_t minimum) {
  if (c.samples == 0) throw invalid_input("--samples is required for Monte Carlo paths");
  if (c.samples < minimum)
    throw invalid_input("sample budget too small: need at least " + std::to_string(minimum) + " samples");
  return c.samples;
}

inline double z_score(double value, double expected, double se) {
  if (se > 0.0) return (value - expected) / se;
  return value == expected ? 0.0 : (value > expected ? 1e300 : -1e300);
}

/// Supports from the config; one support of dimension n is repeated n times.
inline std::vector<Support> torus_supports(const ExperimentConfig& c) {
  if (c.supports.empty()) throw invalid_input("need --support");
  std::vector<Support> out;
  for (const auto& s : c.supports) out.push_back(parse_support(s));
  if (out.size() == 1) out.assign(out.front().dim(), out.front());
  if (out.size() != out.front().dim())
    throw dimension_mismatch("need one support per torus dimension (got " + std::to_string(out.size()) + " supports in dimension " +
                             std::to_string(out.front().dim()) + ")");
  return out;
}

inline int max_abs_coordinate(const Support& s) {
  int m = 0;
  for (const auto& p : s.points())
    for (int x : p) m = std::max(m, std::abs(x));
  return m;
}

inline bool is_ball_support(const Support& s) { return s == ball_support(s.dim(), max_abs_coordinate(s)); }

inline Metric metric_from_config(const RootSystem& rs, const ExperimentConfig& c) {
  if (c.metric == "killing") return killing_metric(rs);
  if (c.metric == "unit") return unit_volume_metric(rs);
  throw invalid_input("unknown metric '" + c.metric + "' (expected killing or unit)");
}

inline void add_route_check(Report& rep, const std::string& quantity, double a, double b, double tol, const std::string& result,
                            const std::string& normalization) {
  Row r;
  r.quantity = quantity;
  r.value = std::abs(a - b);
  r.expected = 0.0;
  r.pass = std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
  r.result = result;
  r.normalization = normalization;
  r.note = "relative tolerance " + report::detail::fmt(tol, 3);
  rep.add(r);
}

}  // namespace detail

inline Report cmd_torus(const ExperimentConfig& c) {
  Report rep;
  rep.command = "torus";
  rep.inputs = to_json(c);
  if (c.limit > 0) {
    const int n = c.limit;
    Row b = make_row("beta_n", beta_constant(n));
    b.result = "second-moment-constant/gamma-closed-form";
    b.normalization = "dimension only";
    rep.add(b);
    Row l = make_row("limit proportion", kac_limit(n));
    l.expected = std::pow(n + 2.0, -0.5 * n);
    l.pass = std::abs(l.value - *l.expected) <= c.tolerance;
    l.result = "ball-support-limit/sphere-ratio";
    l.normalization = "dimension only";
    l.note = "expected (n+2)^(-n/2)";
    rep.add(l);
    return rep;
  }
  const auto supports = detail::torus_supports(c);
  const int n = static_cast<int>(supports.size());
  const auto method = parse_mixed_volume_method(c.method);
  McParams mc;
  bool uses_mc = method == MixedVolumeMethod::mc;
  if (method == MixedVolumeMethod::automatic && n > 2) {
    for (const auto& s : supports)
      if (!newton_ellipsoid_torus(s).ball_radius()) uses_mc = true;
  }
  if (uses_mc) {
    mc.seed = detail::require_seed(c);
    if (c.samples) mc.samples = c.samples;
  }
  const auto r = real_proportion_torus(supports, method, mc);
  rep.warnings = r.warnings;

  Row mean = make_row("mean real zeros", r.mean_real);
  if (r.mean_real_std_error > 0) mean.std_error = r.mean_real_std_error;
  mean.result = uses_mc ? "mean-real-zeros/ellipsoid-mixed-volume-mc" : "mean-real-zeros/ellipsoid-mixed-volume";
  mean.normalization = torus_normalization;
  rep.add(mean);
  Row cc = make_row("generic complex zeros", r.complex_count);
  cc.result = "complex-zeros/newton-polytope-mixed-volume";
  cc.normalization = lattice_normalization;
  rep.add(cc);
  Row prop = make_row("real proportion", r.proportion);
  if (r.mean_real_std_error > 0) prop.std_error = r.mean_real_std_error / r.complex_count;
  prop.result = "real-proportion/ratio";
  prop.normalization = torus_normalization;
  rep.add(prop);

  if (n == 1 && supports[0] == segment_support(detail::max_abs_coordinate(supports[0]))) {
    const int m = detail::max_abs_coordinate(supports[0]);
    Row k = make_row("proportion closed form", r.proportion);
    k.expected = std::sqrt((m + 1.0) / (3.0 * m));
    k.pass = std::abs(r.proportion - *k.expected) <= c.tolerance;
    k.result = "real-proportion/segment-closed-form";
    k.normalization = torus_normalization;
    k.note = "sqrt((m+1)/(3m)) with m = " + std::to_string(m);
    rep.add(k);
  }
  bool balls = true;
  for (const auto& s : supports) balls = balls && detail::is_ball_support(s) && s == supports[0];
  if (balls) {
    Row l = make_row("ball-support limit", kac_limit(n));
    l.result = "ball-support-limit/sphere-ratio";
    l.normalization = "dimension only";
    l.note = "proportion minus limit = " + report::detail::fmt(r.proportion - kac_limit(n), 6);
    rep.add(l);
  }
  nlohmann::json ells = nlohmann::json::array(), polys = nlohmann::json::array();
  for (const auto& e : r.ellipsoids) ells.push_back(to_json(e));
  for (const auto& p : r.polytopes) polys.push_back(to_json(p));
  rep.data = {{"ellipsoids", ells}, {"polytopes", polys}};
  return rep;
}

namespace detail {

inline void add_limit_rows(Report& rep, const RootSystem& rs, double tol) {
  const int n = rs.group_dimension();
  const double unit = limit_real_proportion_group(rs, LimitRoute::unit_volume);
  const double rescaled = limit_real_proportion_group(rs, LimitRoute::killing_rescaled);
  Row a = make_row("limit proportion", unit);
  a.expected = std::pow(n + 2.0, -0.5 * n);
  a.pass = std::abs(unit - *a.expected) <= tol * *a.expected;
  a.result = "ball-spectrum-limit/unit-volume-metric";
  a.normalization = "unit-volume metric";
  a.note = "expected (n+2)^(-n/2) with n = dim K";
  rep.add(a);
  Row b = make_row("limit proportion (rescaled)", rescaled);
  b.result = "ball-spectrum-limit/killing-rescaled";
  b.normalization = "Killing quantities rescaled to unit volume";
  rep.add(b);
  add_route_check(rep, "limit route gap", unit, rescaled, tol, "ball-spectrum-limit/route-agreement", "unit-volume metric");
  Row audit = make_row("literal constant", literal_limit_constant(rs));
  audit.result = "normalization-audit/printed-closed-form";
  audit.normalization = "unit-volume metric";
  audit.note = "closed form without the vol(K)^2 covol^2 (2 pi)^-k factor; not a proportion";
  rep.add(audit);
}

}  // namespace detail

inline Report cmd_group(const ExperimentConfig& c) {
  Report rep;
  rep.command = "group";
  rep.inputs = to_json(c);
  if (c.system.empty()) throw invalid_input("need --system");
  const RootSystem rs = root_system_from_code(c.system);
  const Metric m = detail::metric_from_config(rs, c);
  const std::string mname = c.metric == "unit" ? "unit-volume metric" : "Killing metric";
  const int n = rs.group_dimension();

  Row vol = make_row("group volume", group_volume(m));
  vol.result = "group-volume/weyl-integration";
  vol.normalization = mname;
  rep.add(vol);

  if (c.limit) {
    detail::add_limit_rows(rep, rs, std::max(c.tolerance, 1e-10));
    return rep;
  }

  if (c.ball_r > 0.0) {
    if (c.ball_m < 1) throw invalid_input("ball spectrum needs m >= 1");
    const double target = asymptotic_radius_ball(killing_metric(rs), c.ball_r);
    const double limit = limit_real_proportion_group(rs);
    std::vector<int> ms;
    for (int k = 1; k <= c.ball_m; k = c.ball_m > 64 ? 2 * k : k + 1) ms.push_back(k);
    if (ms.back() != c.ball_m) ms.push_back(c.ball_m);
    nlohmann::json sizes = nlohmann::json::object();
    for (int k : ms) {
      const auto pi = ball_spectrum(rs, c.ball_r, k);
      sizes[std::to_string(k)] = pi.entries().size();
      Row rad = make_row("r_K/m at m=" + std::to_string(k), killing_radius(pi) / k);
      rad.expected = target;
      rad.result = "ellipsoid-radius/casimir";
      rad.normalization = "Killing metric";
      rep.add(rad);
      if (pi.is_trivial()) {
        rep.warnings.push_back("m=" + std::to_string(k) + ": ball spectrum is trivial, no zeros");
        continue;
      }
      const auto g = real_proportion_group(pi, m);
      Row prop = make_row("proportion at m=" + std::to_string(k), g.proportion);
      prop.expected = limit;
      prop.result = "real-proportion/ratio";
      prop.normalization = mname;
      rep.add(prop);
    }
    Row lr = make_row("limit radius", target);
    lr.result = "ellipsoid-radius/ball-moment-limit";
    lr.normalization = "Killing metric";
    lr.note = "r / sqrt(n+2)";
    rep.add(lr);
    detail::add_limit_rows(rep, rs, std::max(c.tolerance, 1e-10));
    rep.data = {{"spectrum_sizes", sizes}};
    return rep;
  }

  if (c.spectrum.empty()) throw invalid_input("need --spectrum, --ball-spectrum or --limit");
  const auto pi = parse_spectrum(rs, c.spectrum);
  if (!pi.is_symmetric())
    rep.warnings.push_back("spectrum is not closed under lambda -> -w0 lambda; it is not the spectrum of a real representation");

  Row rk = make_row("r_K", killing_radius(pi));
  rk.result = "ellipsoid-radius/casimir";
  rk.normalization = "Killing metric";
  rep.add(rk);
  if (c.metric != "killing") {
    Row rm = make_row("radius", f_form(pi, m).radius);
    rm.result = "ellipsoid-radius/casimir";
    rm.normalization = mname;
    rep.add(rm);
  }
  const std::vector<RepEnsemble> ens(static_cast<std::size_t>(n), pi);
  const auto g = real_proportion_group(ens, m);
  Row mean = make_row("mean real zeros", g.mean_real);
  mean.result = "mean-real-zeros/ball-mixed-volume";
  mean.normalization = mname + " (value is metric independent)";
  rep.add(mean);
  Row cc = make_row("generic complex zeros", g.complex_count);
  cc.result = "complex-zeros/weighted-polytope-integral";
  cc.normalization = fundamental_normalization;
  rep.add(cc);
  Row cb = make_row("generic complex zeros (bodies)", g.complex_count_bodies);
  cb.result = "complex-zeros/newton-body-mixed-volume";
  cb.normalization = "unit-volume metric";
  rep.add(cb);
  detail::add_route_check(rep, "complex count route gap", g.complex_count_bodies, g.complex_count,
                          std::max(c.tolerance, 1e-9), "complex-zeros/route-agreement", fundamental_normalization);
  Row prop = make_row("real proportion", g.proportion);
  prop.result = "real-proportion/ratio";
  prop.normalization = mname;
  rep.add(prop);
  Row pf = make_row("real proportion (formula)", g.proportion_formula);
  pf.result = "real-proportion/volume-ratio-formula";
  pf.normalization = "unit-volume metric";
  rep.add(pf);
  detail::add_route_check(rep, "proportion route gap", g.proportion_formula, g.proportion, std::max(c.tolerance, 1e-9),
                          "real-proportion/route-agreement", "unit-volume metric");
  rep.data = {{"ensemble", to_json(pi)}, {"weighted_polytope", to_json(weighted_polytope(pi))}, {"metric", to_json(m)}};
  return rep;
}

namespace detail {

inline void write_manifest(const ExperimentConfig& c, const std::string& name, const mc::EnsembleRun& run) {
  if (c.manifest.empty()) return;
  std::ofstream jl(c.manifest + ".jsonl");
  std::ofstream csv(c.manifest + ".csv");
  if (!jl || !csv) throw invalid_input("cannot write manifest files at " + c.manifest);
  mc::write_manifest_jsonl(jl, to_json(c), *c.seed, run);
  mc::write_summary_csv(csv, {{name, run.stats}});
}

inline Ellipsoid random_ellipse(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::Matrix2d a;
  a << normal(rng), normal(rng), normal(rng), normal(rng);
  return Ellipsoid(a * a.transpose());
}

}  // namespace detail

inline Report cmd_verify(const ExperimentConfig& c) {
  Report rep;
  rep.command = "verify " + c.target;
  rep.inputs = to_json(c);
  const std::string& t = c.target;

  if (t == "kac") {
    const std::uint64_t seed = detail::require_seed(c);
    const std::size_t samples = detail::require_samples(c, 30);
    if (c.m < 1) throw invalid_input("verify kac needs --m >= 1");
    const auto run = mc::run_circle_ensemble(segment_support(c.m), samples, seed);
    detail::write_manifest(c, "kac", run);
    Row r = make_row("mean real zeros", run.stats.mean);
    r.std_error = run.stats.std_error;
    r.expected = 2.0 * std::sqrt(c.m * (c.m + 1.0) / 3.0);
    r.z = detail::z_score(r.value, *r.expected, run.stats.std_error);
    r.result = "mean-real-zeros/circle-zero-count-mc";
    r.normalization = torus_normalization;
    r.note = "expected 2 sqrt(m(m+1)/3) from the ellipsoid formula";
    rep.add(r);
    int flagged = 0;
    for (const auto& s : run.records) flagged += s.flagged;
    Row f = make_row("tangential zeros flagged", static_cast<double>(flagged));
    f.result = "zero-count/diagnostic";
    f.normalization = "count";
    rep.add(f);
    return rep;
  }

  if (t == "mixed2d") {
    const std::uint64_t seed = detail::require_seed(c);
    const std::size_t samples = detail::require_samples(c, 1000);
    if (c.pairs < 1) throw invalid_input("--pairs must be positive");
    for (int i = 0; i < c.pairs; ++i) {
      auto rng = mc::child_stream(seed, (1ull << 40) + static_cast<std::uint64_t>(i));
      std::vector<Ellipsoid> e{detail::random_ellipse(rng), detail::random_ellipse(rng)};
      const double exact = mixed_volume_ellipsoids(e, MixedVolumeMethod::exact2d, {}).value;
      const auto est = mc::gaussian_mixed_volume(e, samples, seed + 7919u * static_cast<std::uint64_t>(i + 1));
      Row r = make_row("mixed volume pair " + std::to_string(i + 1), est.value);
      r.std_error = est.std_error;
      r.expected = exact;
      r.z = detail::z_score(est.value, exact, est.std_error);
      r.result = "mixed-volume/gaussian-determinant-mc";
      r.normalization = "Euclidean R^2";
      r.note = "exact2d quadrature; relative error " + report::detail::fmt(std::abs(est.value - exact) / exact, 3);
      rep.add(r);
    }
    auto rng = mc::child_stream(seed, 1ull << 41);
    const double q = std::exp(std::normal_distribution<double>(0.0, 1.0)(rng));
    const auto est = mc::gaussian_mixed_volume({Ellipsoid(Eigen::MatrixXd::Constant(1, 1, q))}, samples, seed + 1);
    Row r = make_row("one-dimensional check", est.value);
    r.std_error = est.std_error;
    r.expected = 2.0 * std::sqrt(q);
    r.z = detail::z_score(est.value, *r.expected, est.std_error);
    r.result = "mixed-volume/gaussian-determinant-mc";
    r.normalization = "Euclidean R^1";
    r.note = "segment of half-length sqrt(q), q = " + report::detail::fmt(q, 6);
    rep.add(r);
    return rep;
  }

  if (t == "su2-fform") {
    const RootSystem a1 = build_root_system('A', 1);
    const auto pi = parse_spectrum(a1, c.spectrum.empty() ? "adjoint" : c.spectrum);
    const double r2 = std::pow(killing_radius(pi), 2);
    const double tol = std::max(c.tolerance, 1e-4);
    const std::array<std::array<double, 3>, 3> basis{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    for (int j = 0; j < 3; ++j) {
      Row r = make_row("F(e" + std::to_string(j + 1) + ",e" + std::to_string(j + 1) + ")", mc::su2_f_form_oracle(pi, basis[j], basis[j]));
      r.expected = r2;
      r.pass = std::abs(r.value - r2) <= tol;
      r.result = "f-form/finite-difference-oracle";
      r.normalization = "Killing-orthonormal basis of su(2)";
      r.note = "expected r_K^2 from the Casimir formula";
      rep.add(r);
    }
    Row off = make_row("F(e1,e2)", mc::su2_f_form_oracle(pi, basis[0], basis[1]));
    off.expected = 0.0;
    off.pass = std::abs(off.value) <= tol;
    off.result = "f-form/finite-difference-oracle";
    off.normalization = "Killing-orthonormal basis of su(2)";
    rep.add(off);
    return rep;
  }

  if (t == "torus2") {
    const std::uint64_t seed = detail::require_seed(c);
    const std::size_t samples = detail::require_samples(c, 30);
    auto sup = c.supports.empty() ? std::vector<Support>{box_support(2, 1), box_support(2, 1)} : detail::torus_supports(c);
    if (sup.size() != 2) throw dimension_mismatch("verify torus2 needs supports in dimension two");
    const auto run = mc::run_torus2_ensemble(sup[0], sup[1], samples, seed);
    detail::write_manifest(c, "torus2", run);
    const double target = mean_real_count_torus(sup, MixedVolumeMethod::exact2d).value;
    Row r = make_row("mean real zeros", run.stats.mean);
    r.std_error = run.stats.std_error;
    r.expected = target;
    r.z = detail::z_score(r.value, target, run.stats.std_error);
    r.result = "mean-real-zeros/torus-zero-count-mc";
    r.normalization = torus_normalization;
    r.note = std::to_string(run.stats.sample_count) + " accepted samples";
    rep.add(r);
    Row d = make_row("discard rate", run.stats.discard_rate);
    d.pass = run.stats.discard_rate < 0.01;
    d.result = "zero-count/uncertified-fraction";
    d.normalization = "fraction of samples";
    rep.add(d);
    const double bound = complex_count_torus(sup);
    int worst = 0;
    for (int k : run.stats.counts) worst = std::max(worst, k);
    Row b = make_row("max real zeros", static_cast<double>(worst));
    b.expected = bound;
    b.pass = worst <= bound;
    b.result = "zero-count/complex-bound";
    b.normalization = lattice_normalization;
    b.note = "must not exceed the generic complex count";
    rep.add(b);
    return rep;
  }

  if (t == "equi") {
    const std::uint64_t seed = detail::require_seed(c);
    const std::size_t samples = detail::require_samples(c, 10);
    const Support s = c.supports.empty() ? segment_support(5) : parse_support(c.supports.front());
    mc::Box box;
    const std::size_t n = s.dim();
    if (n > 2) throw unsupported("verify equi supports dimensions one and two");
    if (c.region == "whole") {
      box.ranges.assign(n, {0.0, 1.0});
    } else if (c.region == "half") {
      box.ranges.assign(n, {0.0, 1.0});
      box.ranges[0] = {0.0, 0.5};
    } else if (c.region == "quarter") {
      box.ranges.assign(n, {0.0, 0.5});
      if (n == 1) box.ranges[0] = {0.25, 0.5};
    } else {
      throw invalid_input("unknown region '" + c.region + "' (expected half, quarter or whole)");
    }
    const auto run = n == 1 ? mc::run_circle_ensemble(s, samples, seed, true) : mc::run_torus2_ensemble(s, s, samples, seed, true);
    detail::write_manifest(c, "equi", run);
    const auto e = mc::equidistribution_check(run.zeros, box);
    Row r = make_row("fraction of zeros in U", e.fraction);
    r.expected = e.mass;
    if (e.mass < 1.0) {
      r.std_error = std::sqrt(e.mass * (1.0 - e.mass) / static_cast<double>(e.total));
      r.z = detail::z_score(e.fraction, e.mass, *r.std_error);
    }
    r.result = "zero-distribution/haar-mass";
    r.normalization = "Haar measure on the torus";
    r.note = std::to_string(e.total) + " pooled zeros";
    rep.add(r);
    Row p = make_row("chi-square p-value", e.p_value);
    p.result = "zero-distribution/chi-square";
    p.normalization = "one degree of freedom";
    rep.add(p);
    return rep;
  }

  throw invalid_input("unknown verify target '" + t + "' (expected kac, mixed2d, su2-fform, torus2 or equi)");
}

inline Report run(const ExperimentConfig& c) {
  if (!(c.tolerance >= 0.0)) throw invalid_input("tolerance must be non-negative");
  if (c.command == "torus") return cmd_torus(c);
  if (c.command == "group") return cmd_group(c);
  if (c.command == "verify") return cmd_verify(c);
  throw invalid_input("unknown command '" + c.command + "'");
}

}  // namespace realroots::report
