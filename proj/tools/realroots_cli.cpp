#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "realroots/realroots.hpp"

namespace {

enum Exit { ok = 0, config_error = 2, verification_failure = 3, numeric_error = 4 };

struct Flags {
  std::vector<std::string> supports;
  std::string system, spectrum, ball, samples, method, metric, region, format, out, manifest, config, target;
  int limit_n = 0, m = 0, pairs = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  bool limit = false, dump = false, no_timing = false;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--samples", f.samples, "Monte Carlo sample count (2000, 1e6)");
  sub->add_option("--seed", f.seed, "master seed for Monte Carlo paths");
  sub->add_option("--format", f.format, "md, csv or json");
  sub->add_option("--out", f.out, "write the report here instead of stdout");
  sub->add_option("--tolerance", f.tolerance, "absolute or relative tolerance for pass checks");
  sub->add_option("--config", f.config, "JSON config; explicit flags override it");
  sub->add_flag("--dump-config", f.dump, "print the resolved config as JSON and exit");
  sub->add_flag("--no-timing", f.no_timing, "report zero wall time so reruns are byte-identical");
}

realroots::report::ExperimentConfig resolve(const CLI::App& sub, const Flags& f) {
  using realroots::report::ExperimentConfig;
  ExperimentConfig c = f.config.empty() ? ExperimentConfig{} : realroots::report::load_config(f.config);
  c.command = sub.get_name();
  auto given = [&](const char* name) {
    const auto* opt = sub.get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  if (given("--support")) c.supports = f.supports;
  if (given("--system")) c.system = f.system;
  if (given("--spectrum")) c.spectrum = f.spectrum;
  if (given("--ball-spectrum")) std::tie(c.ball_r, c.ball_m) = realroots::report::parse_ball_spectrum(f.ball);
  if (c.command == "torus" && given("--limit")) c.limit = f.limit_n;
  if (c.command == "group" && given("--limit")) c.limit = 1;
  if (given("--m")) c.m = f.m;
  if (given("--samples")) c.samples = realroots::report::parse_samples(f.samples);
  if (given("--seed")) c.seed = f.seed;
  if (given("--method")) c.method = f.method;
  if (given("--metric")) c.metric = f.metric;
  if (given("--region")) c.region = f.region;
  if (given("--pairs")) c.pairs = f.pairs;
  if (given("--format")) c.format = f.format;
  if (given("--out")) c.out = f.out;
  if (given("--manifest")) c.manifest = f.manifest;
  if (given("--tolerance")) c.tolerance = f.tolerance;
  if (given("--no-timing")) c.timing = false;
  if (c.command == "verify" && !f.target.empty()) c.target = f.target;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Expected real zeros of random real polynomial systems on tori and compact groups"};
  app.set_version_flag("--version", std::string(realroots::version));
  app.require_subcommand(1);
  Flags f;

  auto* torus = app.add_subcommand("torus", "Laurent systems on the n-torus");
  torus->add_option("--support", f.supports, "segment:m, box:n:m, ball:n:m or explicit [[..],..]; repeat once per equation")
      ->allow_extra_args(false);
  torus->add_option("--limit", f.limit_n, "print the ball-support limit constant for dimension n");
  torus->add_option("--method", f.method, "mixed volume method: auto, exact2d, balls or mc");
  add_common(torus, f);

  auto* group = app.add_subcommand("group", "Representation systems on compact simple groups");
  group->add_option("--system", f.system, "root system code: A1 A2 A3 B2 B3 C2 C3 G2");
  group->add_option("--spectrum", f.spectrum, "adjoint, trivial, ball:r:m, \"0,1,2\" in rank one or \"1,0;0,1\"");
  group->add_option("--ball-spectrum", f.ball, "r=..,m=.. for the dilated ball spectrum");
  group->add_flag("--limit", f.limit, "large-degree limit of the real proportion");
  group->add_option("--metric", f.metric, "killing or unit");
  add_common(group, f);

  auto* verify = app.add_subcommand("verify", "Monte Carlo and oracle checks of the closed forms");
  verify->add_option("target", f.target, "kac, mixed2d, su2-fform, torus2 or equi");
  verify->add_option("--support", f.supports, "supports for torus2 and equi")->allow_extra_args(false);
  verify->add_option("--spectrum", f.spectrum, "A1 spectrum for su2-fform");
  verify->add_option("--m", f.m, "segment half-width for kac");
  verify->add_option("--pairs", f.pairs, "random ellipse pairs for mixed2d");
  verify->add_option("--region", f.region, "half, quarter or whole for equi");
  verify->add_option("--manifest", f.manifest, "write <prefix>.jsonl and <prefix>.csv");
  add_common(verify, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : config_error;
  }

  const CLI::App* sub = app.get_subcommands().front();
  try {
    auto cfg = resolve(*sub, f);
    if (f.dump) {
      std::cout << realroots::report::to_json(cfg).dump(2) << '\n';
      return ok;
    }
    if (cfg.format != "md" && cfg.format != "csv" && cfg.format != "json")
      throw realroots::invalid_input("unknown format '" + cfg.format + "' (expected json, csv or md)");
    const auto t0 = std::chrono::steady_clock::now();
    auto rep = realroots::report::run(cfg);
    if (cfg.timing) rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const std::string text = realroots::report::emit(rep, cfg.format);
    if (cfg.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream os(cfg.out);
      if (!os) throw realroots::invalid_input("cannot write " + cfg.out);
      os << text;
    }
    for (const auto& w : rep.warnings) std::cerr << "warning: " << w << '\n';
    if (rep.verification_failed()) {
      std::cerr << "verification failed\n";
      return verification_failure;
    }
    return ok;
  } catch (const realroots::numeric_failure& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return numeric_error;
  } catch (const realroots::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return config_error;
  }
}
