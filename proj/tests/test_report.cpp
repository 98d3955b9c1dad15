#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "realroots/realroots.hpp"

using namespace realroots;
using namespace realroots::report;

namespace {

Report sample_report() {
  Report rep;
  rep.command = "verify kac";
  rep.inputs = {{"m", 5}};
  Row a = make_row("mean, real", 6.25);
  a.std_error = 0.04;
  a.expected = 6.3245553203367590;
  a.z = -1.86;
  a.result = "mean-real-zeros/circle-zero-count-mc";
  a.normalization = "characters";
  a.note = "quoted \"note\"";
  rep.add(a);
  Row b = make_row("gap", 0.0);
  b.pass = true;
  b.result = "route";
  b.normalization = "unit";
  rep.add(b);
  rep.warnings = {"w1"};
  rep.data = {{"k", {1, 2}}};
  rep.wall_time_s = 0.5;
  return rep;
}

std::vector<std::string> csv_fields(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  return out;
}

}  // namespace

TEST(Report, JsonRoundTrip) {
  const Report rep = sample_report();
  const auto text = emit(rep, "json");
  EXPECT_EQ(report_from_json(nlohmann::json::parse(text)), rep);
}

TEST(Report, CsvColumnsAndQuoting) {
  const auto text = to_csv(sample_report());
  std::istringstream in(text);
  std::string header, line;
  std::getline(in, header);
  EXPECT_EQ(header, "quantity,value,std_error,expected,z,pass,result,normalization,note");
  std::getline(in, line);
  const auto f = csv_fields(line);
  ASSERT_EQ(f.size(), 9u);
  EXPECT_EQ(f[0], "mean, real");
  EXPECT_DOUBLE_EQ(std::stod(f[1]), 6.25);
  EXPECT_DOUBLE_EQ(std::stod(f[3]), 6.3245553203367590);
  EXPECT_EQ(f[5], "");
  EXPECT_EQ(f[8], "quoted \"note\"");
  std::getline(in, line);
  EXPECT_EQ(csv_fields(line)[5], "true");
}

TEST(Report, MarkdownHasTableAndWarnings) {
  const auto md = to_markdown(sample_report());
  EXPECT_NE(md.find("| quantity | value |"), std::string::npos);
  EXPECT_NE(md.find("| pass |"), std::string::npos);
  EXPECT_NE(md.find("- w1"), std::string::npos);
  EXPECT_THROW(emit(sample_report(), "xml"), invalid_input);
}

TEST(Report, VerificationFailed) {
  Report rep = sample_report();
  EXPECT_FALSE(rep.verification_failed());
  rep.rows[0].z = 4.5;
  EXPECT_TRUE(rep.verification_failed());
  rep.rows[0].z = 0.0;
  rep.rows[1].pass = false;
  EXPECT_TRUE(rep.verification_failed());
}

TEST(Config, JsonRoundTrip) {
  ExperimentConfig c;
  c.command = "verify";
  c.target = "torus2";
  c.supports = {"box:2:1", "ball:2:2"};
  c.samples = 1000;
  c.seed = 99;
  c.tolerance = 1e-6;
  c.timing = false;
  EXPECT_EQ(config_from_json(to_json(c)), c);
  ExperimentConfig d;
  EXPECT_EQ(config_from_json(to_json(d)), d);
  EXPECT_FALSE(config_from_json(to_json(d)).seed.has_value());
}

TEST(Config, RejectsBadInput) {
  EXPECT_THROW(config_from_json({{"bogus", 1}}), invalid_input);
  EXPECT_THROW(config_from_json({{"samples", "many"}}), invalid_input);
  EXPECT_THROW(config_from_json(nlohmann::json::array()), invalid_input);
  EXPECT_THROW(load_config("/nonexistent/config.json"), invalid_input);
}

TEST(Config, ParseSamplesAndBall) {
  EXPECT_EQ(parse_samples("2000"), 2000u);
  EXPECT_EQ(parse_samples("1e6"), 1000000u);
  EXPECT_THROW(parse_samples("1.5"), invalid_input);
  EXPECT_THROW(parse_samples("0"), invalid_input);
  EXPECT_THROW(parse_samples("ten"), invalid_input);
  EXPECT_EQ(parse_ball_spectrum("r=1,m=4"), std::make_pair(1.0, 4));
  EXPECT_EQ(parse_ball_spectrum("m=3,r=0.5"), std::make_pair(0.5, 3));
  EXPECT_THROW(parse_ball_spectrum("r=1"), invalid_input);
  EXPECT_THROW(parse_ball_spectrum("r=1,m=4,x=2"), invalid_input);
}

TEST(Commands, TorusSegmentClosedForm) {
  ExperimentConfig c;
  c.command = "torus";
  c.supports = {"segment:7"};
  const auto rep = run(c);
  EXPECT_FALSE(rep.verification_failed());
  bool found = false;
  for (const auto& r : rep.rows)
    if (r.result == "real-proportion/segment-closed-form") {
      found = true;
      EXPECT_NEAR(r.value, std::sqrt(8.0 / 21.0), 1e-12);
    }
  EXPECT_TRUE(found);
}

TEST(Commands, TorusErrors) {
  ExperimentConfig c;
  c.command = "torus";
  EXPECT_THROW(run(c), invalid_input);
  c.supports = {"box:2:1", "box:2:1", "box:2:1"};
  EXPECT_THROW(run(c), dimension_mismatch);
  c.supports = {"[[1,0,0],[-1,0,0],[0,2,0],[0,-2,0],[0,0,1],[0,0,-1]]"};
  EXPECT_THROW(run(c), invalid_input);  // needs a seed for the Monte Carlo mixed volume
  c.seed = 3;
  c.samples = 20000;
  const auto rep = run(c);
  const double q = 4.0 * pi * pi / 6.0;
  const double exact = 6.0 / std::pow(two_pi, 3) * (4.0 * pi / 3.0) * std::sqrt(2 * q * 8 * q * 2 * q);
  EXPECT_NEAR(rep.rows[0].value, exact, 5.0 * *rep.rows[0].std_error);
}

TEST(Commands, GroupRoutesAgree) {
  for (const char* metric : {"killing", "unit"}) {
    ExperimentConfig c;
    c.command = "group";
    c.system = "B2";
    c.spectrum = "adjoint";
    c.metric = metric;
    const auto rep = run(c);
    EXPECT_FALSE(rep.verification_failed()) << metric;
    EXPECT_TRUE(rep.warnings.empty());
  }
  ExperimentConfig c;
  c.command = "group";
  c.system = "A2";
  c.spectrum = "1,0";
  EXPECT_FALSE(run(c).warnings.empty());
  c.metric = "other";
  EXPECT_THROW(run(c), invalid_input);
}

TEST(Commands, GroupLimitAndBall) {
  ExperimentConfig c;
  c.command = "group";
  c.system = "G2";
  c.limit = 1;
  auto rep = run(c);
  EXPECT_FALSE(rep.verification_failed());
  c.limit = 0;
  c.system = "A1";
  c.ball_r = 1.0;
  c.ball_m = 80;
  rep = run(c);
  EXPECT_FALSE(rep.verification_failed());
  EXPECT_LE(rep.rows.size(), 40u);  // powers of two past 64
}

TEST(Commands, VerifyRequiresSeed) {
  for (const char* t : {"kac", "mixed2d", "torus2", "equi"}) {
    ExperimentConfig c;
    c.command = "verify";
    c.target = t;
    c.samples = 100;
    c.m = 3;
    EXPECT_THROW(run(c), invalid_input) << t;
  }
  ExperimentConfig c;
  c.command = "verify";
  c.target = "su2-fform";
  EXPECT_FALSE(run(c).verification_failed());
  c.target = "nope";
  EXPECT_THROW(run(c), invalid_input);
}

TEST(Commands, VerifyKacDeterministic) {
  ExperimentConfig c;
  c.command = "verify";
  c.target = "kac";
  c.m = 2;
  c.samples = 300;
  c.seed = 11;
  const auto a = run(c);
  const auto b = run(c);
  EXPECT_EQ(a, b);
  EXPECT_FALSE(a.verification_failed());
}

TEST(Commands, ManifestFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "realroots_manifest_test";
  std::filesystem::create_directories(dir);
  ExperimentConfig c;
  c.command = "verify";
  c.target = "torus2";
  c.samples = 40;
  c.seed = 2;
  c.manifest = (dir / "run").string();
  run(c);
  std::ifstream jl(c.manifest + ".jsonl"), csv(c.manifest + ".csv");
  ASSERT_TRUE(jl && csv);
  std::string line;
  int lines = 0;
  while (std::getline(jl, line)) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j["type"], lines == 0 ? "manifest" : "sample");
    ++lines;
  }
  EXPECT_EQ(lines, 41);
  std::getline(csv, line);
  EXPECT_EQ(line, "name,mean,std_error,variance,samples,discarded,discard_rate");
  std::filesystem::remove_all(dir);
}
