#include <cmath>
#include <map>
#include <set>

#include <gtest/gtest.h>

#include "realroots/roots/metric.hpp"
#include "realroots/roots/root_system.hpp"
#include "realroots/roots/weyl.hpp"

using namespace realroots;

namespace {

struct CatalogueEntry {
  std::size_t weyl_order;
  std::size_t positive_roots;
  int dual_coxeter;
};

const std::map<std::string, CatalogueEntry>& catalogue() {
  static const std::map<std::string, CatalogueEntry> table{
      {"A1", {2, 1, 2}},  {"A2", {6, 3, 3}},  {"A3", {24, 6, 4}}, {"B2", {8, 4, 3}}, {"B3", {48, 9, 5}},
      {"C2", {8, 4, 3}},  {"C3", {48, 9, 4}}, {"G2", {12, 6, 4}},
  };
  return table;
}

// (-1)^{<lambda, 2 rho^vee>}: the indicator of a self-dual irreducible.
int indicator_by_coroots(const RootSystem& rs, const IntVector& lambda) {
  Rational s = 0;
  for (const auto& beta : rs.positive_roots) s += 2 * rs.killing(lambda, beta) / rs.killing(beta, beta);
  EXPECT_EQ(denominator(s), 1);
  return (numerator(s) % 2 == 0) ? 1 : -1;
}

}  // namespace

TEST(RootSystem, CatalogueMatchesKnownOrders) {
  for (const auto& code : catalogue_codes()) {
    auto rs = root_system_from_code(code);
    const auto& expected = catalogue().at(code);
    EXPECT_EQ(rs.weyl_order, expected.weyl_order) << code;
    EXPECT_EQ(rs.positive_root_count(), expected.positive_roots) << code;
    EXPECT_EQ(rs.dual_coxeter, expected.dual_coxeter) << code;
    for (int i = 0; i < rs.rank; ++i) EXPECT_EQ(rs.cartan[i][i], 2);
  }
}

TEST(RootSystem, RhoIsHalfSumOfPositiveRoots) {
  for (const auto& code : catalogue_codes()) {
    auto rs = root_system_from_code(code);
    IntVector sum(static_cast<std::size_t>(rs.rank), 0);
    for (const auto& b : rs.positive_roots)
      for (int i = 0; i < rs.rank; ++i) sum[i] += b[i];
    for (int i = 0; i < rs.rank; ++i) EXPECT_EQ(sum[i], 2 * rs.rho[i]) << code;
  }
}

TEST(RootSystem, HighestRootIsDominantAndLong) {
  for (const auto& code : catalogue_codes()) {
    auto rs = root_system_from_code(code);
    EXPECT_TRUE(is_dominant(rs.highest_root)) << code;
    int dominant = 0;
    for (const auto& b : rs.positive_roots) {
      EXPECT_LE(rs.killing(b, b), rs.killing(rs.highest_root, rs.highest_root));
      if (is_dominant(b) && rs.killing(b, b) == rs.killing(rs.highest_root, rs.highest_root)) ++dominant;
    }
    EXPECT_EQ(dominant, 1) << code;
  }
  auto a2 = build_root_system('A', 2);
  EXPECT_EQ(a2.highest_root, (IntVector{1, 1}));
}

TEST(RootSystem, UnsupportedCodes) {
  EXPECT_THROW(build_root_system('E', 6), unsupported);
  EXPECT_THROW(build_root_system('A', 9), unsupported);
  EXPECT_THROW(root_system_from_code("X"), invalid_input);
  EXPECT_THROW(root_system_from_code("A1x"), invalid_input);
}

TEST(Metric, KillingNormalisation) {
  for (const auto& code : catalogue_codes()) {
    auto rs = root_system_from_code(code);
    auto k = killing_metric(rs);
    EXPECT_NEAR(casimir(k, rs.highest_root).value, 1.0, 1e-12) << code;
    EXPECT_NEAR(killing_pairing(k, rs.highest_root, rs.highest_root), 1.0 / rs.dual_coxeter, 1e-12) << code;
  }
  auto a1 = killing_metric(build_root_system('A', 1));
  EXPECT_NEAR(killing_pairing(a1, IntVector{2}, IntVector{2}), 0.5, 1e-15);
  EXPECT_NEAR(p_poly(a1, IntVector{1}), 0.25, 1e-15);
  EXPECT_NEAR(casimir(a1, IntVector{1}).value, 3.0 / 8.0, 1e-15);
  EXPECT_NEAR(casimir(a1, IntVector{2}).level, 1.0, 1e-15);
  EXPECT_EQ(casimir(a1, IntVector{0}).value, 0.0);
}

TEST(Metric, ScaleLaws) {
  auto rs = build_root_system('B', 2);
  auto k = killing_metric(rs);
  auto c = scaled_metric(k, 3.5);
  IntVector x{1, 2}, y{3, 1};
  EXPECT_NEAR(killing_pairing(c, x, y), 3.5 * killing_pairing(k, x, y), 1e-14);
  EXPECT_NEAR(p_poly(c, x), std::pow(3.5, 4) * p_poly(k, x), 1e-12);
  EXPECT_NEAR(torus_volume(c), std::pow(3.5, -1.0) * torus_volume(k), 1e-12);
  EXPECT_NEAR(group_volume(c) / group_volume(k), std::pow(3.5, -0.5 * rs.group_dimension()), 1e-10);
  EXPECT_THROW(torus_volume(k, false), unsupported);
}

TEST(Metric, TorusVolume) {
  auto a1 = killing_metric(build_root_system('A', 1));
  EXPECT_NEAR(torus_volume(a1), 4.0 * std::sqrt(2.0) * pi, 1e-12);
  // Coroots form the basis dual to the fundamental weights.
  for (const auto& code : catalogue_codes()) {
    auto m = killing_metric(root_system_from_code(code));
    EXPECT_NEAR(torus_volume(m) * weight_lattice_covolume(m), std::pow(two_pi, m.system.rank), 1e-9) << code;
  }
}

TEST(Metric, GroupVolumeOfSU2MatchesGeodesicSphere) {
  auto a1 = killing_metric(build_root_system('A', 1));
  // SU(2) with the Killing metric is the round 3-sphere of radius sqrt(8).
  const double sphere = 2.0 * pi * pi * std::pow(std::sqrt(8.0), 3);
  EXPECT_NEAR(group_volume(a1) / sphere, 1.0, 1e-12);
  EXPECT_NEAR(group_volume(a1) / (32.0 * std::sqrt(2.0) * pi * pi), 1.0, 1e-12);
}

TEST(Metric, GroupVolumeMatchesProductFormula) {
  // Independent route: vol(K) = vol(T) prod_{beta>0} 2 pi / (rho, beta).
  for (const auto& code : catalogue_codes()) {
    auto m = killing_metric(root_system_from_code(code));
    double expected = torus_volume(m);
    for (const auto& beta : m.system.positive_roots) expected *= two_pi / killing_pairing(m, m.system.rho, beta);
    EXPECT_NEAR(group_volume(m) / expected, 1.0, 1e-10) << code;
  }
}

TEST(Metric, UnitVolumeMetric) {
  for (const auto& code : catalogue_codes()) {
    auto rs = root_system_from_code(code);
    auto u = unit_volume_metric(rs);
    EXPECT_NEAR(group_volume(u), 1.0, 1e-10) << code;
    EXPECT_NEAR(std::pow(group_volume(u), 2.0 / rs.group_dimension()), 1.0, 1e-10);
  }
  auto a1 = unit_volume_metric(build_root_system('A', 1));
  EXPECT_NEAR(a1.scale, std::pow(32.0 * std::sqrt(2.0) * pi * pi, 2.0 / 3.0), 1e-9);
  EXPECT_EQ(weyl_dim(a1.system, {4}), 5u);
}

TEST(Metric, JsonRoundTrip) {
  Metric m{build_root_system('G', 2), 0.25};
  auto back = metric_from_json(to_json(m));
  EXPECT_EQ(back.system.code, "G2");
  EXPECT_EQ(back.scale, 0.25);
  EXPECT_THROW(metric_from_json(nlohmann::json{{"system", "A1"}, {"scale", -1.0}}), invalid_input);
}

TEST(Weyl, Dimensions) {
  auto a1 = build_root_system('A', 1);
  for (int k = 0; k <= 10; ++k) EXPECT_EQ(weyl_dim(a1, {k}), static_cast<std::uint64_t>(k + 1));
  auto a2 = build_root_system('A', 2);
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b)
      EXPECT_EQ(weyl_dim(a2, {a, b}), static_cast<std::uint64_t>((a + 1) * (b + 1) * (a + b + 2) / 2));
  EXPECT_EQ(weyl_dim(a2, a2.highest_root), 8u);
  auto g2 = build_root_system('G', 2);
  EXPECT_EQ(weyl_dim(g2, {1, 0}), 7u);
  EXPECT_EQ(weyl_dim(g2, g2.highest_root), 14u);
  auto b3 = build_root_system('B', 3);
  EXPECT_EQ(weyl_dim(b3, b3.highest_root), 21u);
  for (const auto& code : catalogue_codes()) {
    auto rs = root_system_from_code(code);
    EXPECT_EQ(weyl_dim(rs, IntVector(rs.rank, 0)), 1u);
    EXPECT_EQ(static_cast<int>(weyl_dim(rs, rs.highest_root)), rs.group_dimension()) << code;
  }
  EXPECT_THROW(weyl_dim(a1, {-1}), invalid_input);
}

TEST(Weyl, OrbitSizesDivideWeylOrder) {
  for (const auto& code : catalogue_codes()) {
    auto rs = root_system_from_code(code);
    for (const auto& lambda : dominant_points_in_ball(killing_metric(rs), 1.5)) {
      EXPECT_EQ(rs.weyl_order % weyl_orbit(rs, lambda).size(), 0u) << code;
    }
  }
  auto a2 = build_root_system('A', 2);
  EXPECT_EQ(weyl_orbit(a2, a2.highest_root).size(), 6u);
}

TEST(Weyl, SymmetricPartner) {
  auto a1 = build_root_system('A', 1);
  EXPECT_EQ(symmetric_partner(a1, {3}), (IntVector{3}));
  auto a2 = build_root_system('A', 2);
  EXPECT_EQ(symmetric_partner(a2, {2, 5}), (IntVector{5, 2}));
  auto a3 = build_root_system('A', 3);
  EXPECT_EQ(symmetric_partner(a3, {1, 2, 3}), (IntVector{3, 2, 1}));
  for (const auto& code : catalogue_codes()) {
    auto rs = root_system_from_code(code);
    for (const auto& lambda : dominant_points_in_ball(killing_metric(rs), 10.0 * 0.35)) {
      auto p = symmetric_partner(rs, lambda);
      EXPECT_EQ(symmetric_partner(rs, p), lambda) << code;
      IntVector neg = lambda;
      for (auto& x : neg) x = -x;
      auto orbit = weyl_orbit(rs, neg);
      EXPECT_TRUE(std::binary_search(orbit.begin(), orbit.end(), p)) << code;
    }
    EXPECT_EQ(symmetric_partner(rs, IntVector(rs.rank, 0)), IntVector(rs.rank, 0));
  }
}

TEST(Weyl, RealityTypes) {
  auto a1 = build_root_system('A', 1);
  EXPECT_EQ(reality_type(a1, {2}), RealityType::real);
  EXPECT_EQ(reality_type(a1, {1}), RealityType::quaternionic);
  auto a2 = build_root_system('A', 2);
  EXPECT_EQ(reality_type(a2, {1, 0}), RealityType::complex);
  EXPECT_EQ(reality_type(a2, {1, 1}), RealityType::real);
}

TEST(Weyl, IndicatorMatchesCorootParity) {
  for (const std::string code : {"A1", "A2", "A3", "B2", "C2", "G2"}) {
    auto rs = root_system_from_code(code);
    for (const auto& lambda : dominant_points_in_ball(killing_metric(rs), 1.2)) {
      if (symmetric_partner(rs, lambda) != lambda) continue;
      double ind = frobenius_schur_indicator(rs, lambda);
      EXPECT_NEAR(ind, indicator_by_coroots(rs, lambda), 1e-8) << code;
      EXPECT_EQ(reality_type(rs, lambda), ind > 0 ? RealityType::real : RealityType::quaternionic) << code;
    }
  }
  // Rank 3 spot checks: spin representations of B3 real, of C3 the standard one quaternionic.
  auto b3 = build_root_system('B', 3);
  EXPECT_NEAR(frobenius_schur_indicator(b3, {0, 0, 1}), 1.0, 1e-8);
  auto c3 = build_root_system('C', 3);
  EXPECT_NEAR(frobenius_schur_indicator(c3, {1, 0, 0}), -1.0, 1e-8);
  EXPECT_EQ(indicator_by_coroots(c3, {1, 0, 0}), -1);
}

TEST(Weyl, DominantPointsInBall) {
  auto a1 = killing_metric(build_root_system('A', 1));
  EXPECT_EQ(dominant_points_in_ball(a1, 0.0), (std::vector<IntVector>{{0}}));
  // (k omega, k omega) = k^2 / 8.
  for (int kmax = 0; kmax <= 12; ++kmax) {
    auto pts = dominant_points_in_ball(a1, std::sqrt(kmax * kmax / 8.0));
    EXPECT_EQ(pts.size(), static_cast<std::size_t>(kmax + 1));
  }
  auto a2 = killing_metric(build_root_system('A', 2));
  auto pts = dominant_points_in_ball(a2, 2.0);
  std::set<IntVector> set(pts.begin(), pts.end());
  for (const auto& p : pts) EXPECT_TRUE(set.count(symmetric_partner(a2.system, p)));
  // Same set for (cM, sqrt(c) r), and monotone in r.
  auto scaled = scaled_metric(a2, 2.7);
  EXPECT_EQ(dominant_points_in_ball(scaled, 2.0 * std::sqrt(2.7)), pts);
  EXPECT_LE(dominant_points_in_ball(a2, 1.5).size(), pts.size());
}
