#include <cmath>
#include <random>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <gtest/gtest.h>

#include "realroots/torus/torus_lab.hpp"

using namespace realroots;

TEST(Support, NormalisationAndShorthands) {
  Support s(1, {{1}, {0}, {1}, {-1}});
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(parse_support("segment:2"), segment_support(2));
  EXPECT_EQ(parse_support("box:2:1").size(), 9u);
  EXPECT_EQ(parse_support("ball:2:1").size(), 5u);
  EXPECT_EQ(ball_support(2, 2).size(), 13u);
  EXPECT_EQ(ball_support(1, 2).points(), (std::vector<std::vector<int>>{{-2}, {-1}, {0}, {1}, {2}}));
  EXPECT_EQ(parse_support("[[0,1],[0,-1]]").dim(), 2u);
  EXPECT_EQ(parse_support("[-1,0,1]"), segment_support(1));
  EXPECT_THROW(parse_support("disc:3"), invalid_input);
  EXPECT_THROW(parse_support("segment:x"), invalid_input);
  EXPECT_THROW(Support(2, {{1}}), dimension_mismatch);
}

TEST(Support, CentralSymmetry) {
  EXPECT_TRUE(is_centrally_symmetric(segment_support(4)));
  EXPECT_FALSE(is_centrally_symmetric(Support(1, {{0}, {1}})));
  EXPECT_TRUE(is_centrally_symmetric(box_support(2, 1)));
}

TEST(NewtonBodies, Examples) {
  EXPECT_EQ(newton_polytope(box_support(2, 1)).exact_volume(), Rational(4));
  for (int m = 1; m <= 5; ++m) {
    auto e = newton_ellipsoid_torus(segment_support(m));
    EXPECT_NEAR(std::sqrt(e.Q()(0, 0)), two_pi * std::sqrt(m * (m + 1) / 3.0), 1e-12);
  }
  EXPECT_EQ(newton_ellipsoid_torus(Support(1, {{0}})).Q()(0, 0), 0.0);
  auto q = newton_ellipsoid_torus(box_support(2, 1)).Q();
  EXPECT_NEAR(q(0, 0), 8.0 * pi * pi / 3.0, 1e-12);
  EXPECT_NEAR(q(0, 1), 0.0, 1e-12);
}

TEST(TorusCounts, OneDimensional) {
  for (int m = 1; m <= 8; ++m) {
    EXPECT_NEAR(mean_real_count_torus({segment_support(m)}).value, 2.0 * std::sqrt(m * (m + 1) / 3.0), 1e-12);
    EXPECT_EQ(complex_count_torus_exact({segment_support(m)}), Rational(2 * m));
  }
  EXPECT_EQ(mean_real_count_torus({Support(1, {{0}})}).value, 0.0);
  EXPECT_EQ(complex_count_torus({Support(1, {{0}})}), 0.0);
  EXPECT_THROW(real_proportion_torus({Support(1, {{0}})}), invalid_input);
}

TEST(TorusCounts, CrossBox) {
  auto b = box_support(2, 1);
  EXPECT_NEAR(mean_real_count_torus({b, b}).value, 4.0 * pi / 3.0, 1e-9);
  EXPECT_EQ(complex_count_torus_exact({b, b}), Rational(8));
  auto r = real_proportion_torus({b, b});
  EXPECT_NEAR(r.proportion, pi / 6.0, 1e-9);
  EXPECT_TRUE(r.warnings.empty());
  EXPECT_THROW(mean_real_count_torus({b}), dimension_mismatch);
}

TEST(TorusCounts, KacFormula) {
  for (int m = 1; m <= 100; ++m)
    EXPECT_NEAR(real_proportion_torus({segment_support(m)}).proportion, std::sqrt((m + 1.0) / (3.0 * m)), 1e-12);
  double prev = 1.0;
  for (int m = 1; m <= 50; ++m) {
    double p = real_proportion_torus({segment_support(m)}).proportion;
    EXPECT_LT(p, prev);
    prev = p;
  }
}

TEST(TorusCounts, NonSymmetricSupportWarns) {
  auto r = real_proportion_torus({Support(1, {{0}, {1}, {2}})});
  EXPECT_EQ(r.warnings.size(), 1u);
  EXPECT_GT(r.proportion, 0.0);
}

TEST(TorusCounts, UnimodularCovariance) {
  // U = [[1,1],[0,1]] maps supports; complex counts are unchanged and Ell maps by Q -> U Q U^T.
  auto b = box_support(2, 1);
  std::vector<std::vector<int>> mapped;
  for (const auto& p : b.points()) mapped.push_back({p[0] + p[1], p[1]});
  Support ub(2, mapped);
  EXPECT_EQ(complex_count_torus_exact({b, b}), complex_count_torus_exact({ub, ub}));
  Eigen::Matrix2d u;
  u << 1, 1, 0, 1;
  Eigen::MatrixXd expected = u * newton_ellipsoid_torus(b).Q() * u.transpose();
  EXPECT_LT((newton_ellipsoid_torus(ub).Q() - expected).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_NEAR(mean_real_count_torus({ub, ub}).value, mean_real_count_torus({b, b}).value, 1e-8);
}

TEST(TorusCounts, MixedSupports) {
  // Segments along the axes: Ell are degenerate, conv are segments.
  Support sx(2, {{-1, 0}, {0, 0}, {1, 0}});
  Support sy(2, {{0, -2}, {0, 0}, {0, 2}});
  // V(conv) = 1/2 * area of [-1,1]x[-2,2] = 4, so N = 8.
  EXPECT_EQ(complex_count_torus_exact({sx, sy}), Rational(8));
  // Ell radii 2 pi sqrt(2/3) and 2 pi sqrt(8/3); V = 2 * product of half-lengths.
  const double expected = 2.0 / (4.0 * pi * pi) * 2.0 * (two_pi * std::sqrt(2.0 / 3.0)) * (two_pi * std::sqrt(8.0 / 3.0));
  EXPECT_NEAR(mean_real_count_torus({sx, sy}).value, expected, 1e-9);
}

TEST(Kac, BetaConstantsMatchQuadrature) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  for (int n = 1; n <= 10; ++n) {
    auto f = [n](double x) { return x * x * std::pow(1.0 - x * x, 0.5 * (n - 1)); };
    EXPECT_NEAR(beta_constant(n), integrator.integrate(f, -1.0, 1.0), 1e-12) << n;
  }
  EXPECT_NEAR(beta_constant(1), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(beta_constant(2), pi / 8.0, 1e-15);
  EXPECT_NEAR(beta_constant(10), 21.0 * pi / 1024.0, 1e-15);
  EXPECT_THROW(beta_constant(0), invalid_input);
}

TEST(Kac, LimitIdentity) {
  for (int n = 1; n <= 10; ++n) EXPECT_NEAR(kac_limit(n), std::pow(n + 2.0, -0.5 * n), 1e-12);
  EXPECT_NEAR(kac_limit(1), 1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(kac_limit(2), 0.25, 1e-15);
}

TEST(Kac, BallSupportsApproachTheLimit) {
  double prev_gap = 1.0;
  for (int m : {5, 10, 20, 40}) {
    auto s = ball_support(2, m);
    double p = real_proportion_torus({s, s}).proportion;
    double gap = std::abs(p - kac_limit(2));
    EXPECT_LT(gap, prev_gap) << m;
    prev_gap = gap;
  }
  EXPECT_LT(prev_gap, 0.01);
  for (int m : {4, 8}) {
    auto s = ball_support(3, m);
    double p = real_proportion_torus({s, s, s}).proportion;
    EXPECT_NEAR(p, kac_limit(3), 0.3 * kac_limit(3) * 4.0 / m);
  }
}
