// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "realroots/realroots.hpp"

using namespace realroots;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double x, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

RepEnsemble a1(std::initializer_list<int> weights) {
  std::vector<std::pair<IntVector, int>> w;
  for (int x : weights) w.push_back({{x}, 1});
  return RepEnsemble(build_root_system('A', 1), w);
}

Outcome beta_table() {
  const auto t0 = std::chrono::steady_clock::now();
  const double expected[] = {2.0 / 3,        pi / 8,          4.0 / 15,  pi / 16,          16.0 / 105,
                             5 * pi / 128, 32.0 / 315, 7 * pi / 256, 256.0 / 3465, 21 * pi / 1024};
  double worst = 0.0, worst_quad = 0.0;
  for (int n = 1; n <= 10; ++n) {
    const double b = beta_constant(n);
    worst = std::max(worst, std::abs(b - expected[n - 1]));
    // Independent check by adaptive quadrature of x^2 (1 - x^2)^{(n-1)/2} on [-1, 1].
    auto f = [n](double x) { return x * x * std::pow(std::max(0.0, 1.0 - x * x), 0.5 * (n - 1)); };
    const double q = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, -1.0, 1.0, 15, 1e-14);
    worst_quad = std::max(worst_quad, std::abs(q - b));
  }
  const double t = seconds_since(t0);
  return {worst <= 1e-12 && worst_quad <= 1e-10 && t < 1.0,
          "max error " + fmt(worst, 3) + ", quadrature gap " + fmt(worst_quad, 3) + ", " + fmt(t, 3) + " s"};
}

Outcome kac_exact() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int m = 1; m <= 100; ++m) {
    const std::vector<Support> s{segment_support(m)};
    worst = std::max(worst, std::abs(real_proportion_torus(s).proportion - std::sqrt((m + 1.0) / (3.0 * m))));
  }
  const double p1000 = real_proportion_torus({segment_support(1000)}).proportion;
  const double gap = std::abs(p1000 - 1.0 / std::sqrt(3.0));
  const double t = seconds_since(t0);
  return {worst <= 1e-12 && gap <= 1e-3 && t < 5.0,
          "max error " + fmt(worst, 3) + " for m<=100, |p(1000) - 1/sqrt3| = " + fmt(gap, 3) + ", " + fmt(t, 3) + " s"};
}

Outcome kac_limit_identity() {
  double worst = 0.0;
  for (int n = 1; n <= 10; ++n) worst = std::max(worst, std::abs(kac_limit(n) - std::pow(n + 2.0, -0.5 * n)));
  return {worst <= 1e-12, "max error " + fmt(worst, 3)};
}

Outcome mc_circle() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto run = mc::run_circle_ensemble(segment_support(5), 2000, 20240501);
  const double target = 2.0 * std::sqrt(10.0);
  const double z = (run.stats.mean - target) / run.stats.std_error;
  const double t = seconds_since(t0);
  return {std::abs(z) <= 3.0 && t < 60.0, "mean " + fmt(run.stats.mean) + " +- " + fmt(run.stats.std_error, 3) +
                                              " vs " + fmt(target) + ", z = " + fmt(z, 3) + ", " + fmt(t, 3) + " s"};
}

Outcome mc_torus2() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto s = box_support(2, 1);
  const auto run = mc::run_torus2_ensemble(s, s, 1000, 20240502);
  const double target = 4.0 * pi / 3.0;
  const double z = (run.stats.mean - target) / run.stats.std_error;
  const double t = seconds_since(t0);
  return {run.stats.sample_count >= 500 && std::abs(z) <= 3.0 && run.stats.discard_rate < 0.01 && t < 600.0,
          "mean " + fmt(run.stats.mean) + " +- " + fmt(run.stats.std_error, 3) + " vs " + fmt(target) + ", z = " +
              fmt(z, 3) + ", " + std::to_string(run.stats.sample_count) + " accepted, discard " +
              fmt(run.stats.discard_rate, 3) + ", " + fmt(t, 3) + " s"};
}

Ellipsoid random_ellipse(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::Matrix2d a;
  a << normal(rng), normal(rng), normal(rng), normal(rng);
  return Ellipsoid(a * a.transpose());
}

Outcome mixed_volume_oracles() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(7);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const std::vector<Ellipsoid> e{random_ellipse(rng), random_ellipse(rng)};
    const double exact = mixed_volume_ellipsoids(e, MixedVolumeMethod::exact2d).value;
    const double est = mc::gaussian_mixed_volume(e, 1'000'000, 1000 + i).value;
    worst = std::max(worst, std::abs(est - exact) / exact);
  }
  const double q = 2.7;
  const auto one = mc::gaussian_mixed_volume({Ellipsoid(Eigen::MatrixXd::Constant(1, 1, q))}, 1'000'000, 99);
  const double z = (one.value - 2.0 * std::sqrt(q)) / one.std_error;
  return {worst < 0.01 && std::abs(z) <= 3.0, "max relative error " + fmt(worst, 3) + " over 20 pairs, n=1 z = " +
                                                  fmt(z, 3) + ", " + fmt(seconds_since(t0), 3) + " s"};
}

Outcome group_volume_a1() {
  const double v = group_volume(killing_metric(build_root_system('A', 1)));
  const double expected = 32.0 * std::sqrt(2.0) * pi * pi;
  const double rel = std::abs(v - expected) / expected;
  return {rel <= 1e-10, "vol = " + fmt(v, 15) + ", relative error " + fmt(rel, 3)};
}

Outcome radius_formula() {
  const auto pi012 = a1({0, 1, 2});
  const double r = killing_radius(pi012);
  double oracle_gap = 0.0;
  const std::array<std::array<double, 3>, 3> basis{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  for (const auto& e : basis) oracle_gap = std::max(oracle_gap, std::abs(std::sqrt(mc::su2_f_form_oracle(pi012, e, e)) - 0.5));
  std::array<double, 3> xi{0.3, -0.5, 0.8};
  const double nrm = std::sqrt(0.09 + 0.25 + 0.64);
  for (double& x : xi) x /= nrm;
  oracle_gap = std::max(oracle_gap, std::abs(std::sqrt(mc::su2_f_form_oracle(pi012, xi, xi)) - 0.5));
  const double adj = killing_radius(a1({2}));
  return {std::abs(r - 0.5) <= 1e-12 && oracle_gap <= 1e-4 && std::abs(adj - 1.0 / std::sqrt(3.0)) <= 1e-15,
          "r = " + fmt(r, 15) + ", oracle gap " + fmt(oracle_gap, 3) + ", adjoint r = " + fmt(adj, 15)};
}

Outcome bkk_routes() {
  double worst = 0.0;
  int cases = 0;
  for (const std::string code : {"A1", "A2"}) {
    const auto rs = root_system_from_code(code);
    const auto u = unit_volume_metric(rs);
    const auto n = static_cast<std::size_t>(rs.group_dimension());
    std::vector<IntVector> weights;
    if (rs.rank == 1) {
      for (int a = 1; a <= 4; ++a) weights.push_back({a});
    } else {
      for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
          if (a + b > 0) weights.push_back({a, b});
    }
    std::vector<RepEnsemble> ensembles;
    for (const auto& w : weights) ensembles.push_back(RepEnsemble(rs, {{w, 1}}));
    if (rs.rank == 1) ensembles.push_back(a1({0, 1, 2, 3, 4}));
    else ensembles.push_back(RepEnsemble(rs, {{{1, 1}, 1}, {{2, 0}, 1}, {{0, 2}, 1}}));
    for (const auto& pi : ensembles) {
      const std::vector<RepEnsemble> ens(n, pi);
      const double lattice = complex_count_reductive_lattice(ens);
      const double bodies = complex_count_reductive_bodies(ens, u);
      worst = std::max(worst, std::abs(lattice - bodies) / lattice);
      ++cases;
    }
  }
  return {worst <= 1e-9, std::to_string(cases) + " ensembles, max relative gap " + fmt(worst, 3)};
}

Outcome radius_convergence() {
  const auto rs = build_root_system('A', 1);
  const double target = asymptotic_radius_ball(killing_metric(rs), 1.0);
  std::string detail = "m*gap:";
  bool ok = true;
  double prev = 1e9;
  for (int m : {4, 8, 16, 32}) {
    const double gap = std::abs(killing_radius(ball_spectrum(rs, 1.0, m)) / m - target);
    detail += " " + fmt(m * gap, 3);
    ok = ok && gap < prev && m * gap < 2.0;
    prev = gap;
  }
  return {ok, detail + " (target r/sqrt(5) = " + fmt(target) + ")"};
}

Outcome limit_invariance() {
  const auto rs = build_root_system('A', 1);
  const double direct = limit_real_proportion_group(rs, LimitRoute::unit_volume);
  const double rescaled = limit_real_proportion_group(rs, LimitRoute::killing_rescaled);
  const double rel = std::abs(direct - rescaled) / direct;
  bool trend = true;
  double prev = 1e9;
  std::string props;
  for (int m : {4, 8, 16, 32, 64}) {
    const double p = real_proportion_group(ball_spectrum(rs, 1.0, m), killing_metric(rs)).proportion;
    trend = trend && std::abs(p - direct) < prev;
    prev = std::abs(p - direct);
    props += " " + fmt(p, 4);
  }
  return {rel <= 1e-10 && trend, "limit " + fmt(direct, 10) + " (both routes, gap " + fmt(rel, 3) +
                                     "); proportions m=4..64:" + props};
}

Outcome property_suites() {
  std::vector<std::string> failed;
  auto check = [&](bool ok, const std::string& name) {
    if (!ok) failed.push_back(name);
  };

  // Mixed volumes of polytopes: symmetry, multilinearity, polarization of equal arguments.
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> coord(-2, 2);
  auto random_polytope = [&] {
    for (;;) {
      std::vector<std::vector<int>> pts;
      for (int i = 0; i < 6; ++i) pts.push_back({coord(rng), coord(rng), coord(rng)});
      auto p = convex_hull_of_integers(pts);
      if (p.full_dimensional()) return p;
    }
  };
  for (int trial = 0; trial < 5; ++trial) {
    const auto a = random_polytope(), b = random_polytope(), c = random_polytope(), d = random_polytope();
    const Rational v = mixed_volume_polytopes_exact({a, b, c});
    check(v == mixed_volume_polytopes_exact({c, a, b}) && v == mixed_volume_polytopes_exact({b, c, a}), "symmetry");
    const auto combo = minkowski_sum(a.scaled(Rational(2)), d.scaled(Rational(3)));
    check(mixed_volume_polytopes_exact({combo, b, c}) ==
              2 * mixed_volume_polytopes_exact({a, b, c}) + 3 * mixed_volume_polytopes_exact({d, b, c}),
          "multilinearity");
    check(mixed_volume_polytopes_exact({a, a.translated({1, 0, 0}), a.translated({0, 1, 1})}) == a.exact_volume(),
          "polarization");
  }

  // Mixed volumes of ellipsoids: symmetry and the scaled-ball case.
  {
    std::mt19937_64 erng(5);
    const std::vector<Ellipsoid> e{random_ellipse(erng), random_ellipse(erng)};
    const double v = mixed_volume_ellipsoids(e, MixedVolumeMethod::exact2d).value;
    check(std::abs(v - mixed_volume_ellipsoids({e[1], e[0]}, MixedVolumeMethod::exact2d).value) <= 1e-9 * v,
          "ellipsoid symmetry");
    const Ellipsoid ball(4.0 * Eigen::MatrixXd::Identity(2, 2));
    check(std::abs(mixed_volume_ellipsoids({e[0], e[0]}, MixedVolumeMethod::exact2d).value - e[0].volume()) <=
              1e-9 * e[0].volume(),
          "ellipsoid polarization");
    check(std::abs(mixed_volume_ellipsoids({ball, ball}, MixedVolumeMethod::exact2d).value - 4.0 * pi) <= 1e-9,
          "ball");
  }

  // Flattening leaves radii and mean counts unchanged.
  for (const auto& code : catalogue_codes()) {
    const auto rs = root_system_from_code(code);
    const RepEnsemble pi(rs, {{rs.highest_root, 3}, {IntVector(rs.rank, 0), 2}});
    const RepEnsemble flat = flatten(pi);
    const auto n = static_cast<std::size_t>(rs.group_dimension());
    const auto m = killing_metric(rs);
    const double a = mean_real_count_group(std::vector<RepEnsemble>(n, pi), m);
    const double b = mean_real_count_group(std::vector<RepEnsemble>(n, flat), m);
    check(killing_radius(pi) == killing_radius(flat) && std::abs(a - b) <= 1e-12 * b, "flattening " + code);
  }

  // Hodge-type inequalities are equalities for A1.
  {
    const auto m = killing_metric(build_root_system('A', 1));
    const std::vector<RepEnsemble> reps{a1({1}), a1({2}), a1({0, 1, 2}), a1({3, 4})};
    auto M = [&](const RepEnsemble& x, const RepEnsemble& y, const RepEnsemble& z) {
      return mean_real_count_group({x, y, z}, m);
    };
    for (const auto& p : reps)
      for (const auto& q : reps)
        for (const auto& r : reps) {
          const double v = M(p, q, r);
          check(std::abs(v * v - M(p, q, q) * M(p, r, r)) <= 1e-10 * v * v, "hodge (1)");
          check(std::abs(std::pow(v, 3) - M(p, p, p) * M(q, q, q) * M(r, r, r)) <= 1e-10 * std::pow(v, 3),
                "hodge (2)");
        }
  }

  // Equidistribution of zeros, three seeds each on T^1 and T^2.
  std::string pvalues;
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto c = mc::run_circle_ensemble(segment_support(5), 300, seed, true);
    const auto ec = mc::equidistribution_check(c.zeros, mc::Box{{{0.0, 0.5}}});
    const auto s = box_support(2, 1);
    const auto t = mc::run_torus2_ensemble(s, s, 300, seed, true);
    const auto et = mc::equidistribution_check(t.zeros, mc::Box{{{0.0, 0.5}, {0.0, 0.5}}});
    check(ec.p_value > 0.001 && et.p_value > 0.001, "equidistribution seed " + std::to_string(seed));
    pvalues += " " + fmt(ec.p_value, 3) + "/" + fmt(et.p_value, 3);
  }

  std::string detail = failed.empty() ? "all properties hold" : "failed:";
  for (const auto& f : failed) detail += " " + f;
  return {failed.empty(), detail + "; equidistribution p (T1/T2):" + pvalues};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"beta table", beta_table},
      {"segment proportion closed form", kac_exact},
      {"ball-support limit identity", kac_limit_identity},
      {"Monte Carlo zeros on T^1", mc_circle},
      {"Monte Carlo zeros on T^2", mc_torus2},
      {"mixed volume oracles", mixed_volume_oracles},
      {"group volume of SU(2)", group_volume_a1},
      {"radius formula", radius_formula},
      {"complex count routes", bkk_routes},
      {"asymptotic radius convergence", radius_convergence},
      {"limit normalization invariance", limit_invariance},
      {"property suites", property_suites},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failures ? 1 : 0;
}
