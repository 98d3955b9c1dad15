#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "realroots/convex/ellipsoid.hpp"
#include "realroots/convex/integration.hpp"
#include "realroots/convex/mixed_volume.hpp"
#include "realroots/convex/polytope.hpp"
#include "realroots/core/numeric.hpp"
#include "realroots/core/polynomial.hpp"
#include "realroots/group/rep_ensemble.hpp"
#include "realroots/roots/metric.hpp"
#include "realroots/roots/weyl.hpp"

namespace realroots {

/// Ell(pi) of a simple group is a ball; it is kept as its radius in a metric.
struct NewtonBall {
  double radius = 0.0;
  Metric metric;

  /// The ball as an ellipsoid in orthonormal coordinates of (k*, metric).
  Ellipsoid ellipsoid() const { return Ellipsoid::ball(static_cast<std::size_t>(metric.system.group_dimension()), radius); }
};

/// r_K^2 = sum p^2(lambda) (lambda, lambda + 2 rho) / (n (alpha, alpha + 2 rho) sum p^2(lambda))
/// over the flattened spectrum, p = dimension, Killing normalisation.
inline double killing_radius(const RepEnsemble& pi) {
  const RootSystem& rs = pi.system();
  const Metric k = killing_metric(rs);
  double num = 0.0, den = 0.0;
  for (const auto& e : pi.entries()) {
    const double p = static_cast<double>(weyl_dim(rs, e.weight));
    num += p * p * casimir(k, e.weight).value;
    den += p * p;
  }
  return std::sqrt(num / (rs.group_dimension() * den));
}

/// F(pi) as the ball Ell(pi) with radius measured in metric m: r_M = sqrt(scale) r_K.
inline NewtonBall f_form(const RepEnsemble& pi, const Metric& m) {
  if (pi.system().code != m.system.code) throw invalid_input("f_form: metric belongs to another root system");
  return {std::sqrt(m.scale) * killing_radius(pi), m};
}

/// Delta(mu) = conv of the Weyl orbits of the highest weights, fundamental-weight coordinates.
inline Polytope weighted_polytope(const RepEnsemble& mu) {
  std::vector<std::vector<int>> pts;
  for (const auto& e : mu.entries())
    for (auto& w : weyl_orbit(mu.system(), e.weight)) pts.push_back(w);
  return convex_hull_of_integers(pts);
}

/// P_M(x)^2 as a polynomial in fundamental-weight coordinates x.
inline Polynomial p_squared_fundamental(const Metric& m) {
  const int k = m.system.rank;
  const Eigen::MatrixXd g = weight_gram(m);
  Polynomial p = Polynomial::constant(static_cast<std::size_t>(k), 1.0);
  for (const auto& beta : m.system.positive_roots) {
    std::vector<double> c(static_cast<std::size_t>(k), 0.0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) c[i] += g(i, j) * beta[j];
    p = p * Polynomial::linear(c);
  }
  return p * p;
}

/// int_Delta P_M^2 dx with dx the lattice measure (unit fundamental cell).
/// P is evaluated as a product of linear forms; expanding it loses digits for G2.
inline double integrate_p_squared(const Polytope& delta, const Metric& m) {
  const int k = m.system.rank;
  if (delta.dim() != static_cast<std::size_t>(k)) throw dimension_mismatch("integrate_p_squared");
  const Eigen::MatrixXd g = weight_gram(m);
  std::vector<std::vector<double>> forms;
  for (const auto& beta : m.system.positive_roots) {
    std::vector<double> c(static_cast<std::size_t>(k), 0.0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) c[i] += g(i, j) * beta[j];
    forms.push_back(std::move(c));
  }
  return integrate_over_polytope(delta, 2 * static_cast<int>(forms.size()), [&](std::span<const double> x) {
    double p = 1.0;
    for (const auto& c : forms) {
      double v = 0.0;
      for (int i = 0; i < k; ++i) v += c[i] * x[i];
      p *= v;
    }
    return p * p;
  });
}

/// vol(N(mu)) = vol(K) / (|W| vol(T)) int_Delta P^2 dnu, measured with metric m.
inline double newton_body_volume(const RepEnsemble& mu, const Metric& m) {
  const Polytope delta = weighted_polytope(mu);
  const double s = weight_lattice_covolume(m);
  return group_volume(m) / (static_cast<double>(m.system.weyl_order) * torus_volume(m)) * s *
         integrate_p_squared(delta, m);
}

namespace detail {

inline void check_group_system(const std::vector<RepEnsemble>& ensembles) {
  if (ensembles.empty()) throw invalid_input("need at least one ensemble");
  const RootSystem& rs = ensembles.front().system();
  for (const auto& e : ensembles)
    if (e.system().code != rs.code) throw invalid_input("ensembles belong to different root systems");
  if (static_cast<int>(ensembles.size()) != rs.group_dimension())
    throw dimension_mismatch("need n = dim K ensembles (n = " + std::to_string(rs.group_dimension()) + ")");
}

inline bool same_spectrum(const RepEnsemble& a, const RepEnsemble& b) { return a.spectrum() == b.spectrum(); }

/// Polarization of a functional of weighted polytopes, evaluated on Minkowski
/// combinations sum c_j Delta(mu_j). A single distinct argument needs no sums.
template <class F>
double polarize_weighted(const std::vector<RepEnsemble>& ensembles, F&& functional) {
  auto groups = group_arguments(ensembles, same_spectrum);
  std::vector<Polytope> deltas;
  for (const auto& g : groups) deltas.push_back(weighted_polytope(*g.item));
  if (groups.size() == 1) return functional(deltas.front());
  return polarize<double>(groups, [&](const std::vector<int>& c) {
    Polytope sum;
    bool first = true;
    for (std::size_t j = 0; j < groups.size(); ++j) {
      if (c[j] == 0) continue;
      Polytope term = deltas[j].scaled(Rational(c[j]));
      sum = first ? term : minkowski_sum(sum, term);
      first = false;
    }
    return functional(sum);
  });
}

}  // namespace detail

/// Route via the weighted polytopes: N = n!/|W| J(Delta_1..Delta_n; P^2/P^2(rho)),
/// with the lattice-normalised measure.
inline double complex_count_reductive_lattice(const std::vector<RepEnsemble>& ensembles) {
  detail::check_group_system(ensembles);
  const RootSystem& rs = ensembles.front().system();
  const Metric k = killing_metric(rs);
  const double p_rho = p_poly(k, rs.rho);
  const double j = detail::polarize_weighted(ensembles, [&](const Polytope& d) {
    return integrate_p_squared(d, k) / (p_rho * p_rho);
  });
  return factorial(rs.group_dimension()) / static_cast<double>(rs.weyl_order) * j;
}

/// Newton-body volume in the normalisation under which N = n!/P^2(rho) V(N_1..N_n):
/// vol_dnu(N) (2 pi)^k / (s^2 vol(K)), s the covolume of the weight lattice.
inline double newton_body_volume_bkk(const Polytope& delta, const Metric& m) {
  const double s = weight_lattice_covolume(m);
  const double vol_k = group_volume(m);
  const double vol_dnu =
      vol_k / (static_cast<double>(m.system.weyl_order) * torus_volume(m)) * s * integrate_p_squared(delta, m);
  return vol_dnu * std::pow(two_pi, m.system.rank) / (s * s * vol_k);
}

/// Route via Newton bodies in metric m: N = n!/P_m^2(rho) V(N(mu_1), ..., N(mu_n)).
inline double complex_count_reductive_bodies(const std::vector<RepEnsemble>& ensembles, const Metric& m) {
  detail::check_group_system(ensembles);
  const RootSystem& rs = ensembles.front().system();
  const double p_rho = p_poly(m, rs.rho);
  const double v = detail::polarize_weighted(ensembles, [&](const Polytope& d) { return newton_body_volume_bkk(d, m); });
  return factorial(rs.group_dimension()) / (p_rho * p_rho) * v;
}

inline double complex_count_reductive(const std::vector<RepEnsemble>& ensembles) {
  return complex_count_reductive_lattice(ensembles);
}

/// M = vol_M(K) n!/(2 pi)^n sigma_n prod r_{i,M}; invariant under rescaling M.
inline double mean_real_count_group(const std::vector<RepEnsemble>& ensembles, const Metric& m) {
  detail::check_group_system(ensembles);
  const int n = m.system.group_dimension();
  double v = unit_ball_volume(n);
  for (const auto& e : ensembles) v *= f_form(e, m).radius;
  return group_volume(m) * factorial(n) / std::pow(two_pi, n) * v;
}

struct GroupEnsembleResult {
  std::vector<double> r_killing;
  double mean_real = 0.0;
  double complex_count = 0.0;
  double complex_count_bodies = 0.0;
  double proportion = 0.0;
  double proportion_formula = 0.0;  // P^2(rho)/(2pi)^n V(Ell)/V(N) in the unit-volume metric
  Metric normalization;
};

inline GroupEnsembleResult real_proportion_group(const std::vector<RepEnsemble>& ensembles, const Metric& m) {
  detail::check_group_system(ensembles);
  const RootSystem& rs = ensembles.front().system();
  GroupEnsembleResult r;
  r.normalization = m;
  for (const auto& e : ensembles) r.r_killing.push_back(killing_radius(e));
  r.complex_count = complex_count_reductive_lattice(ensembles);
  if (!(r.complex_count > 0.0)) throw invalid_input("real_proportion_group: generic complex count is zero");
  r.mean_real = mean_real_count_group(ensembles, m);
  r.proportion = r.mean_real / r.complex_count;

  const Metric u = unit_volume_metric(rs);
  const int n = rs.group_dimension();
  double ell = unit_ball_volume(n);
  for (const auto& e : ensembles) ell *= f_form(e, u).radius;
  const double bodies = detail::polarize_weighted(ensembles, [&](const Polytope& d) { return newton_body_volume_bkk(d, u); });
  const double p_rho = p_poly(u, rs.rho);
  r.complex_count_bodies = factorial(n) / (p_rho * p_rho) * bodies;
  r.proportion_formula = p_rho * p_rho / std::pow(two_pi, n) * ell / bodies;
  return r;
}

inline GroupEnsembleResult real_proportion_group(const RepEnsemble& pi, const Metric& m) {
  return real_proportion_group(std::vector<RepEnsemble>(static_cast<std::size_t>(pi.system().group_dimension()), pi), m);
}

namespace detail {

inline void require_symmetric_invariant(const RootSystem& rs, const Polytope& delta) {
  const auto& verts = delta.vertices();
  for (const auto& v : verts) {
    RationalVector neg = v;
    for (auto& x : neg) x = -x;
    if (!std::binary_search(verts.begin(), verts.end(), neg))
      throw invalid_input("asymptotic_radius: Delta is not centrally symmetric");
    for (int i = 0; i < rs.rank; ++i) {
      RationalVector w = v;
      for (int j = 0; j < rs.rank; ++j) w[j] -= v[i] * rs.cartan[i][j];
      if (!std::binary_search(verts.begin(), verts.end(), w))
        throw invalid_input("asymptotic_radius: Delta is not Weyl invariant");
    }
  }
}

}  // namespace detail

/// Killing radius of the limit ball of Ell(pi_m(Delta))/m for Delta a ball of
/// radius r in metric m: int P^2 |x|^2 / (n (alpha, alpha + 2 rho)_M int P^2).
inline double asymptotic_radius_ball(const Metric& m, double r) {
  if (r < 0) throw invalid_input("asymptotic_radius: negative radius");
  if (r == 0) return 0.0;
  const int k = m.system.rank;
  const Polynomial p2 = p_squared_orthonormal(m);
  Polynomial norm2(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    IntVector e(static_cast<std::size_t>(k), 0);
    e[i] = 2;
    norm2.add_term(e, 1.0);
  }
  const double num = integrate_over_ball(p2 * norm2, r);
  const double den = integrate_over_ball(p2, r);
  return std::sqrt(num / (m.system.group_dimension() * m.scale * den));
}

/// Same for a centrally symmetric, Weyl invariant polytope in fundamental coordinates.
inline double asymptotic_radius(const Metric& m, const Polytope& delta) {
  if (delta.dim() != static_cast<std::size_t>(m.system.rank)) throw dimension_mismatch("asymptotic_radius");
  detail::require_symmetric_invariant(m.system, delta);
  if (!delta.full_dimensional()) return 0.0;
  const int k = m.system.rank;
  const Polynomial p2 = p_squared_fundamental(m);
  const Eigen::MatrixXd g = weight_gram(m);
  Polynomial norm2(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      IntVector e(static_cast<std::size_t>(k), 0);
      ++e[i];
      ++e[j];
      norm2.add_term(e, g(i, j));
    }
  const double num = integrate_polynomial_over_polytope(delta, p2 * norm2);
  const double den = integrate_polynomial_over_polytope(delta, p2);
  return std::sqrt(num / (m.system.group_dimension() * m.scale * den));
}

/// M(pi_m(B_r)) ~ vol_M(K) n!/(2 pi)^n sigma_n (m r_M)^n / (n+2)^{n/2}, with r the
/// Killing radius of B and r_M = sqrt(scale) r its radius in metric m.
inline double asymptotic_mean(const Metric& m, double r, int mult) {
  if (r <= 0 || mult < 1) throw invalid_input("asymptotic_mean: need r > 0 and m >= 1");
  const int n = m.system.group_dimension();
  const double r_m = std::sqrt(m.scale) * r * mult;
  return group_volume(m) * factorial(n) / std::pow(two_pi, n) * unit_ball_volume(n) * std::pow(r_m, n) /
         std::pow(n + 2.0, 0.5 * n);
}

enum class LimitRoute { unit_volume, killing_rescaled };

/// lim real(pi_m(B)) = vol(K)^2 s^2 P^2(rho) / ((2 pi)^{n+k} (n+2)^{n/2}), a scale-free
/// combination evaluated in the unit-volume metric, either directly or by
/// rescaling the Killing quantities.
inline double limit_real_proportion_group(const RootSystem& rs, LimitRoute route = LimitRoute::unit_volume) {
  const int n = rs.group_dimension();
  const int k = rs.rank;
  const int pos = static_cast<int>(rs.positive_root_count());
  double vol = 0.0, s = 0.0, p_rho = 0.0;
  if (route == LimitRoute::unit_volume) {
    const Metric u = unit_volume_metric(rs);
    vol = group_volume(u);
    s = weight_lattice_covolume(u);
    p_rho = p_poly(u, rs.rho);
  } else {
    const Metric kill = killing_metric(rs);
    const double vol_k = group_volume(kill);
    const double c = std::pow(vol_k, 2.0 / n);
    vol = vol_k * std::pow(c, -0.5 * n);
    s = weight_lattice_covolume(kill) * std::pow(c, 0.5 * k);
    p_rho = p_poly(kill, rs.rho) * std::pow(c, pos);
  }
  return vol * vol * s * s * p_rho * p_rho / (std::pow(two_pi, n + k) * std::pow(n + 2.0, 0.5 * n));
}

/// The limit constant as printed, P^2(rho)/((2 pi)^n (n+2)^{n/2} (alpha, alpha+2rho)^{n/2})
/// in the unit-volume metric; reported for auditing only.
inline double literal_limit_constant(const RootSystem& rs) {
  const Metric u = unit_volume_metric(rs);
  const int n = rs.group_dimension();
  const double p_rho = p_poly(u, rs.rho);
  const double cas = casimir(u, rs.highest_root).value;
  return p_rho * p_rho / (std::pow(two_pi, n) * std::pow(n + 2.0, 0.5 * n) * std::pow(cas, 0.5 * n));
}

}  // namespace realroots
