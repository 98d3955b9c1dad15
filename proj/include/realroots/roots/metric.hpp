#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "realroots/core/numeric.hpp"
#include "realroots/core/polynomial.hpp"
#include "realroots/roots/root_system.hpp"

namespace realroots {

/// Invariant inner product on t*: `scale` times the Killing-dual form, which
/// is normalised by (alpha, alpha + 2 rho) = 1 for the highest root alpha.
struct Metric {
  RootSystem system;
  double scale = 1.0;
};

inline Metric killing_metric(const RootSystem& rs) { return {rs, 1.0}; }

inline Metric scaled_metric(const Metric& m, double factor) { return {m.system, m.scale * factor}; }

/// Gram matrix of the fundamental weights in metric M.
inline Eigen::MatrixXd weight_gram(const Metric& m) {
  const int k = m.system.rank;
  Eigen::MatrixXd g(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) g(i, j) = m.scale * to_double(m.system.killing_gram[i][j]);
  return g;
}

/// (x, y)_M for weights in fundamental coordinates.
inline double killing_pairing(const Metric& m, std::span<const double> x, std::span<const double> y) {
  const auto k = static_cast<std::size_t>(m.system.rank);
  if (x.size() != k || y.size() != k) throw dimension_mismatch("killing_pairing");
  double s = 0.0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) s += to_double(m.system.killing_gram[i][j]) * x[i] * y[j];
  return m.scale * s;
}

inline double killing_pairing(const Metric& m, const IntVector& x, const IntVector& y) {
  if (x.size() != y.size() || x.size() != static_cast<std::size_t>(m.system.rank))
    throw dimension_mismatch("killing_pairing");
  return m.scale * to_double(m.system.killing(x, y));
}

/// P(lambda) = prod over positive roots beta of (lambda, beta)_M.
inline double p_poly(const Metric& m, std::span<const double> lambda) {
  if (lambda.size() != static_cast<std::size_t>(m.system.rank)) throw dimension_mismatch("p_poly");
  double p = 1.0;
  for (const auto& beta : m.system.positive_roots) {
    std::vector<double> b(beta.begin(), beta.end());
    p *= killing_pairing(m, lambda, b);
  }
  return p;
}

inline double p_poly(const Metric& m, const IntVector& lambda) {
  std::vector<double> l(lambda.begin(), lambda.end());
  return p_poly(m, l);
}

struct CasimirValue {
  double value = 0.0;  // (lambda, lambda + 2 rho)_M
  double level = 0.0;  // ratio to the adjoint value (alpha, alpha + 2 rho)_M
};

inline CasimirValue casimir(const Metric& m, const IntVector& lambda) {
  if (lambda.size() != static_cast<std::size_t>(m.system.rank)) throw dimension_mismatch("casimir");
  IntVector shifted = lambda;
  for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += 2 * m.system.rho[i];
  const Rational exact = m.system.killing(lambda, shifted);
  // At Killing scale the adjoint value is exactly 1.
  return {m.scale * to_double(exact), to_double(exact)};
}

/// Covolume of the weight lattice Z^k in metric M: sqrt(det Gram(omega)).
inline double weight_lattice_covolume(const Metric& m) {
  const Rational det = detail::rational_determinant(m.system.killing_gram);
  return std::sqrt(to_double(det)) * std::pow(m.scale, 0.5 * m.system.rank);
}

/// Volume of the maximal torus t / ker(exp) of the simply connected group:
/// (2 pi)^k sqrt(det Gram(coroots)), with the metric on t dual to M.
inline double torus_volume(const Metric& m, bool simply_connected = true) {
  if (!simply_connected) throw unsupported("torus_volume: only the simply connected form is supported");
  const RootSystem& rs = m.system;
  const auto k = static_cast<std::size_t>(rs.rank);
  RationalMatrix coroot_gram(k, RationalVector(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const auto ai = rs.simple_root(static_cast<int>(i));
      const auto aj = rs.simple_root(static_cast<int>(j));
      coroot_gram[i][j] = 4 * rs.killing(ai, aj) / (rs.killing(ai, ai) * rs.killing(aj, aj));
    }
  const double det = to_double(detail::rational_determinant(coroot_gram));
  return std::pow(two_pi, static_cast<double>(k)) * std::sqrt(det) * std::pow(m.scale, -0.5 * rs.rank);
}

/// P^2 as a polynomial in orthonormal coordinates u of (t*, M).
inline Polynomial p_squared_orthonormal(const Metric& m) {
  const int k = m.system.rank;
  Eigen::LLT<Eigen::MatrixXd> llt(weight_gram(m));
  const Eigen::MatrixXd r = llt.matrixL().transpose();  // G = R^T R, u = R x
  Polynomial p = Polynomial::constant(static_cast<std::size_t>(k), 1.0);
  for (const auto& beta : m.system.positive_roots) {
    Eigen::VectorXd b(k);
    for (int i = 0; i < k; ++i) b[i] = beta[static_cast<std::size_t>(i)];
    const Eigen::VectorXd coeff = r * b;  // (x, beta)_M = (R beta) . u
    std::vector<double> c(coeff.data(), coeff.data() + k);
    p = p * Polynomial::linear(c);
  }
  return p * p;
}

/// vol(K) from Weyl's integration formula with f the unit-ball indicator:
/// vol(K) = |W| vol(T) sigma_n / int_{B_1 in t*} P^2 dnu.
inline double group_volume(const Metric& m) {
  const RootSystem& rs = m.system;
  const int n = rs.group_dimension();
  const double ball_integral = integrate_over_ball(p_squared_orthonormal(m), 1.0);
  return static_cast<double>(rs.weyl_order) * torus_volume(m) * unit_ball_volume(n) / ball_integral;
}

/// Rescaled Killing metric with vol(K) = 1. vol(K) scales as scale^{-n/2},
/// so the required scale is vol_Killing(K)^{2/n}.
inline Metric unit_volume_metric(const RootSystem& rs) {
  const double vol = group_volume(killing_metric(rs));
  return {rs, std::pow(vol, 2.0 / rs.group_dimension())};
}

inline nlohmann::json to_json(const Metric& m) { return {{"system", m.system.code}, {"scale", m.scale}}; }

inline Metric metric_from_json(const nlohmann::json& j) {
  Metric m{root_system_from_code(j.at("system").get<std::string>()), j.value("scale", 1.0)};
  if (!(m.scale > 0.0)) throw invalid_input("metric scale must be positive");
  return m;
}

}  // namespace realroots
