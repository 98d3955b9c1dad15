#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss.hpp>

#include "realroots/core/numeric.hpp"
#include "realroots/group/rep_ensemble.hpp"

namespace realroots::mc {

using cplx = std::complex<double>;

/// Element [[alpha, -conj(beta)], [beta, conj(alpha)]] of SU(2).
struct Su2 {
  cplx alpha{1.0, 0.0};
  cplx beta{0.0, 0.0};

  Eigen::Matrix2cd matrix() const {
    Eigen::Matrix2cd u;
    u << alpha, -std::conj(beta), beta, std::conj(alpha);
    return u;
  }

  friend Su2 operator*(const Su2& g, const Su2& h) {
    const Eigen::Matrix2cd m = g.matrix() * h.matrix();
    return {m(0, 0), m(1, 0)};
  }
};

/// Unit quaternion (q0, q1, q2, q3) as q0 I + i (q1 s1 + q2 s2 + q3 s3), s_j the Pauli matrices.
inline Su2 su2_from_quaternion(const std::array<double, 4>& q) {
  const double norm = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
  if (std::abs(norm - 1.0) > 1e-9) throw invalid_input("su2_from_quaternion: not a unit quaternion");
  return {{q[0], q[3]}, {-q[2], q[1]}};
}

/// exp(X) for X = sum xi_j i s_j / (2 sqrt2). This basis is orthonormal for
/// minus the Killing form B(X, Y) = 4 tr(XY), so |xi| is the Killing norm.
inline Su2 su2_exp(const std::array<double, 3>& xi) {
  const double s = 1.0 / (2.0 * std::sqrt(2.0));
  const double v = s * std::sqrt(xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]);
  if (v == 0.0) return {};
  const double c = std::cos(v), f = std::sin(v) * s / v;
  return su2_from_quaternion({c, f * xi[0], f * xi[1], f * xi[2]});
}

/// Matrix of g on homogeneous polynomials of degree k in (x, y), acting by
/// P -> P((x, y) g), in the orthonormal basis x^{k-j} y^j / sqrt((k-j)! j!).
inline Eigen::MatrixXcd su2_matrix_elements(int k, const Su2& g) {
  if (k < 0) throw invalid_input("su2_matrix_elements: negative weight");
  const cplx a = g.alpha, b = g.beta, c = -std::conj(g.beta), d = std::conj(g.alpha);
  Eigen::MatrixXcd t(k + 1, k + 1);
  for (int j = 0; j <= k; ++j) {
    // (a x + b y)^{k-j} (c x + d y)^j, coefficients indexed by the power of y.
    std::vector<cplx> p{1.0};
    auto times = [&](cplx u, cplx v) {
      std::vector<cplx> q(p.size() + 1, 0.0);
      for (std::size_t i = 0; i < p.size(); ++i) {
        q[i] += p[i] * u;
        q[i + 1] += p[i] * v;
      }
      p.swap(q);
    };
    for (int r = 0; r < k - j; ++r) times(a, b);
    for (int r = 0; r < j; ++r) times(c, d);
    for (int i = 0; i <= k; ++i)
      t(i, j) = p[static_cast<std::size_t>(i)] *
                std::sqrt(factorial(k - i) * factorial(i) / (factorial(k - j) * factorial(j)));
  }
  return t;
}

struct HaarNode {
  Su2 g;
  double weight;
};

/// Quadrature for Haar measure on SU(2) with alpha = cos(eta) e^{i a}, beta = sin(eta) e^{i b}:
/// u = sin^2(eta) is uniform on [0, 1] (30-point Gauss-Legendre) and a, b are
/// uniform angles (phases points each). Exact for products of matrix elements
/// of total weight below phases.
inline std::vector<HaarNode> su2_haar_nodes(int phases = 32) {
  using rule = boost::math::quadrature::gauss<double, 30>;
  std::vector<HaarNode> out;
  const auto& x = rule::abscissa();
  const auto& w = rule::weights();
  for (std::size_t i = 0; i < x.size(); ++i)
    for (int sign : {1, -1}) {
      if (i == 0 && sign < 0 && x[0] == 0.0) continue;
      const double u = 0.5 * (1.0 + sign * x[i]);  // nodes on [-1, 1] mapped to [0, 1]
      const double wu = 0.5 * w[i];
      const double ca = std::sqrt(1.0 - u), sb = std::sqrt(u);
      for (int p = 0; p < phases; ++p)
        for (int q = 0; q < phases; ++q)
          out.push_back({{std::polar(ca, two_pi * p / phases), std::polar(sb, two_pi * q / phases)},
                         wu / static_cast<double>(phases * phases)});
    }
  return out;
}

template <class F>
cplx su2_haar_integral(F&& f, int phases = 32) {
  cplx s = 0.0;
  for (const auto& node : su2_haar_nodes(phases)) s += node.weight * f(node.g);
  return s;
}

/// d mu_k (xi) by central differences of t(exp(+-h X)) at h and h/2, Richardson extrapolated.
inline Eigen::MatrixXcd su2_differential(int k, const std::array<double, 3>& xi, double step = 1e-5) {
  auto central = [&](double h) {
    std::array<double, 3> plus{h * xi[0], h * xi[1], h * xi[2]};
    std::array<double, 3> minus{-h * xi[0], -h * xi[1], -h * xi[2]};
    return Eigen::MatrixXcd((su2_matrix_elements(k, su2_exp(plus)) - su2_matrix_elements(k, su2_exp(minus))) / (2.0 * h));
  };
  const Eigen::MatrixXcd d1 = central(step), d2 = central(0.5 * step);
  const Eigen::MatrixXcd r = (4.0 * d2 - d1) / 3.0;
  const double scale = 1.0 + r.norm();
  if (!std::isfinite(r.norm()) || (r - d2).norm() > 1e-4 * scale)
    throw numeric_failure("su2_differential: extrapolation did not converge");
  return r;
}

/// F(pi)(xi, eta) = (1/N) sum over the flattened spectrum of sum_{ij} df_ij(xi) conj(df_ij(eta)),
/// f_ij = sqrt(p) t_ij and N = sum p^2, from numerical differentials at the identity.
inline double su2_f_form_oracle(const RepEnsemble& pi, const std::array<double, 3>& xi, const std::array<double, 3>& eta) {
  if (pi.system().code != "A1") throw invalid_input("su2_f_form_oracle: need an A1 ensemble");
  double num = 0.0, den = 0.0;
  for (const auto& e : pi.entries()) {
    const int k = e.weight[0];
    if (k > 6) throw invalid_input("su2_f_form_oracle: weights above 6 omega are not supported");
    const double p = k + 1.0;
    const Eigen::MatrixXcd dx = su2_differential(k, xi);
    const Eigen::MatrixXcd de = su2_differential(k, eta);
    num += p * (dx.array() * de.array().conjugate()).sum().real();
    den += p * p;
  }
  return num / den;
}

}  // namespace realroots::mc
