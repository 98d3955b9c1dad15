#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "realroots/core/numeric.hpp"
#include "realroots/roots/metric.hpp"
#include "realroots/roots/root_system.hpp"

namespace realroots {

inline bool is_dominant(const IntVector& lambda) {
  return std::all_of(lambda.begin(), lambda.end(), [](int x) { return x >= 0; });
}

inline void require_dominant(const RootSystem& rs, const IntVector& lambda, const char* where) {
  if (lambda.size() != static_cast<std::size_t>(rs.rank)) throw dimension_mismatch(where);
  if (!is_dominant(lambda)) throw invalid_input(std::string(where) + ": weight is not dominant");
}

/// W-orbit of an integral weight, each element paired with the sign of a Weyl
/// element reaching it. Signs are meaningful only for regular weights.
inline std::vector<std::pair<IntVector, int>> signed_weyl_orbit(const RootSystem& rs, const IntVector& lambda) {
  std::vector<std::pair<IntVector, int>> out{{lambda, 1}};
  std::set<IntVector> seen{lambda};
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    for (int i = 0; i < rs.rank; ++i) {
      IntVector w = rs.reflect(out[idx].first, i);
      if (seen.insert(w).second) out.emplace_back(w, -out[idx].second);
    }
  }
  return out;
}

inline std::vector<IntVector> weyl_orbit(const RootSystem& rs, const IntVector& lambda) {
  std::vector<IntVector> out;
  for (auto& [w, s] : signed_weyl_orbit(rs, lambda)) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

/// The unique dominant weight in the W-orbit of lambda.
inline IntVector dominant_representative(const RootSystem& rs, IntVector lambda) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < rs.rank; ++i) {
      if (lambda[static_cast<std::size_t>(i)] < 0) {
        lambda = rs.reflect(lambda, i);
        changed = true;
      }
    }
  }
  return lambda;
}

/// lambda' = -w0 lambda, the dominant weight in W(-lambda).
inline IntVector symmetric_partner(const RootSystem& rs, const IntVector& lambda) {
  require_dominant(rs, lambda, "symmetric_partner");
  IntVector neg = lambda;
  for (auto& x : neg) x = -x;
  return dominant_representative(rs, neg);
}

/// Weyl dimension formula prod (lambda + rho, beta) / (rho, beta).
inline std::uint64_t weyl_dim(const RootSystem& rs, const IntVector& lambda) {
  require_dominant(rs, lambda, "weyl_dim");
  IntVector shifted = lambda;
  for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += rs.rho[i];
  Rational d = 1;
  for (const auto& beta : rs.positive_roots) d *= rs.killing(shifted, beta) / rs.killing(rs.rho, beta);
  if (denominator(d) != 1) throw numeric_failure("weyl_dim: non-integral result");
  return numerator(d).convert_to<std::uint64_t>();
}

enum class RealityType { real, complex, quaternionic };

inline std::string to_string(RealityType t) {
  switch (t) {
    case RealityType::real: return "real";
    case RealityType::complex: return "complex";
    case RealityType::quaternionic: return "quaternionic";
  }
  return "real";
}

inline RealityType parse_reality_type(const std::string& s) {
  if (s == "real") return RealityType::real;
  if (s == "complex") return RealityType::complex;
  if (s == "quaternionic") return RealityType::quaternionic;
  throw invalid_input("unknown reality type: " + s);
}

/// Frobenius-Schur indicator (1/|W|) int_T chi_lambda(t^2) |A_rho(t)|^2 dt on the
/// torus theta in [0,1)^k, where a weight mu acts by exp(2 pi i mu.theta).
/// Using A_rho(2 theta) = A_rho(theta) prod_{beta>0} 2 cos(pi beta.theta), the
/// integrand is A_{lambda+rho}(2 theta) conj(A_rho(theta)) / prod 2 cos(...),
/// a trigonometric polynomial summed exactly on a shifted uniform grid.
inline double frobenius_schur_indicator(const RootSystem& rs, const IntVector& lambda, int min_grid = 64) {
  require_dominant(rs, lambda, "frobenius_schur_indicator");
  IntVector lr = lambda;
  for (std::size_t i = 0; i < lr.size(); ++i) lr[i] += rs.rho[i];
  const auto num = signed_weyl_orbit(rs, lr);
  const auto den = signed_weyl_orbit(rs, rs.rho);

  auto max_coord = [](const std::vector<std::pair<IntVector, int>>& orbit) {
    int m = 0;
    for (const auto& [w, s] : orbit)
      for (int x : w) m = std::max(m, std::abs(x));
    return m;
  };
  // Frequencies of the integrand are 2 mu + w rho - w' rho with mu in conv(W lambda).
  int grid = std::max(min_grid, 2 * (max_coord(signed_weyl_orbit(rs, lambda)) + max_coord(den)) + 2);
  if (grid % 2) ++grid;

  // Shift keeping every beta.theta away from the zeros of cos(pi beta.theta).
  std::vector<double> shift(static_cast<std::size_t>(rs.rank));
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  for (int attempt = 0;; ++attempt) {
    for (auto& s : shift) {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      s = static_cast<double>(state >> 11) / 9007199254740992.0;
    }
    double worst = 1.0;
    for (const auto& beta : rs.positive_roots) {
      double b = 0.0;
      for (std::size_t i = 0; i < shift.size(); ++i) b += beta[i] * shift[i];
      worst = std::min(worst, std::abs(b - std::round(b)));
    }
    if (worst > 0.05 || attempt > 1000) break;
  }

  const int k = rs.rank;
  std::vector<int> idx(static_cast<std::size_t>(k), 0);
  std::vector<double> theta(static_cast<std::size_t>(k));
  std::complex<double> sum = 0.0;
  std::size_t points = 0;
  while (true) {
    for (int i = 0; i < k; ++i) theta[i] = (idx[i] + shift[i]) / grid;
    std::complex<double> a_num = 0.0, a_den = 0.0;
    for (const auto& [w, s] : num) {
      double phase = 0.0;
      for (int i = 0; i < k; ++i) phase += w[i] * theta[i];
      a_num += static_cast<double>(s) * std::polar(1.0, 2.0 * two_pi * phase);
    }
    for (const auto& [w, s] : den) {
      double phase = 0.0;
      for (int i = 0; i < k; ++i) phase += w[i] * theta[i];
      a_den += static_cast<double>(s) * std::polar(1.0, two_pi * phase);
    }
    double cosines = 1.0;
    for (const auto& beta : rs.positive_roots) {
      double b = 0.0;
      for (int i = 0; i < k; ++i) b += beta[i] * theta[i];
      cosines *= 2.0 * std::cos(pi * b);
    }
    sum += a_num * std::conj(a_den) / cosines;
    ++points;
    int d = 0;
    while (d < k && ++idx[d] == grid) idx[d++] = 0;
    if (d == k) break;
  }
  return sum.real() / (static_cast<double>(points) * static_cast<double>(rs.weyl_order));
}

/// <lambda, 2 rho^vee> = sum over positive roots of 2 (lambda, beta) / (beta, beta).
inline BigInt coroot_height(const RootSystem& rs, const IntVector& lambda) {
  Rational h = 0;
  for (const auto& beta : rs.positive_roots) h += 2 * rs.killing(lambda, beta) / rs.killing(beta, beta);
  if (denominator(h) != 1) throw numeric_failure("coroot_height: non-integral result");
  return numerator(h);
}

/// Complex iff lambda' != lambda; a self-conjugate lambda is real or quaternionic
/// as <lambda, 2 rho^vee> is even or odd. frobenius_schur_indicator is the slow check.
inline RealityType reality_type(const RootSystem& rs, const IntVector& lambda) {
  if (symmetric_partner(rs, lambda) != lambda) return RealityType::complex;
  return coroot_height(rs, lambda) % 2 == 0 ? RealityType::real : RealityType::quaternionic;
}

/// All dominant integral weights with (lambda, lambda)_M <= r^2.
inline std::vector<IntVector> dominant_points_in_ball(const Metric& m, double r) {
  if (r < 0) throw invalid_input("dominant_points_in_ball: negative radius");
  const int k = m.system.rank;
  const Eigen::MatrixXd g = weight_gram(m);
  const double min_eig = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(g).eigenvalues().minCoeff();
  const int bound = static_cast<int>(std::floor(r / std::sqrt(min_eig) + 1e-9));
  const double limit = r * r * (1.0 + 1e-12) + 1e-300;
  std::vector<IntVector> out;
  IntVector cur(static_cast<std::size_t>(k), 0);
  while (true) {
    double norm = 0.0;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) norm += g(i, j) * cur[i] * cur[j];
    if (norm <= limit) out.push_back(cur);
    int d = 0;
    while (d < k && ++cur[d] > bound) cur[d++] = 0;
    if (d == k) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace realroots
