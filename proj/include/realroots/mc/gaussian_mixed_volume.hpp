#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "realroots/convex/ellipsoid.hpp"
#include "realroots/core/numeric.hpp"
#include "realroots/mc/random.hpp"

namespace realroots {

/// A numeric result together with its standard error (zero for exact paths).
struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
};

namespace mc {

/// Monte Carlo mixed volume of ellipsoids E(Q_1..Q_n):
///   V = (2 pi)^{n/2} / n! * E|det J|,  row i of J ~ N(0, Q_i).
inline Estimate gaussian_mixed_volume(const std::vector<Ellipsoid>& bodies, std::size_t samples,
                                      std::uint64_t seed) {
  const std::size_t n = bodies.size();
  if (n == 0) throw invalid_input("gaussian_mixed_volume: no bodies");
  if (samples < 2) throw invalid_input("gaussian_mixed_volume: need at least two samples");
  for (const auto& b : bodies)
    if (b.dim() != n) throw dimension_mismatch("gaussian_mixed_volume: need n bodies in dimension n");

  std::vector<Eigen::MatrixXd> factors;
  for (const auto& b : bodies) factors.push_back(b.sqrt_factor());

  constexpr std::size_t chunk = 4096;
  const std::size_t chunks = (samples + chunk - 1) / chunk;
  std::vector<double> sums(chunks, 0.0), squares(chunks, 0.0);
  const auto ni = static_cast<Eigen::Index>(n);

  parallel_for(chunks, [&](std::size_t c) {
    auto rng = child_stream(seed, c);
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXd jac(ni, ni);
    Eigen::VectorXd z(ni);
    const std::size_t begin = c * chunk;
    const std::size_t end = std::min(samples, begin + chunk);
    double s = 0.0, s2 = 0.0;
    for (std::size_t k = begin; k < end; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < ni; ++j) z[j] = normal(rng);
        jac.row(static_cast<Eigen::Index>(i)) = (factors[i] * z).transpose();
      }
      double det = (n == 1) ? jac(0, 0) : (n == 2) ? jac(0, 0) * jac(1, 1) - jac(0, 1) * jac(1, 0) : jac.determinant();
      det = std::abs(det);
      s += det;
      s2 += det * det;
    }
    sums[c] = s;
    squares[c] = s2;
  });

  double s = 0.0, s2 = 0.0;
  for (std::size_t c = 0; c < chunks; ++c) {
    s += sums[c];
    s2 += squares[c];
  }
  const double count = static_cast<double>(samples);
  const double mean = s / count;
  const double var = std::max(0.0, (s2 - count * mean * mean) / (count - 1.0));
  const double factor = std::pow(two_pi, 0.5 * static_cast<double>(n)) / factorial(static_cast<int>(n));
  return {factor * mean, factor * std::sqrt(var / count), samples};
}

}  // namespace mc
}  // namespace realroots
