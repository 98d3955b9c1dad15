#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <span>
#include <vector>

#include "realroots/core/numeric.hpp"
#include "realroots/torus/torus_lab.hpp"

namespace realroots::mc {

/// Real Laurent polynomial restricted to the compact torus, stored in trig form
///   f(theta) = c0 + sum_lambda (b_lambda cos(2 pi lambda.theta) + c_lambda sin(2 pi lambda.theta))
/// over one representative lambda of each pair {lambda, -lambda}, lambda != 0.
/// The character coefficients are a_lambda = (b - i c)/2 and a_{-lambda} = conj(a_lambda).
class RealLaurent {
 public:
  RealLaurent() = default;
  RealLaurent(std::size_t n, double constant, std::vector<std::vector<int>> freqs, std::vector<double> cos_coef,
              std::vector<double> sin_coef)
      : n_(n), c0_(constant), freqs_(std::move(freqs)), b_(std::move(cos_coef)), c_(std::move(sin_coef)) {
    if (freqs_.size() != b_.size() || freqs_.size() != c_.size()) throw dimension_mismatch("RealLaurent");
    for (const auto& l : freqs_)
      if (l.size() != n_) throw dimension_mismatch("RealLaurent: frequency of wrong dimension");
  }

  std::size_t dim() const { return n_; }
  double constant() const { return c0_; }
  const std::vector<std::vector<int>>& frequencies() const { return freqs_; }
  const std::vector<double>& cos_coefficients() const { return b_; }
  const std::vector<double>& sin_coefficients() const { return c_; }

  /// max over frequencies of the largest absolute coordinate.
  int degree() const {
    int d = 0;
    for (const auto& l : freqs_)
      for (int x : l) d = std::max(d, std::abs(x));
    return d;
  }

  bool is_zero() const {
    if (c0_ != 0.0) return false;
    for (std::size_t i = 0; i < b_.size(); ++i)
      if (b_[i] != 0.0 || c_[i] != 0.0) return false;
    return true;
  }

  double operator()(std::span<const double> theta) const {
    double v = c0_;
    for (std::size_t i = 0; i < freqs_.size(); ++i) {
      const double ph = two_pi * phase(i, theta);
      v += b_[i] * std::cos(ph) + c_[i] * std::sin(ph);
    }
    return v;
  }

  double operator()(double theta) const { return (*this)(std::span<const double>(&theta, 1)); }

  /// Value and gradient with respect to theta.
  double value_gradient(std::span<const double> theta, std::span<double> grad) const {
    double v = c0_;
    std::fill(grad.begin(), grad.end(), 0.0);
    for (std::size_t i = 0; i < freqs_.size(); ++i) {
      const double ph = two_pi * phase(i, theta);
      const double cs = std::cos(ph), sn = std::sin(ph);
      v += b_[i] * cs + c_[i] * sn;
      const double d = two_pi * (c_[i] * cs - b_[i] * sn);
      for (std::size_t j = 0; j < n_; ++j) grad[j] += d * freqs_[i][j];
    }
    return v;
  }

  /// Character coefficient a_lambda (zero off the support).
  std::complex<double> coefficient(const std::vector<int>& lambda) const {
    if (std::all_of(lambda.begin(), lambda.end(), [](int x) { return x == 0; })) return c0_;
    std::vector<int> neg(lambda.size());
    for (std::size_t j = 0; j < lambda.size(); ++j) neg[j] = -lambda[j];
    for (std::size_t i = 0; i < freqs_.size(); ++i) {
      const std::complex<double> a(0.5 * b_[i], -0.5 * c_[i]);
      if (freqs_[i] == lambda) return a;
      if (freqs_[i] == neg) return std::conj(a);
    }
    return 0.0;
  }

  /// L_j = 2 pi sum_lambda |a_lambda| |lambda_j| over the full support: |df/dtheta_j| <= L_j.
  std::vector<double> lipschitz_bounds() const {
    std::vector<double> l(n_, 0.0);
    for (std::size_t i = 0; i < freqs_.size(); ++i) {
      const double mod = std::hypot(b_[i], c_[i]);  // 2 |a_lambda|
      for (std::size_t j = 0; j < n_; ++j) l[j] += two_pi * mod * std::abs(freqs_[i][j]);
    }
    return l;
  }

  RealLaurent scaled(double s) const {
    RealLaurent out = *this;
    out.c0_ *= s;
    for (auto& x : out.b_) x *= s;
    for (auto& x : out.c_) x *= s;
    return out;
  }

  /// Euclidean norm of the real coordinates (c0, b/sqrt2, c/sqrt2), i.e. the L2 norm on the torus.
  double l2_norm() const {
    double s = c0_ * c0_;
    for (std::size_t i = 0; i < b_.size(); ++i) s += 0.5 * (b_[i] * b_[i] + c_[i] * c_[i]);
    return std::sqrt(s);
  }

 private:
  double phase(std::size_t i, std::span<const double> theta) const {
    double p = 0.0;
    for (std::size_t j = 0; j < n_; ++j) p += freqs_[i][j] * theta[j];
    return p;
  }

  std::size_t n_ = 0;
  double c0_ = 0.0;
  std::vector<std::vector<int>> freqs_;
  std::vector<double> b_, c_;
};

/// Standard Gaussian on the real functions spanned by the characters of the
/// support, with respect to the L2 inner product of the torus: the constant and
/// sqrt2 cos, sqrt2 sin get independent N(0,1) coordinates. Zero counts are
/// scale invariant, so this has the same count distribution as the sphere-uniform law.
template <class Rng>
RealLaurent sample_real_laurent(const Support& s, Rng& rng) {
  if (!is_centrally_symmetric(s)) throw invalid_input("sample_real_laurent: support is not centrally symmetric");
  std::normal_distribution<double> normal(0.0, 1.0);
  double c0 = 0.0;
  std::vector<std::vector<int>> freqs;
  std::vector<double> b, c;
  const std::vector<int> zero(s.dim(), 0);
  for (const auto& p : s.points()) {
    if (p == zero) {
      c0 = normal(rng);
      continue;
    }
    if (p < zero) continue;  // the partner -p > 0 carries the pair
    freqs.push_back(p);
    b.push_back(std::sqrt(2.0) * normal(rng));
    c.push_back(std::sqrt(2.0) * normal(rng));
  }
  return RealLaurent(s.dim(), c0, std::move(freqs), std::move(b), std::move(c));
}

}  // namespace realroots::mc
