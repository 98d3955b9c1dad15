#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "realroots/convex/polytope.hpp"
#include "realroots/core/numeric.hpp"
#include "realroots/core/polynomial.hpp"

namespace realroots {

namespace detail {

inline void compositions(int total, std::size_t parts, std::vector<int>& current,
                         std::vector<std::vector<int>>& out) {
  if (current.size() + 1 == parts) {
    current.push_back(total);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int i = total; i >= 0; --i) {
    current.push_back(i);
    compositions(total - i, parts, current, out);
    current.pop_back();
  }
}

}  // namespace detail

/// Grundmann-Moeller cubature on an n-simplex, exact for polynomials of
/// degree <= 2s+1. Nodes are barycentric weights; the rule integrates over the
/// simplex with the weights summing to one (volume factor applied by callers).
class GrundmannMoellerRule {
 public:
  struct Node {
    std::vector<double> barycentric;
    double weight;
  };

  GrundmannMoellerRule(std::size_t n, int degree) : n_(n) {
    const int s = degree <= 1 ? 0 : degree / 2;
    const int d = 2 * s + 1;
    const int nn = static_cast<int>(n);
    // Weights are normalised so that sum(weights) = 1 (integral of 1 over the simplex / vol).
    for (int i = 0; i <= s; ++i) {
      double w = ((i % 2 == 0) ? 1.0 : -1.0) * std::pow(2.0, -2 * s) * std::pow(d + nn - 2 * i, d) /
                 (factorial(i) * factorial(d + nn - i)) * factorial(nn);
      std::vector<std::vector<int>> betas;
      std::vector<int> cur;
      detail::compositions(s - i, n + 1, cur, betas);
      for (const auto& beta : betas) {
        Node node;
        node.weight = w;
        for (int b : beta) node.barycentric.push_back(static_cast<double>(2 * b + 1) / (d + nn - 2 * i));
        nodes_.push_back(std::move(node));
      }
    }
  }

  std::size_t dimension() const { return n_; }
  const std::vector<Node>& nodes() const { return nodes_; }

  /// Integral of f over the simplex with the given vertices.
  template <class F>
  double integrate(const std::vector<std::vector<double>>& vertices, double volume, F&& f) const {
    std::vector<double> x(n_);
    double sum = 0.0;
    for (const auto& node : nodes_) {
      std::fill(x.begin(), x.end(), 0.0);
      for (std::size_t j = 0; j <= n_; ++j)
        for (std::size_t c = 0; c < n_; ++c) x[c] += node.barycentric[j] * vertices[j][c];
      sum += node.weight * f(std::span<const double>(x));
    }
    return sum * volume;
  }

 private:
  std::size_t n_;
  std::vector<Node> nodes_;
};

/// Integral over a full-dimensional polytope of a function that is a polynomial
/// of degree at most `degree`, with respect to Lebesgue measure in the
/// polytope's coordinates. Lower-dimensional polytopes integrate to zero.
template <class F>
double integrate_over_polytope(const Polytope& p, int degree, F&& f) {
  if (!p.full_dimensional() || p.triangulation().empty()) return 0.0;
  const std::size_t n = p.dim();
  GrundmannMoellerRule rule(n, degree);
  double total = 0.0;
  for (const auto& simplex : p.triangulation()) {
    std::vector<std::vector<double>> verts;
    std::vector<RationalVector> rverts;
    for (std::size_t i : simplex) {
      verts.push_back(p.vertex_as_double(i));
      rverts.push_back(p.vertices()[i]);
    }
    // Simplex volume |det| / n! in exact arithmetic.
    Rational det = 0;
    {
      std::vector<RationalVector> m;
      for (std::size_t j = 1; j <= n; ++j) {
        RationalVector r(n);
        for (std::size_t c = 0; c < n; ++c) r[c] = rverts[j][c] - rverts[0][c];
        m.push_back(std::move(r));
      }
      // Gaussian elimination on rationals.
      det = 1;
      for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) {
          det = 0;
          break;
        }
        if (piv != k) {
          std::swap(m[piv], m[k]);
          det = -det;
        }
        det *= m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
          Rational f = m[i][k] / m[k][k];
          for (std::size_t c = k; c < n; ++c) m[i][c] -= f * m[k][c];
        }
      }
    }
    double vol = std::abs(to_double(det)) / factorial(static_cast<int>(n));
    total += rule.integrate(verts, vol, f);
  }
  return total;
}

inline double integrate_polynomial_over_polytope(const Polytope& p, const Polynomial& poly) {
  if (poly.variables() != p.dim()) throw dimension_mismatch("integrate_polynomial_over_polytope");
  return integrate_over_polytope(p, poly.degree(), [&](std::span<const double> x) { return poly(x); });
}

}  // namespace realroots
