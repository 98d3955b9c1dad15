#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "realroots/core/numeric.hpp"
#include "realroots/mc/laurent.hpp"

namespace realroots::mc {

struct CircleZeroCount {
  int count = 0;
  std::vector<double> roots;  // in [0, 1)
  int tangential = 0;         // flagged near-double zeros, not counted
};

/// Zeros of f on the circle theta in [0, 1): sign changes on a uniform grid of
/// max(min_grid, 64 deg) points, refined by bisection to 1e-13.
inline CircleZeroCount count_zeros_circle(const RealLaurent& f, std::size_t min_grid = 4096) {
  if (f.dim() != 1) throw dimension_mismatch("count_zeros_circle: need a one-variable polynomial");
  const std::size_t n = std::max<std::size_t>(min_grid, 64 * static_cast<std::size_t>(std::max(1, f.degree())));
  std::vector<double> v(n);
  bool all_zero = true;
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = f(static_cast<double>(i) / n);
    if (v[i] != 0.0) all_zero = false;
  }
  if (all_zero) throw invalid_input("count_zeros_circle: polynomial vanishes on the whole grid");

  CircleZeroCount out;
  auto at = [&](std::size_t i) { return v[i % n]; };
  for (std::size_t i = 0; i < n; ++i) {
    const double a = at(i), b = at(i + 1);
    const double prev = at(i + n - 1);
    if (a == 0.0) {
      if (prev * b < 0.0)
        out.roots.push_back(static_cast<double>(i) / n);
      else
        ++out.tangential;
      continue;
    }
    if (a * b < 0.0) {
      double lo = static_cast<double>(i) / n, hi = static_cast<double>(i + 1) / n;
      double flo = a;
      while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((fm < 0.0) == (flo < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      double r = 0.5 * (lo + hi);
      if (r >= 1.0) r -= 1.0;
      out.roots.push_back(r);
      continue;
    }
    // Local minimum of |f| close to zero without a sign change nearby.
    if (std::abs(a) < 1e-10 && std::abs(a) <= std::abs(prev) && std::abs(a) <= std::abs(b) && prev * a > 0.0)
      ++out.tangential;
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.count = static_cast<int>(out.roots.size());
  return out;
}

struct Torus2ZeroCount {
  bool certified = false;
  int count = 0;
  std::vector<std::array<double, 2>> roots;  // in [0, 1)^2
  double min_singular_value = 0.0;
  std::string reason;  // why the sample was rejected
};

namespace detail {

inline double torus_distance(const std::array<double, 2>& a, const std::array<double, 2>& b) {
  double s = 0.0;
  for (int j = 0; j < 2; ++j) {
    double d = std::abs(a[j] - b[j]);
    d -= std::floor(d);
    d = std::min(d, 1.0 - d);
    s += d * d;
  }
  return std::sqrt(s);
}

struct NewtonResult {
  bool converged = false;
  std::array<double, 2> x{};
  double sigma_min = 0.0;
};

inline NewtonResult newton2(const RealLaurent& f, const RealLaurent& g, std::array<double, 2> x) {
  NewtonResult r;
  Eigen::Matrix2d jac;
  Eigen::Vector2d val;
  double gf[2], gg[2];
  for (int it = 0; it < 60; ++it) {
    val[0] = f.value_gradient(x, gf);
    val[1] = g.value_gradient(x, gg);
    jac << gf[0], gf[1], gg[0], gg[1];
    const double det = jac.determinant();
    if (det == 0.0 || !std::isfinite(det)) return r;
    Eigen::Vector2d step = -jac.inverse() * val;
    const double len = step.norm();
    if (!std::isfinite(len)) return r;
    if (len > 0.05) step *= 0.05 / len;
    x[0] += step[0];
    x[1] += step[1];
    if (len < 1e-14) break;
  }
  val[0] = f.value_gradient(x, gf);
  val[1] = g.value_gradient(x, gg);
  jac << gf[0], gf[1], gg[0], gg[1];
  if (val.norm() > 1e-11) return r;
  for (double& c : x) c -= std::floor(c);
  r.converged = true;
  r.x = x;
  r.sigma_min = Eigen::JacobiSVD<Eigen::Matrix2d>(jac).singularValues()[1];
  return r;
}

}  // namespace detail

/// Common zeros of f, g on T^2 = [0,1)^2. Cells are discarded when a Lipschitz
/// bound excludes a zero of f or g; surviving cells are subdivided down to
/// depth, then Newton is run from each leaf. Roots are merged at distance 1e-8.
/// The count is certified only if every root has Jacobian smallest singular
/// value above 1e-6 and every surviving leaf lies within the basin estimate of a
/// root. depth 0 picks leaves of side about 2^-16 / deg; coarser leaves leave
/// more cells unexplained near close approaches of the two zero curves.
inline Torus2ZeroCount count_common_zeros_torus2(const RealLaurent& f0, const RealLaurent& g0, int depth = 0) {
  if (f0.dim() != 2 || g0.dim() != 2) throw dimension_mismatch("count_common_zeros_torus2: need two-variable polynomials");
  if (f0.is_zero() || g0.is_zero()) throw invalid_input("count_common_zeros_torus2: zero polynomial");
  const RealLaurent f = f0.scaled(1.0 / f0.l2_norm());
  const RealLaurent g = g0.scaled(1.0 / g0.l2_norm());
  if (depth <= 0) {
    const int deg = std::max({1, f.degree(), g.degree()});
    depth = 16;
    while ((1 << (depth - 16)) < deg && depth < 22) ++depth;
  }
  const auto lf = f.lipschitz_bounds();
  const auto lg = g.lipschitz_bounds();
  const double bound_f = lf[0] + lf[1], bound_g = lg[0] + lg[1];

  struct Cell {
    int i, j, level;
  };
  std::vector<Cell> current, next, leaves;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) current.push_back({i, j, 2});
  while (!current.empty()) {
    next.clear();
    for (const auto& c : current) {
      const double h = std::ldexp(1.0, -c.level);
      const std::array<double, 2> mid{(c.i + 0.5) * h, (c.j + 0.5) * h};
      if (std::abs(f(mid)) > 0.5 * bound_f * h || std::abs(g(mid)) > 0.5 * bound_g * h) continue;
      if (c.level >= depth) {
        leaves.push_back(c);
        continue;
      }
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) next.push_back({2 * c.i + a, 2 * c.j + b, c.level + 1});
    }
    current.swap(next);
  }

  Torus2ZeroCount out;
  out.min_singular_value = std::numeric_limits<double>::infinity();
  std::vector<double> sigmas;
  std::vector<std::array<double, 2>> centres;
  const double h = std::ldexp(1.0, -depth);
  for (const auto& c : leaves) {
    const std::array<double, 2> mid{(c.i + 0.5) * h, (c.j + 0.5) * h};
    centres.push_back(mid);
    const auto r = detail::newton2(f, g, mid);
    if (!r.converged) continue;
    bool dup = false;
    for (const auto& x : out.roots)
      if (detail::torus_distance(x, r.x) < 1e-8) dup = true;
    if (dup) continue;
    out.roots.push_back(r.x);
    sigmas.push_back(r.sigma_min);
    out.min_singular_value = std::min(out.min_singular_value, r.sigma_min);
  }
  out.count = static_cast<int>(out.roots.size());
  if (out.roots.empty()) out.min_singular_value = 0.0;

  for (std::size_t k = 0; k < sigmas.size(); ++k)
    if (sigmas[k] <= 1e-6) {
      out.reason = "root with Jacobian smallest singular value <= 1e-6";
      return out;
    }
  // A surviving leaf has |F(centre)| <= L h / 2, so a simple root within reach
  // sits at distance about |F| / sigma; anything else is an unresolved cell.
  const double reach = 0.5 * std::hypot(bound_f, bound_g) * h * std::sqrt(2.0);
  for (const auto& mid : centres) {
    bool explained = false;
    for (std::size_t k = 0; k < out.roots.size() && !explained; ++k)
      explained = detail::torus_distance(mid, out.roots[k]) <= 2.0 * reach / sigmas[k] + 2.0 * h;
    if (!explained) {
      out.reason = "candidate cell not explained by a certified root";
      return out;
    }
  }
  out.certified = true;
  return out;
}

}  // namespace realroots::mc
