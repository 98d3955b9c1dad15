#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "realroots/convex/ellipsoid.hpp"
#include "realroots/convex/polytope.hpp"
#include "realroots/core/numeric.hpp"
#include "realroots/mc/gaussian_mixed_volume.hpp"

namespace realroots {

/// One distinct argument of a mixed volume and the number of times it occurs.
template <class Item>
struct Grouped {
  const Item* item;
  int multiplicity;
};

template <class Item, class Eq>
std::vector<Grouped<Item>> group_arguments(const std::vector<Item>& args, Eq&& eq) {
  std::vector<Grouped<Item>> out;
  for (const auto& a : args) {
    bool found = false;
    for (auto& g : out) {
      if (eq(*g.item, a)) {
        ++g.multiplicity;
        found = true;
        break;
      }
    }
    if (!found) out.push_back({&a, 1});
  }
  return out;
}

/// Polarization of an n-homogeneous functional F over Minkowski combinations:
///   V(K_1..K_n) = (1/n!) sum_{S nonempty} (-1)^{n-|S|} F(sum_{i in S} K_i).
/// Equal arguments are grouped, so F is called with integer coefficients c_j
/// (0 <= c_j <= m_j) on the distinct arguments and weighted by prod C(m_j, c_j).
template <class T, class Item, class F>
T polarize(const std::vector<Grouped<Item>>& groups, F&& functional) {
  int n = 0;
  for (const auto& g : groups) n += g.multiplicity;
  std::vector<int> coeffs(groups.size(), 0);
  T total = 0;
  while (true) {
    std::size_t j = 0;
    while (j < coeffs.size() && coeffs[j] == groups[j].multiplicity) coeffs[j++] = 0;
    if (j == coeffs.size()) break;
    ++coeffs[j];
    int used = 0;
    std::uint64_t weight = 1;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      used += coeffs[i];
      weight *= binomial(groups[i].multiplicity, coeffs[i]);
    }
    T value = functional(coeffs);
    value *= static_cast<long long>(weight);
    if ((n - used) % 2 == 0)
      total += value;
    else
      total -= value;
  }
  T nfact = 1;
  for (int i = 2; i <= n; ++i) nfact *= i;
  return total / nfact;
}

namespace detail {

inline void check_body_list(std::size_t count, const std::vector<std::size_t>& dims) {
  if (count == 0) throw invalid_input("mixed volume: empty body list");
  for (std::size_t d : dims)
    if (d != count) throw dimension_mismatch("mixed volume: need n bodies in dimension n");
}

inline bool same_polytope(const Polytope& a, const Polytope& b) { return a.vertices() == b.vertices(); }

}  // namespace detail

/// Exact mixed volume of n rational polytopes in R^n.
inline Rational mixed_volume_polytopes_exact(const std::vector<Polytope>& bodies) {
  std::vector<std::size_t> dims;
  for (const auto& b : bodies) dims.push_back(b.dim());
  detail::check_body_list(bodies.size(), dims);
  auto groups = group_arguments(bodies, detail::same_polytope);
  if (groups.size() == 1) return bodies.front().exact_volume();
  if (bodies.size() > 4) throw unsupported("mixed_volume_polytopes: exact path limited to dimension 4");
  return polarize<Rational>(groups, [&](const std::vector<int>& c) {
    Polytope sum;
    bool first = true;
    for (std::size_t j = 0; j < groups.size(); ++j) {
      if (c[j] == 0) continue;
      Polytope term = groups[j].item->scaled(Rational(c[j]));
      sum = first ? term : minkowski_sum(sum, term);
      first = false;
    }
    return sum.exact_volume();
  });
}

inline double mixed_volume_polytopes(const std::vector<Polytope>& bodies) {
  return to_double(mixed_volume_polytopes_exact(bodies));
}

enum class MixedVolumeMethod { automatic, exact2d, balls, mc };

inline MixedVolumeMethod parse_mixed_volume_method(const std::string& s) {
  if (s == "auto") return MixedVolumeMethod::automatic;
  if (s == "exact2d") return MixedVolumeMethod::exact2d;
  if (s == "balls") return MixedVolumeMethod::balls;
  if (s == "mc") return MixedVolumeMethod::mc;
  throw invalid_input("unknown mixed volume method: " + s);
}

inline std::string to_string(MixedVolumeMethod m) {
  switch (m) {
    case MixedVolumeMethod::automatic: return "auto";
    case MixedVolumeMethod::exact2d: return "exact2d";
    case MixedVolumeMethod::balls: return "balls";
    case MixedVolumeMethod::mc: return "mc";
  }
  return "auto";
}

struct McParams {
  std::size_t samples = 1'000'000;
  std::uint64_t seed = 0;
};

namespace detail {

template <class F>
double simpson_step(F& f, double a, double b, double fa, double fm, double fb, double whole, double tol,
                    int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double diff = left + right - whole;
  if (depth <= 0 || std::abs(diff) <= 15.0 * tol) return left + right + diff / 15.0;
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson quadrature with absolute tolerance.
template <class F>
double adaptive_simpson(F&& f, double a, double b, double tol, int max_depth = 48) {
  if (b <= a) return 0.0;
  // Seed with a few panels so that periodic integrands cannot fool the first estimate.
  constexpr int panels = 8;
  double total = 0.0;
  const double h = (b - a) / panels;
  for (int i = 0; i < panels; ++i) {
    const double x0 = a + i * h, x1 = x0 + h;
    const double f0 = f(x0), f1 = f(x1), fmid = f(0.5 * (x0 + x1));
    total += detail::simpson_step(f, x0, x1, f0, fmid, f1, h / 6.0 * (f0 + 4.0 * fmid + f1), tol / panels,
                                  max_depth);
  }
  return total;
}

/// Area of the planar convex body with support function sum_j c_j h_{E_j},
/// A = (1/2) int_0^{2pi} (h^2 - h'^2) dtheta. Rank-1 ellipses (segments) make
/// h non-smooth; the integral is split at their kinks.
inline double support_area_2d(const std::vector<std::pair<const Ellipsoid*, double>>& terms, double tol = 1e-10) {
  struct Piece {
    int rank;
    Eigen::Matrix2d q;
    Eigen::Vector2d a;
    double coeff;
  };
  std::vector<Piece> pieces;
  std::vector<double> kinks{0.0, two_pi};
  for (const auto& [e, c] : terms) {
    if (e->dim() != 2) throw dimension_mismatch("support_area_2d");
    if (c == 0.0) continue;
    Piece p{static_cast<int>(e->rank()), e->Q(), Eigen::Vector2d::Zero(), c};
    if (p.rank == 0) continue;
    if (p.rank == 1) {
      Eigen::Index idx;
      e->eigenvalues().maxCoeff(&idx);
      p.a = std::sqrt(e->eigenvalues()[idx]) * e->eigenvectors().col(idx);
      // a.u(theta) = 0 at theta = phi +- pi/2
      const double phi = std::atan2(p.a.y(), p.a.x());
      for (double t : {phi + 0.5 * pi, phi - 0.5 * pi}) {
        double w = std::fmod(t, two_pi);
        if (w < 0) w += two_pi;
        kinks.push_back(w);
      }
    }
    pieces.push_back(p);
  }
  std::sort(kinks.begin(), kinks.end());
  double area = 0.0;
  for (std::size_t k = 0; k + 1 < kinks.size(); ++k) {
    const double lo = kinks[k], hi = kinks[k + 1];
    if (hi - lo < 1e-15) continue;
    const double mid = 0.5 * (lo + hi);
    std::vector<double> signs(pieces.size(), 1.0);
    for (std::size_t j = 0; j < pieces.size(); ++j)
      if (pieces[j].rank == 1)
        signs[j] = (pieces[j].a.x() * std::cos(mid) + pieces[j].a.y() * std::sin(mid)) >= 0 ? 1.0 : -1.0;
    auto integrand = [&](double t) {
      const Eigen::Vector2d u(std::cos(t), std::sin(t));
      const Eigen::Vector2d du(-std::sin(t), std::cos(t));
      double h = 0.0, dh = 0.0;
      for (std::size_t j = 0; j < pieces.size(); ++j) {
        const auto& p = pieces[j];
        if (p.rank == 1) {
          h += p.coeff * signs[j] * p.a.dot(u);
          dh += p.coeff * signs[j] * p.a.dot(du);
        } else {
          const double hj = std::sqrt(std::max(0.0, u.dot(p.q * u)));
          h += p.coeff * hj;
          if (hj > 0) dh += p.coeff * du.dot(p.q * u) / hj;
        }
      }
      return 0.5 * (h * h - dh * dh);
    };
    area += adaptive_simpson(integrand, lo, hi, tol * (hi - lo) / two_pi);
  }
  return area;
}

inline Estimate mixed_volume_ellipsoids(const std::vector<Ellipsoid>& bodies,
                                        MixedVolumeMethod method = MixedVolumeMethod::automatic,
                                        McParams params = {}) {
  std::vector<std::size_t> dims;
  for (const auto& b : bodies) dims.push_back(b.dim());
  detail::check_body_list(bodies.size(), dims);
  const std::size_t n = bodies.size();

  auto all_balls = [&] {
    for (const auto& b : bodies)
      if (!b.ball_radius()) return false;
    return true;
  };

  if (method == MixedVolumeMethod::automatic) {
    if (n <= 2)
      method = MixedVolumeMethod::exact2d;
    else if (all_balls())
      method = MixedVolumeMethod::balls;
    else
      method = MixedVolumeMethod::mc;
  }

  switch (method) {
    case MixedVolumeMethod::exact2d: {
      if (n > 2) throw invalid_input("mixed_volume_ellipsoids: exact2d requires n <= 2");
      if (n == 1) return {2.0 * std::sqrt(std::max(0.0, bodies[0].Q()(0, 0))), 0.0, 0};
      auto groups = group_arguments(bodies, [](const Ellipsoid& a, const Ellipsoid& b) { return a == b; });
      double v = polarize<double>(groups, [&](const std::vector<int>& c) {
        std::vector<std::pair<const Ellipsoid*, double>> terms;
        for (std::size_t j = 0; j < groups.size(); ++j) terms.emplace_back(groups[j].item, c[j]);
        return support_area_2d(terms);
      });
      return {std::max(0.0, v), 0.0, 0};
    }
    case MixedVolumeMethod::balls: {
      double v = unit_ball_volume(static_cast<int>(n));
      for (const auto& b : bodies) {
        auto r = b.ball_radius();
        if (!r) throw invalid_input("mixed_volume_ellipsoids: balls method requires scalar Q");
        v *= *r;
      }
      return {v, 0.0, 0};
    }
    case MixedVolumeMethod::mc:
      return mc::gaussian_mixed_volume(bodies, params.samples, params.seed);
    case MixedVolumeMethod::automatic:
      break;
  }
  throw invalid_input("mixed_volume_ellipsoids: unresolved method");
}

}  // namespace realroots
