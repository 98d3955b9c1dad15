#pragma once

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "realroots/convex/ellipsoid.hpp"
#include "realroots/convex/mixed_volume.hpp"
#include "realroots/convex/polytope.hpp"
#include "realroots/core/numeric.hpp"

namespace realroots {

/// Finite set of exponent vectors of a Laurent polynomial on the n-torus.
class Support {
 public:
  Support() = default;
  Support(std::size_t n, std::vector<std::vector<int>> points) : n_(n) {
    if (n == 0) throw invalid_input("Support: dimension must be positive");
    if (points.empty()) throw invalid_input("Support: empty point set");
    for (const auto& p : points)
      if (p.size() != n) throw dimension_mismatch("Support: point of wrong dimension");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    points_ = std::move(points);
  }

  std::size_t dim() const { return n_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<std::vector<int>>& points() const { return points_; }

  friend bool operator==(const Support&, const Support&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<int>> points_;
};

inline bool is_centrally_symmetric(const Support& s) {
  for (const auto& p : s.points()) {
    std::vector<int> q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[i] = -p[i];
    if (!std::binary_search(s.points().begin(), s.points().end(), q)) return false;
  }
  return true;
}

inline Support segment_support(int m) {
  if (m < 0) throw invalid_input("segment_support: m must be non-negative");
  std::vector<std::vector<int>> pts;
  for (int k = -m; k <= m; ++k) pts.push_back({k});
  return Support(1, std::move(pts));
}

/// {-m..m}^n
inline Support box_support(std::size_t n, int m) {
  if (m < 0) throw invalid_input("box_support: m must be non-negative");
  std::vector<std::vector<int>> pts{{}};
  for (std::size_t d = 0; d < n; ++d) {
    std::vector<std::vector<int>> next;
    for (const auto& p : pts)
      for (int k = -m; k <= m; ++k) {
        auto q = p;
        q.push_back(k);
        next.push_back(std::move(q));
      }
    pts = std::move(next);
  }
  return Support(n, std::move(pts));
}

/// B_m intersected with Z^n.
inline Support ball_support(std::size_t n, int m) {
  if (m < 0) throw invalid_input("ball_support: m must be non-negative");
  std::vector<std::vector<int>> pts;
  std::vector<int> cur(n, -m);
  const long long limit = static_cast<long long>(m) * m;
  while (true) {
    long long norm = 0;
    for (int x : cur) norm += static_cast<long long>(x) * x;
    if (norm <= limit) pts.push_back(cur);
    std::size_t d = 0;
    while (d < n && ++cur[d] > m) cur[d++] = -m;
    if (d == n) break;
  }
  return Support(n, std::move(pts));
}

/// Parses "segment:m", "box:n:m", "ball:n:m" or a JSON array of integer vectors.
inline Support parse_support(const std::string& spec) {
  auto fields = [&] {
    std::vector<std::string> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) out.push_back(item);
    return out;
  }();
  auto to_int = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size()) throw invalid_input("");
      return v;
    } catch (...) {
      throw invalid_input("bad support spec: " + spec);
    }
  };
  if (!spec.empty() && spec.front() == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(spec);
    } catch (const nlohmann::json::exception&) {
      throw invalid_input("bad support JSON: " + spec);
    }
    std::vector<std::vector<int>> pts;
    for (const auto& row : j) {
      if (row.is_number_integer())
        pts.push_back({row.get<int>()});
      else
        pts.push_back(row.get<std::vector<int>>());
    }
    if (pts.empty()) throw invalid_input("empty support");
    const std::size_t n = pts.front().size();
    return Support(n, std::move(pts));
  }
  if (fields.size() == 2 && fields[0] == "segment") return segment_support(to_int(fields[1]));
  if (fields.size() == 3 && fields[0] == "box") return box_support(static_cast<std::size_t>(to_int(fields[1])), to_int(fields[2]));
  if (fields.size() == 3 && fields[0] == "ball")
    return ball_support(static_cast<std::size_t>(to_int(fields[1])), to_int(fields[2]));
  throw invalid_input("bad support spec: " + spec);
}

inline nlohmann::json to_json(const Support& s) { return s.points(); }

inline Polytope newton_polytope(const Support& s) { return convex_hull_of_integers(s.points()); }

/// Q = (4 pi^2 / #Lambda) sum lambda lambda^T: characters exp(2 pi i lambda.theta)
/// have differential 2 pi i lambda at the identity.
inline Ellipsoid newton_ellipsoid_torus(const Support& s) {
  const auto n = static_cast<Eigen::Index>(s.dim());
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
  for (const auto& p : s.points())
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) q(i, j) += static_cast<double>(p[i]) * p[j];
  q *= 4.0 * pi * pi / static_cast<double>(s.size());
  return Ellipsoid(q);
}

namespace detail {

inline void check_torus_system(const std::vector<Support>& supports) {
  if (supports.empty()) throw invalid_input("need at least one support");
  for (const auto& s : supports)
    if (s.dim() != supports.size()) throw dimension_mismatch("need n supports in dimension n");
}

}  // namespace detail

/// M = n!/(2 pi)^n V(Ell(Lambda_1), ..., Ell(Lambda_n)).
inline Estimate mean_real_count_torus(const std::vector<Support>& supports,
                                      MixedVolumeMethod method = MixedVolumeMethod::automatic, McParams mc = {}) {
  detail::check_torus_system(supports);
  const auto n = static_cast<int>(supports.size());
  std::vector<Ellipsoid> ells;
  for (const auto& s : supports) ells.push_back(newton_ellipsoid_torus(s));
  Estimate v = mixed_volume_ellipsoids(ells, method, mc);
  const double f = factorial(n) / std::pow(two_pi, n);
  return {f * v.value, f * v.std_error, v.samples};
}

/// Generic number of common zeros in (C^*)^n: n! V(conv(Lambda_1), ..., conv(Lambda_n)).
inline Rational complex_count_torus_exact(const std::vector<Support>& supports) {
  detail::check_torus_system(supports);
  std::vector<Polytope> polys;
  for (const auto& s : supports) polys.push_back(newton_polytope(s));
  Rational v = mixed_volume_polytopes_exact(polys);
  for (int i = 2; i <= static_cast<int>(supports.size()); ++i) v *= i;
  return v;
}

inline double complex_count_torus(const std::vector<Support>& supports) {
  return to_double(complex_count_torus_exact(supports));
}

struct TorusEnsembleResult {
  double mean_real = 0.0;
  double mean_real_std_error = 0.0;
  double complex_count = 0.0;
  double proportion = 0.0;
  std::vector<Ellipsoid> ellipsoids;
  std::vector<Polytope> polytopes;
  std::vector<std::string> warnings;
};

inline TorusEnsembleResult real_proportion_torus(const std::vector<Support>& supports,
                                                 MixedVolumeMethod method = MixedVolumeMethod::automatic,
                                                 McParams mc = {}) {
  detail::check_torus_system(supports);
  TorusEnsembleResult r;
  for (std::size_t i = 0; i < supports.size(); ++i) {
    if (!is_centrally_symmetric(supports[i]))
      r.warnings.push_back("support " + std::to_string(i + 1) +
                           " is not centrally symmetric; the proportion is not a real-root statistic");
    r.ellipsoids.push_back(newton_ellipsoid_torus(supports[i]));
    r.polytopes.push_back(newton_polytope(supports[i]));
  }
  r.complex_count = complex_count_torus(supports);
  if (r.complex_count <= 0.0) throw invalid_input("real_proportion_torus: generic complex count is zero");
  Estimate m = mean_real_count_torus(supports, method, mc);
  r.mean_real = m.value;
  r.mean_real_std_error = m.std_error;
  r.proportion = r.mean_real / r.complex_count;
  return r;
}

/// beta_n = int_{-1}^{1} x^2 (1 - x^2)^{(n-1)/2} dx = Gamma(3/2) Gamma((n+1)/2) / Gamma(n/2 + 2).
inline double beta_constant(int n) {
  if (n < 1) throw invalid_input("beta_constant: n must be positive");
  return std::exp(std::lgamma(1.5) + std::lgamma(0.5 * (n + 1)) - std::lgamma(0.5 * n + 2.0));
}

/// (sigma_{n-1} beta_n / sigma_n)^{n/2}, which equals (n + 2)^{-n/2}.
inline double kac_limit(int n) {
  if (n < 1) throw invalid_input("kac_limit: n must be positive");
  const double base = unit_ball_volume(n - 1) * beta_constant(n) / unit_ball_volume(n);
  return std::pow(base, 0.5 * n);
}

}  // namespace realroots
