#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "realroots/convex/ellipsoid.hpp"
#include "realroots/convex/polytope.hpp"
#include "realroots/core/numeric.hpp"

namespace realroots {

using Body = std::variant<Polytope, Ellipsoid>;

/// {"kind":"polytope","vertices":[["1/2","0"],...]}; rationals as decimal strings.
inline nlohmann::json to_json(const Polytope& p) {
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& v : p.vertices()) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& x : v) row.push_back(format_rational(x));
    verts.push_back(std::move(row));
  }
  return {{"kind", "polytope"}, {"dim", p.dim()}, {"vertices", std::move(verts)}};
}

/// {"kind":"ellipsoid","Q":[[...],...]}
inline nlohmann::json to_json(const Ellipsoid& e) {
  nlohmann::json q = nlohmann::json::array();
  for (Eigen::Index i = 0; i < e.Q().rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < e.Q().cols(); ++j) row.push_back(e.Q()(i, j));
    q.push_back(std::move(row));
  }
  return {{"kind", "ellipsoid"}, {"Q", std::move(q)}};
}

inline nlohmann::json to_json(const Body& b) {
  return std::visit([](const auto& x) { return to_json(x); }, b);
}

namespace detail {

inline Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw invalid_input("expected a rational as string or integer");
}

}  // namespace detail

inline Body body_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "polytope") {
    std::vector<RationalVector> pts;
    for (const auto& row : j.at("vertices")) {
      RationalVector v;
      for (const auto& x : row) v.push_back(detail::rational_from_json(x));
      pts.push_back(std::move(v));
    }
    if (pts.empty()) throw invalid_input("polytope needs at least one vertex");
    return convex_hull(pts);
  }
  if (kind == "ellipsoid") {
    const auto& rows = j.at("Q");
    const auto n = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXd q(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (static_cast<Eigen::Index>(rows[i].size()) != n) throw dimension_mismatch("ellipsoid Q must be square");
      for (Eigen::Index jx = 0; jx < n; ++jx) q(i, jx) = rows[i][jx].get<double>();
    }
    return Ellipsoid(q);
  }
  throw invalid_input("unknown body kind: " + kind);
}

}  // namespace realroots
