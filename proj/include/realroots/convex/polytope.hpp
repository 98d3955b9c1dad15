#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "realroots/core/numeric.hpp"

namespace realroots {

class Polytope;
Polytope convex_hull(const std::vector<RationalVector>& points);

/// Convex hull of finitely many rational points.
///
/// Vertices are exactly the extreme points, sorted lexicographically. When the
/// hull is full-dimensional the triangulation is a placing triangulation of
/// the vertices (indices into vertices()); lower-dimensional hulls carry an
/// empty triangulation and zero volume.
class Polytope {
 public:
  using Simplex = std::vector<std::size_t>;

  Polytope() = default;

  std::size_t dim() const { return dim_; }
  std::size_t affine_dim() const { return affine_dim_; }
  bool full_dimensional() const { return affine_dim_ == dim_; }
  const std::vector<RationalVector>& vertices() const { return vertices_; }
  const std::vector<Simplex>& triangulation() const { return simplices_; }
  const Rational& exact_volume() const { return volume_; }
  double volume() const { return to_double(volume_); }

  /// t * P for t >= 0; the triangulation is reused.
  Polytope scaled(const Rational& t) const {
    if (t < 0) throw invalid_input("Polytope::scaled: negative factor");
    if (t == 0) return convex_hull({RationalVector(dim_, Rational(0))});
    Polytope out = *this;
    for (auto& v : out.vertices_)
      for (auto& x : v) x *= t;
    Rational f = 1;
    for (std::size_t i = 0; i < dim_; ++i) f *= t;
    out.volume_ *= f;
    return out;
  }

  Polytope translated(const RationalVector& shift) const {
    if (shift.size() != dim_) throw dimension_mismatch("Polytope::translated");
    Polytope out = *this;
    for (auto& v : out.vertices_)
      for (std::size_t i = 0; i < dim_; ++i) v[i] += shift[i];
    return out;
  }

  bool is_centrally_symmetric() const {
    std::set<RationalVector> verts(vertices_.begin(), vertices_.end());
    for (const auto& v : vertices_) {
      RationalVector neg(v);
      for (auto& x : neg) x = -x;
      if (!verts.count(neg)) return false;
    }
    return true;
  }

  std::vector<double> vertex_as_double(std::size_t i) const { return to_double(vertices_.at(i)); }

 private:
  friend Polytope convex_hull(const std::vector<RationalVector>& points);

  std::size_t dim_ = 0;
  std::size_t affine_dim_ = 0;
  std::vector<RationalVector> vertices_;
  std::vector<Simplex> simplices_;
  Rational volume_ = 0;
};

namespace detail {

using IntVector = std::vector<BigInt>;
using IntMatrix = std::vector<IntVector>;

// Fraction-free (Bareiss) determinant.
inline BigInt bareiss_determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

inline BigInt dot(const IntVector& a, const IntVector& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Normal to the hyperplane through d points in Z^d (generalised cross product).
inline IntVector hyperplane_normal(const std::vector<const IntVector*>& pts) {
  const std::size_t d = pts.front()->size();
  IntMatrix rows;
  for (std::size_t j = 1; j < pts.size(); ++j) {
    IntVector r(d);
    for (std::size_t c = 0; c < d; ++c) r[c] = (*pts[j])[c] - (*pts[0])[c];
    rows.push_back(std::move(r));
  }
  IntVector normal(d);
  for (std::size_t skip = 0; skip < d; ++skip) {
    IntMatrix minor;
    for (const auto& r : rows) {
      IntVector mr;
      for (std::size_t c = 0; c < d; ++c)
        if (c != skip) mr.push_back(r[c]);
      minor.push_back(std::move(mr));
    }
    BigInt det = bareiss_determinant(std::move(minor));
    normal[skip] = (skip % 2 == 0) ? det : BigInt(-det);
  }
  return normal;
}

// Incremental echelon basis used to detect affine independence.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  // Adds v if independent of the basis; returns whether it was added.
  bool try_add(const IntVector& v) {
    std::vector<Rational> r(v.begin(), v.end());
    reduce(r);
    auto it = std::find_if(r.begin(), r.end(), [](const Rational& x) { return x != 0; });
    if (it == r.end()) return false;
    std::size_t pivot = static_cast<std::size_t>(it - r.begin());
    Rational lead = r[pivot];
    for (auto& x : r) x /= lead;
    rows_.push_back({pivot, std::move(r)});
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

  std::vector<std::size_t> pivots() const {
    std::vector<std::size_t> p;
    for (const auto& row : rows_) p.push_back(row.first);
    std::sort(p.begin(), p.end());
    return p;
  }

 private:
  void reduce(std::vector<Rational>& r) const {
    for (const auto& [pivot, row] : rows_) {
      if (r[pivot] == 0) continue;
      Rational f = r[pivot];
      for (std::size_t c = 0; c < dim_; ++c) r[c] -= f * row[c];
    }
  }

  std::size_t dim_;
  std::vector<std::pair<std::size_t, std::vector<Rational>>> rows_;
};

struct Facet {
  std::vector<std::size_t> idx;  // sorted point indices
  IntVector normal;               // outward
  BigInt offset;
  bool alive = true;
};

struct PlacingResult {
  std::vector<std::vector<std::size_t>> simplices;
  std::vector<Facet> boundary;
  std::vector<std::size_t> placed;
};

// Placing triangulation of full-dimensional integer points (d >= 2), in input order.
inline PlacingResult placing_triangulation(const std::vector<IntVector>& pts, std::size_t d) {
  PlacingResult out;
  EchelonBasis basis(d);
  std::vector<std::size_t> initial{0};
  for (std::size_t i = 1; i < pts.size() && initial.size() < d + 1; ++i) {
    IntVector diff(d);
    for (std::size_t c = 0; c < d; ++c) diff[c] = pts[i][c] - pts[0][c];
    if (basis.try_add(diff)) initial.push_back(i);
  }
  if (initial.size() != d + 1) throw numeric_failure("placing_triangulation: input not full-dimensional");

  IntVector inner(d, BigInt(0));
  for (std::size_t i : initial)
    for (std::size_t c = 0; c < d; ++c) inner[c] += pts[i][c];
  const BigInt denom = static_cast<long>(d + 1);

  auto make_facet = [&](std::vector<std::size_t> idx) {
    std::sort(idx.begin(), idx.end());
    std::vector<const IntVector*> p;
    for (std::size_t i : idx) p.push_back(&pts[i]);
    Facet f{std::move(idx), hyperplane_normal(p), 0, true};
    f.offset = dot(f.normal, *p[0]);
    if (dot(f.normal, inner) > denom * f.offset) {
      for (auto& x : f.normal) x = -x;
      f.offset = -f.offset;
    }
    return f;
  };

  std::vector<Facet> facets;
  for (std::size_t skip = 0; skip <= d; ++skip) {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j <= d; ++j)
      if (j != skip) idx.push_back(initial[j]);
    facets.push_back(make_facet(std::move(idx)));
  }
  out.simplices.push_back(initial);
  out.placed = initial;
  std::vector<bool> used(pts.size(), false);
  for (std::size_t i : initial) used[i] = true;

  std::size_t dead = 0;
  for (std::size_t pi = 0; pi < pts.size(); ++pi) {
    if (used[pi]) continue;
    const IntVector& p = pts[pi];
    std::vector<std::size_t> visible;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (facets[f].alive && dot(facets[f].normal, p) > facets[f].offset) visible.push_back(f);
    }
    if (visible.empty()) continue;

    std::map<std::vector<std::size_t>, int> ridges;
    for (std::size_t f : visible) {
      const auto& idx = facets[f].idx;
      for (std::size_t skip = 0; skip < idx.size(); ++skip) {
        std::vector<std::size_t> ridge;
        for (std::size_t j = 0; j < idx.size(); ++j)
          if (j != skip) ridge.push_back(idx[j]);
        ++ridges[ridge];
      }
      std::vector<std::size_t> simplex = idx;
      simplex.push_back(pi);
      out.simplices.push_back(std::move(simplex));
      facets[f].alive = false;
      ++dead;
    }
    for (auto& [ridge, count] : ridges) {
      if (count != 1) continue;
      std::vector<std::size_t> idx = ridge;
      idx.push_back(pi);
      facets.push_back(make_facet(std::move(idx)));
    }
    out.placed.push_back(pi);
    if (dead > facets.size() / 2) {
      std::erase_if(facets, [](const Facet& f) { return !f.alive; });
      dead = 0;
    }
  }
  std::erase_if(facets, [](const Facet& f) { return !f.alive; });
  out.boundary = std::move(facets);
  return out;
}

inline std::size_t normal_rank(const std::vector<const IntVector*>& normals, std::size_t d) {
  EchelonBasis basis(d);
  for (const auto* n : normals) {
    basis.try_add(*n);
    if (basis.rank() == d) break;
  }
  return basis.rank();
}

struct HullIndices {
  std::size_t affine_dim = 0;
  std::vector<std::size_t> extreme;                    // indices into input, ascending
  std::vector<std::vector<std::size_t>> simplices;     // indices into input (full-dim only)
};

// Hull of integer points sorted lexicographically with no duplicates.
inline HullIndices hull_of_integer_points(const std::vector<IntVector>& pts) {
  HullIndices out;
  const std::size_t d = pts.front().size();
  if (pts.size() == 1) {
    out.extreme = {0};
    return out;
  }
  EchelonBasis basis(d);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    IntVector diff(d);
    for (std::size_t c = 0; c < d; ++c) diff[c] = pts[i][c] - pts[0][c];
    basis.try_add(diff);
    if (basis.rank() == d) break;
  }
  const std::size_t r = basis.rank();
  out.affine_dim = r;
  if (r == 0) {
    out.extreme = {0};
    return out;
  }
  if (r < d) {
    // Pivot coordinates give an injective projection of the affine hull.
    auto pivots = basis.pivots();
    std::vector<IntVector> projected;
    for (const auto& p : pts) {
      IntVector q;
      for (std::size_t c : pivots) q.push_back(p[c]);
      projected.push_back(std::move(q));
    }
    // Projection preserves lexicographic order only up to ties; re-sort with a permutation.
    std::vector<std::size_t> perm(pts.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return projected[a] < projected[b]; });
    std::vector<IntVector> sorted;
    for (std::size_t i : perm) sorted.push_back(projected[i]);
    HullIndices sub = hull_of_integer_points(sorted);
    for (std::size_t e : sub.extreme) out.extreme.push_back(perm[e]);
    std::sort(out.extreme.begin(), out.extreme.end());
    return out;
  }
  if (d == 1) {
    out.extreme = {0, pts.size() - 1};
    out.simplices = {{0, pts.size() - 1}};
    return out;
  }

  PlacingResult placing = placing_triangulation(pts, d);
  std::set<std::size_t> on_boundary;
  for (const auto& f : placing.boundary) on_boundary.insert(f.idx.begin(), f.idx.end());
  for (std::size_t v : on_boundary) {
    std::vector<const IntVector*> normals;
    for (const auto& f : placing.boundary)
      if (dot(f.normal, pts[v]) == f.offset) normals.push_back(&f.normal);
    if (normal_rank(normals, d) == d) out.extreme.push_back(v);
  }
  std::sort(out.extreme.begin(), out.extreme.end());

  if (out.extreme.size() == placing.placed.size()) {
    out.simplices = std::move(placing.simplices);
    return out;
  }
  std::vector<IntVector> verts;
  for (std::size_t e : out.extreme) verts.push_back(pts[e]);
  PlacingResult second = placing_triangulation(verts, d);
  for (const auto& s : second.simplices) {
    std::vector<std::size_t> mapped;
    for (std::size_t i : s) mapped.push_back(out.extreme[i]);
    out.simplices.push_back(std::move(mapped));
  }
  return out;
}

}  // namespace detail

/// Convex hull of rational points; coplanar and interior points are dropped.
inline Polytope convex_hull(const std::vector<RationalVector>& points) {
  if (points.empty()) throw invalid_input("convex_hull: no points");
  const std::size_t d = points.front().size();
  if (d == 0) throw invalid_input("convex_hull: zero-dimensional points");
  for (const auto& p : points)
    if (p.size() != d) throw dimension_mismatch("convex_hull: points of different dimensions");

  std::vector<RationalVector> sorted(points);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  // Clear denominators so the hull runs in exact integers; lex order is preserved.
  BigInt scale = 1;
  for (const auto& p : sorted)
    for (const auto& x : p) scale = boost::multiprecision::lcm(scale, denominator(x));
  std::vector<detail::IntVector> ints;
  ints.reserve(sorted.size());
  for (const auto& p : sorted) {
    detail::IntVector v;
    for (const auto& x : p) v.push_back(numerator(x) * (scale / denominator(x)));
    ints.push_back(std::move(v));
  }

  detail::HullIndices h = detail::hull_of_integer_points(ints);
  Polytope out;
  out.dim_ = d;
  out.affine_dim_ = h.affine_dim;
  std::vector<std::size_t> remap(sorted.size(), 0);
  for (std::size_t i = 0; i < h.extreme.size(); ++i) {
    remap[h.extreme[i]] = i;
    out.vertices_.push_back(sorted[h.extreme[i]]);
  }
  if (h.affine_dim == d) {
    BigInt twice = 0;
    for (const auto& s : h.simplices) {
      detail::IntMatrix m;
      for (std::size_t j = 1; j < s.size(); ++j) {
        detail::IntVector row(d);
        for (std::size_t c = 0; c < d; ++c) row[c] = ints[s[j]][c] - ints[s[0]][c];
        m.push_back(std::move(row));
      }
      twice += boost::multiprecision::abs(detail::bareiss_determinant(std::move(m)));
      Polytope::Simplex mapped;
      for (std::size_t i : s) mapped.push_back(remap[i]);
      out.simplices_.push_back(std::move(mapped));
    }
    BigInt denom = 1;
    for (std::size_t i = 0; i < d; ++i) denom *= scale;
    for (std::size_t i = 2; i <= d; ++i) denom *= static_cast<long>(i);
    out.volume_ = Rational(twice, denom);
  }
  return out;
}

inline Polytope convex_hull_of_integers(const std::vector<std::vector<int>>& points) {
  std::vector<RationalVector> pts;
  pts.reserve(points.size());
  for (const auto& p : points) pts.emplace_back(p.begin(), p.end());
  return convex_hull(pts);
}

inline double polytope_volume(const Polytope& p) { return p.volume(); }

/// Hull of all pairwise vertex sums.
inline Polytope minkowski_sum(const Polytope& a, const Polytope& b) {
  if (a.dim() != b.dim()) throw dimension_mismatch("minkowski_sum: dimension mismatch");
  std::vector<RationalVector> sums;
  sums.reserve(a.vertices().size() * b.vertices().size());
  for (const auto& u : a.vertices()) {
    for (const auto& v : b.vertices()) {
      RationalVector s(u);
      for (std::size_t i = 0; i < s.size(); ++i) s[i] += v[i];
      sums.push_back(std::move(s));
    }
  }
  return convex_hull(sums);
}

}  // namespace realroots
