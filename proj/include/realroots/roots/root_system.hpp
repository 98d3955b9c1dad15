#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "realroots/core/numeric.hpp"

namespace realroots {

using IntVector = std::vector<int>;
using RationalMatrix = std::vector<RationalVector>;

/// Root datum of a compact simple Lie group, simply connected form.
///
/// Weights are stored in the fundamental-weight basis, so the weight lattice
/// is Z^k and the dominant chamber is the non-negative orthant. The Euclidean
/// model keeps the classical embedding of the simple roots; every invariant
/// form used below is a multiple of its Gram matrix.
struct RootSystem {
  std::string code;
  char family = 'A';
  int rank = 0;

  std::vector<RationalVector> simple_roots;  // Euclidean model
  std::vector<IntVector> cartan;             // cartan[i][j] = <alpha_i, alpha_j^vee>
  std::vector<IntVector> positive_roots;     // fundamental-weight coordinates
  std::vector<IntVector> positive_roots_simple;  // simple-root coordinates
  IntVector rho;                             // (1, ..., 1)
  IntVector highest_root;                    // fundamental-weight coordinates
  std::size_t weyl_order = 0;
  int dual_coxeter = 0;

  RationalMatrix euclidean_gram;  // (omega_i, omega_j) in the Euclidean model
  Rational killing_factor;        // Killing form = killing_factor * Euclidean form
  RationalMatrix killing_gram;    // (omega_i, omega_j)_K

  std::size_t positive_root_count() const { return positive_roots.size(); }
  /// Real dimension of the group, n = k + 2|R+|.
  int group_dimension() const { return rank + 2 * static_cast<int>(positive_roots.size()); }

  /// Simple root alpha_i in fundamental-weight coordinates (row i of the Cartan matrix).
  IntVector simple_root(int i) const { return cartan[static_cast<std::size_t>(i)]; }

  /// Exact Killing pairing of two weights given in fundamental coordinates.
  template <class Vec>
  Rational killing(const Vec& x, const Vec& y) const {
    Rational s = 0;
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) s += killing_gram[i][j] * Rational(x[i]) * Rational(y[j]);
    return s;
  }

  /// s_i(lambda) = lambda - lambda_i alpha_i.
  IntVector reflect(const IntVector& lambda, int i) const {
    IntVector out = lambda;
    const int c = lambda[static_cast<std::size_t>(i)];
    for (int j = 0; j < rank; ++j) out[j] -= c * cartan[i][j];
    return out;
  }
};

namespace detail {

inline RationalMatrix rational_inverse(RationalMatrix a) {
  const std::size_t n = a.size();
  RationalMatrix inv(n, RationalVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw numeric_failure("rational_inverse: singular matrix");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    const Rational d = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= d;
      inv[c][j] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

inline Rational rational_determinant(RationalMatrix a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

inline Rational euclid_dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline std::vector<RationalVector> classical_simple_roots(char family, int k) {
  auto e = [](int dim, int i) {
    RationalVector v(static_cast<std::size_t>(dim), Rational(0));
    v[static_cast<std::size_t>(i)] = 1;
    return v;
  };
  auto sub = [](RationalVector a, const RationalVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
  };
  std::vector<RationalVector> roots;
  switch (family) {
    case 'A':
      for (int i = 0; i < k; ++i) roots.push_back(sub(e(k + 1, i), e(k + 1, i + 1)));
      break;
    case 'B':
      for (int i = 0; i + 1 < k; ++i) roots.push_back(sub(e(k, i), e(k, i + 1)));
      roots.push_back(e(k, k - 1));
      break;
    case 'C': {
      for (int i = 0; i + 1 < k; ++i) roots.push_back(sub(e(k, i), e(k, i + 1)));
      auto last = e(k, k - 1);
      last[static_cast<std::size_t>(k - 1)] = 2;
      roots.push_back(last);
      break;
    }
    case 'G':
      // alpha_1 short, alpha_2 long, inside the plane x+y+z = 0.
      roots.push_back({1, -1, 0});
      roots.push_back({-2, 1, 1});
      break;
    default:
      break;
  }
  return roots;
}

inline bool in_catalogue(char family, int rank) {
  switch (family) {
    case 'A': return rank >= 1 && rank <= 3;
    case 'B': return rank >= 2 && rank <= 3;
    case 'C': return rank >= 2 && rank <= 3;
    case 'G': return rank == 2;
    default: return false;
  }
}

}  // namespace detail

/// Builds the root datum for a catalogued (family, rank): A1-A3, B2, B3, C2, C3, G2.
inline RootSystem build_root_system(char family, int rank) {
  if (!detail::in_catalogue(family, rank))
    throw unsupported(std::string("root system not in catalogue: ") + family + std::to_string(rank));
  RootSystem rs;
  rs.family = family;
  rs.rank = rank;
  rs.code = std::string(1, family) + std::to_string(rank);
  rs.simple_roots = detail::classical_simple_roots(family, rank);
  const auto k = static_cast<std::size_t>(rank);

  RationalMatrix root_gram(k, RationalVector(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) root_gram[i][j] = detail::euclid_dot(rs.simple_roots[i], rs.simple_roots[j]);

  rs.cartan.assign(k, IntVector(k, 0));
  RationalMatrix cartan_q(k, RationalVector(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Rational a = 2 * root_gram[i][j] / root_gram[j][j];
      if (denominator(a) != 1) throw numeric_failure("non-integral Cartan entry");
      rs.cartan[i][j] = static_cast<int>(numerator(a));
      cartan_q[i][j] = a;
    }

  // alpha = A omega  =>  omega = A^{-1} alpha and Gram_omega = A^{-1} Gram_alpha A^{-T}.
  const RationalMatrix inv = detail::rational_inverse(cartan_q);
  rs.euclidean_gram.assign(k, RationalVector(k, Rational(0)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) rs.euclidean_gram[i][j] += inv[i][a] * root_gram[a][b] * inv[j][b];

  // Positive roots by height: beta + alpha_i is a root iff q = p - <beta, alpha_i^vee> > 0.
  std::vector<IntVector> roots;
  std::set<IntVector> known;
  for (std::size_t i = 0; i < k; ++i) {
    IntVector c(k, 0);
    c[i] = 1;
    roots.push_back(c);
    known.insert(c);
  }
  for (std::size_t idx = 0; idx < roots.size(); ++idx) {
    const IntVector beta = roots[idx];
    for (std::size_t i = 0; i < k; ++i) {
      int pairing = 0;
      for (std::size_t j = 0; j < k; ++j) pairing += beta[j] * rs.cartan[j][i];
      int p = 0;
      IntVector down = beta;
      while (true) {
        --down[i];
        if (!known.count(down)) break;
        ++p;
      }
      if (p - pairing > 0) {
        IntVector up = beta;
        ++up[i];
        if (known.insert(up).second) roots.push_back(up);
      }
    }
  }
  rs.positive_roots_simple = roots;
  for (const auto& c : roots) {
    IntVector f(k, 0);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < k; ++i) f[j] += c[i] * rs.cartan[i][j];
    rs.positive_roots.push_back(f);
  }
  rs.rho.assign(k, 1);

  // Highest root: the unique root of maximal height.
  std::size_t best = 0;
  int best_height = -1;
  for (std::size_t r = 0; r < roots.size(); ++r) {
    int h = 0;
    for (int x : roots[r]) h += x;
    if (h > best_height) {
      best_height = h;
      best = r;
    }
  }
  rs.highest_root = rs.positive_roots[best];

  auto euclid = [&](const IntVector& x, const IntVector& y) {
    Rational s = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) s += rs.euclidean_gram[i][j] * x[i] * y[j];
    return s;
  };
  IntVector theta_2rho = rs.highest_root;
  for (std::size_t i = 0; i < k; ++i) theta_2rho[i] += 2 * rs.rho[i];
  const Rational casimir_adjoint = euclid(rs.highest_root, theta_2rho);
  rs.killing_factor = 1 / casimir_adjoint;
  rs.killing_gram = rs.euclidean_gram;
  for (auto& row : rs.killing_gram)
    for (auto& x : row) x *= rs.killing_factor;
  const Rational hv = casimir_adjoint / euclid(rs.highest_root, rs.highest_root);
  rs.dual_coxeter = static_cast<int>(numerator(hv));

  // |W| is the size of the orbit of the regular weight rho.
  std::set<IntVector> orbit{rs.rho};
  std::vector<IntVector> frontier{rs.rho};
  while (!frontier.empty()) {
    IntVector v = frontier.back();
    frontier.pop_back();
    for (int i = 0; i < rank; ++i) {
      IntVector w = rs.reflect(v, i);
      if (orbit.insert(w).second) frontier.push_back(w);
    }
  }
  rs.weyl_order = orbit.size();
  return rs;
}

/// Parses a CLI code such as "A2" or "G2".
inline RootSystem root_system_from_code(const std::string& code) {
  if (code.size() < 2) throw invalid_input("bad root system code: " + code);
  char family = static_cast<char>(std::toupper(static_cast<unsigned char>(code[0])));
  int rank = 0;
  try {
    std::size_t used = 0;
    rank = std::stoi(code.substr(1), &used);
    if (used + 1 != code.size()) throw invalid_input("bad root system code: " + code);
  } catch (const std::logic_error&) {
    throw invalid_input("bad root system code: " + code);
  }
  return build_root_system(family, rank);
}

inline std::vector<std::string> catalogue_codes() { return {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "G2"}; }

}  // namespace realroots
