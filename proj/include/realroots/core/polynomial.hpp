#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "realroots/core/numeric.hpp"

namespace realroots {

/// Sparse multivariate polynomial with double coefficients.
///
/// Monomials are keyed by their exponent vector; all keys of one polynomial
/// have the same length (the number of variables).
class Polynomial {
 public:
  using Exponents = std::vector<int>;

  Polynomial() = default;
  explicit Polynomial(std::size_t variables) : variables_(variables) {}

  static Polynomial constant(std::size_t variables, double c) {
    Polynomial p(variables);
    if (c != 0.0) p.terms_[Exponents(variables, 0)] = c;
    return p;
  }

  /// The linear form x -> sum_i coeffs[i] * x_i.
  static Polynomial linear(std::span<const double> coeffs) {
    Polynomial p(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] == 0.0) continue;
      Exponents e(coeffs.size(), 0);
      e[i] = 1;
      p.terms_[e] = coeffs[i];
    }
    return p;
  }

  std::size_t variables() const { return variables_; }
  const std::map<Exponents, double>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  void add_term(const Exponents& e, double c) {
    if (e.size() != variables_) throw dimension_mismatch("Polynomial::add_term: exponent length");
    double& slot = terms_[e];
    slot += c;
    if (slot == 0.0) terms_.erase(e);
  }

  double operator()(std::span<const double> x) const {
    if (x.size() != variables_) throw dimension_mismatch("Polynomial: evaluation point dimension");
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
      double t = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) t *= x[i];
      sum += t;
    }
    return sum;
  }

  Polynomial& operator+=(const Polynomial& other) {
    check_compatible(other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }

  Polynomial& operator*=(double s) {
    if (s == 0.0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(Polynomial a, double s) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial out(a.variables_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(ea);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

 private:
  void check_compatible(const Polynomial& other) const {
    if (variables_ != other.variables_) throw dimension_mismatch("Polynomial: variable count mismatch");
  }

  std::size_t variables_ = 0;
  std::map<Exponents, double> terms_;
};

/// Integral of a polynomial over the Euclidean ball of the given radius
/// centred at the origin, using exact monomial moments.
inline double integrate_over_ball(const Polynomial& p, double radius) {
  const int k = static_cast<int>(p.variables());
  double total = 0.0;
  for (const auto& [e, c] : p.terms()) {
    bool odd = false;
    int deg = 0;
    double num = 1.0;
    for (int a : e) {
      if (a % 2 != 0) odd = true;
      deg += a;
      num *= std::tgamma(0.5 * (a + 1));
    }
    if (odd) continue;
    double moment = num / std::tgamma(0.5 * (deg + k) + 1.0);
    total += c * moment * std::pow(radius, deg + k);
  }
  return total;
}

}  // namespace realroots
