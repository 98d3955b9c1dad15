#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace realroots {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using RationalVector = std::vector<Rational>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Error taxonomy shared by every module. The CLI maps these onto exit codes.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct dimension_mismatch : error {
  using error::error;
};
struct invalid_input : error {
  using error::error;
};
struct unsupported : error {
  using error::error;
};
struct numeric_failure : error {
  using error::error;
};

/// Volume of the unit ball in R^n; sigma_0 = 1.
inline double unit_ball_volume(int n) {
  if (n < 0) throw invalid_input("unit_ball_volume: negative dimension");
  return std::pow(pi, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

inline double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline std::vector<double> to_double(const RationalVector& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_double(x));
  return out;
}

/// Parses "p", "p/q" or a finite decimal such as "-1.25" into an exact rational.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw invalid_input("empty rational literal");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw invalid_input("zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(BigInt(text));
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  BigInt den = 1;
  for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
  if (digits == "-" || digits == "+" || digits.empty()) digits += "0";
  return Rational(BigInt(digits), den);
}

inline std::string format_rational(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline bool relative_close(double a, double b, double tol) {
  double scale = std::max({1e-300, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= tol * scale;
}

}  // namespace realroots
