#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>

#include <Eigen/Dense>

#include "realroots/core/numeric.hpp"

namespace realroots {

/// Centrally symmetric ellipsoid given by the PSD form Q of its support
/// function h(xi) = sqrt(xi^T Q xi). Rank-deficient Q gives a flat ellipsoid
/// lying in the orthogonal complement of ker Q.
class Ellipsoid {
 public:
  Ellipsoid() = default;

  explicit Ellipsoid(const Eigen::MatrixXd& q) {
    if (q.rows() != q.cols() || q.rows() == 0) throw invalid_input("Ellipsoid: Q must be square and non-empty");
    Eigen::MatrixXd sym = 0.5 * (q + q.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
    Eigen::VectorXd evals = es.eigenvalues();
    const double tol = 1e-12 * std::max(0.0, sym.trace());
    for (Eigen::Index i = 0; i < evals.size(); ++i) {
      if (evals[i] < -tol) throw invalid_input("Ellipsoid: Q is not positive semidefinite");
      if (evals[i] <= tol) evals[i] = 0.0;
    }
    eigenvalues_ = evals;
    eigenvectors_ = es.eigenvectors();
    q_ = eigenvectors_ * evals.asDiagonal() * eigenvectors_.transpose();
  }

  static Ellipsoid ball(std::size_t dim, double radius) {
    return Ellipsoid(Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim)) *
                     (radius * radius));
  }

  std::size_t dim() const { return static_cast<std::size_t>(q_.rows()); }
  const Eigen::MatrixXd& Q() const { return q_; }
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  const Eigen::MatrixXd& eigenvectors() const { return eigenvectors_; }

  std::size_t rank() const {
    std::size_t r = 0;
    for (Eigen::Index i = 0; i < eigenvalues_.size(); ++i)
      if (eigenvalues_[i] > 0.0) ++r;
    return r;
  }

  double support(std::span<const double> xi) const {
    if (xi.size() != dim()) throw dimension_mismatch("Ellipsoid::support");
    Eigen::Map<const Eigen::VectorXd> v(xi.data(), static_cast<Eigen::Index>(xi.size()));
    return std::sqrt(std::max(0.0, v.dot(q_ * v)));
  }

  double volume() const {
    if (rank() < dim()) return 0.0;
    double det = 1.0;
    for (Eigen::Index i = 0; i < eigenvalues_.size(); ++i) det *= eigenvalues_[i];
    return unit_ball_volume(static_cast<int>(dim())) * std::sqrt(det);
  }

  /// Radius when Q is a scalar multiple of the identity (relative tolerance).
  std::optional<double> ball_radius(double rel_tol = 1e-9) const {
    const double scale = std::max(1e-300, eigenvalues_.cwiseAbs().maxCoeff());
    const double q = q_.diagonal().mean();
    Eigen::MatrixXd diff = q_ - q * Eigen::MatrixXd::Identity(q_.rows(), q_.cols());
    if (diff.cwiseAbs().maxCoeff() > rel_tol * scale) return std::nullopt;
    return std::sqrt(std::max(0.0, q));
  }

  /// Square-root factor L with L L^T = Q.
  Eigen::MatrixXd sqrt_factor() const {
    return eigenvectors_ * eigenvalues_.cwiseSqrt().asDiagonal();
  }

  friend bool operator==(const Ellipsoid& a, const Ellipsoid& b) {
    return a.q_.rows() == b.q_.rows() && a.q_ == b.q_;
  }

 private:
  Eigen::MatrixXd q_;
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd eigenvectors_;
};

inline double ellipsoid_volume(const Ellipsoid& e) { return e.volume(); }

}  // namespace realroots
