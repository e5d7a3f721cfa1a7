#pragma once

#include <map>
#include <memory>

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include "fracnash/grid.hpp"

namespace fracnash {

/// Fractional centered-difference weights c_0..c_K for the 1D operator of
/// order s:
///
///   c_m = (-1)^m Gamma(2s+1) / (Gamma(s-m+1) Gamma(s+m+1)),
///
/// computed by the recurrence c_{m+1} = c_m (m-s)/(m+s+1) from
/// c_0 = Gamma(2s+1)/Gamma(s+1)^2. For s = 1 they reduce to the classical
/// 3-point stencil (2, -1, 0, ...).
Eigen::VectorXd fcd_weights(double s, int max_offset);

/// Symmetric positive-definite discretization of the fractional Laplacian
/// with homogeneous exterior condition.
///
/// 1D: dense symmetric Toeplitz matrix with first row h^{-2s} (c_0 .. c_{N-1})
///     (full interior coupling, values outside the interior treated as zero).
/// 2D: spectral power of the 5-point Laplacian, acting through the
///     tensor-product sine eigenbasis with eigenvalues lambda^s.
///
/// Shifted solves (sigma I + A) x = y reuse a cached factorization per shift;
/// prepare_shift() must be called before concurrent use of solve_shifted().
class SpatialOperator {
 public:
  SpatialOperator() = default;  // empty; assign from a factory before use

  static SpatialOperator fractional_centered_1d(double s, const SpaceGrid& grid);
  static SpatialOperator spectral_2d(double s, const SpaceGrid& grid);

  double order() const { return s_; }
  Eigen::Index size() const { return size_; }
  int dimension() const { return dimension_; }

  Eigen::VectorXd apply(const Eigen::VectorXd& v) const;

  void prepare_shift(double sigma);
  Eigen::VectorXd solve_shifted(double sigma, const Eigen::VectorXd& rhs) const;

  /// Solve A x = rhs (the unshifted operator; used by the stationary mode).
  Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const { return solve_shifted(0.0, rhs); }

  /// Dense matrix realization, for certification and small-instance tests.
  Eigen::MatrixXd dense() const;

 private:
  // 1D representation
  Eigen::MatrixXd matrix_;  // dense symmetric Toeplitz
  std::map<double, std::shared_ptr<Eigen::LLT<Eigen::MatrixXd>>> shifted_llt_;

  // 2D representation
  Eigen::MatrixXd sine_x_;       // orthogonal sine-transform matrix, x axis
  Eigen::MatrixXd sine_y_;       // y axis
  Eigen::ArrayXXd lambda_pow_;   // lambda_{k,l}^s, shape nx x ny

  double s_ = 1.0;
  Eigen::Index size_ = 0;
  int dimension_ = 1;
  int nx_ = 0;
  int ny_ = 0;
};

/// Factory names matching the two representations.
inline SpatialOperator assemble_frac_laplacian_1d(double s, const SpaceGrid& grid) {
  return SpatialOperator::fractional_centered_1d(s, grid);
}
inline SpatialOperator assemble_frac_laplacian_2d(double s, const SpaceGrid& grid) {
  return SpatialOperator::spectral_2d(s, grid);
}

/// Dispatch on the grid dimension.
SpatialOperator assemble_frac_laplacian(double s, const SpaceGrid& grid);

}  // namespace fracnash
