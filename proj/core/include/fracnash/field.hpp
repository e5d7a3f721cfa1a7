#pragma once

#include <Eigen/Core>

#include "fracnash/grid.hpp"

namespace fracnash {

/// Trajectory of a spatial field over the time grid. Row n holds the field
/// at t_n, so the storage is time-major and each solver sweep touches
/// contiguous rows.
class SpaceTimeField {
 public:
  using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  SpaceTimeField() = default;
  SpaceTimeField(int levels, Eigen::Index ndof) : values_(Matrix::Zero(levels, ndof)) {}
  explicit SpaceTimeField(Matrix values) : values_(std::move(values)) {}

  int levels() const { return int(values_.rows()); }
  Eigen::Index ndof() const { return values_.cols(); }

  Matrix& values() { return values_; }
  const Matrix& values() const { return values_; }

  auto row(int n) { return values_.row(n); }
  auto row(int n) const { return values_.row(n); }

  bool all_finite() const { return values_.allFinite(); }

 private:
  Matrix values_;
};

}  // namespace fracnash
