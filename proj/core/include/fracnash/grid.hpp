#pragma once

#include <array>
#include <cmath>

#include <Eigen/Core>

#include "fracnash/errors.hpp"

namespace fracnash {

/// Uniform interior grid on an axis-aligned interval (1D) or rectangle (2D).
/// Points x_i = lower + i*h, i = 1..n, are strictly interior; the function
/// values on the boundary and outside the domain are identically zero.
class SpaceGrid {
 public:
  static SpaceGrid line(double lower, double upper, int n) {
    SpaceGrid g;
    g.dimension_ = 1;
    g.lower_ = {lower, 0.0};
    g.upper_ = {upper, 0.0};
    g.n_ = {n, 1};
    g.validate();
    return g;
  }

  static SpaceGrid rectangle(double x_lower, double x_upper, int nx,
                             double y_lower, double y_upper, int ny) {
    SpaceGrid g;
    g.dimension_ = 2;
    g.lower_ = {x_lower, y_lower};
    g.upper_ = {x_upper, y_upper};
    g.n_ = {nx, ny};
    g.validate();
    return g;
  }

  int dimension() const { return dimension_; }
  int points(int axis) const { return n_[axis]; }
  double lower(int axis) const { return lower_[axis]; }
  double upper(int axis) const { return upper_[axis]; }
  double spacing(int axis) const {
    return (upper_[axis] - lower_[axis]) / (n_[axis] + 1);
  }

  /// Volume of one grid cell, h (1D) or hx*hy (2D); the weight of the
  /// rectangle-rule quadrature behind every spatial L2 norm here.
  double cell_volume() const {
    double v = spacing(0);
    if (dimension_ == 2) v *= spacing(1);
    return v;
  }

  Eigen::Index dof_count() const {
    return dimension_ == 1 ? n_[0] : Eigen::Index(n_[0]) * n_[1];
  }

  /// Linear index of interior point (i, j), both 1-based grid counters;
  /// 1D ignores j. Layout is x-major: k = (i-1)*ny + (j-1).
  Eigen::Index linear_index(int i, int j = 1) const {
    if (dimension_ == 1) return i - 1;
    return Eigen::Index(i - 1) * n_[1] + (j - 1);
  }

  /// Physical coordinates of the interior point with linear index k.
  std::array<double, 2> coords(Eigen::Index k) const {
    if (dimension_ == 1) {
      return {lower_[0] + (double(k) + 1.0) * spacing(0), 0.0};
    }
    const int i = int(k / n_[1]) + 1;
    const int j = int(k % n_[1]) + 1;
    return {lower_[0] + i * spacing(0), lower_[1] + j * spacing(1)};
  }

 private:
  void validate() const {
    for (int a = 0; a < dimension_; ++a) {
      if (n_[a] < 2) throw InvalidArgument("SpaceGrid: need at least 2 interior points per axis");
      if (!(upper_[a] > lower_[a])) throw InvalidArgument("SpaceGrid: upper bound must exceed lower");
    }
  }

  int dimension_ = 1;
  std::array<double, 2> lower_{0.0, 0.0};
  std::array<double, 2> upper_{1.0, 0.0};
  std::array<int, 2> n_{2, 1};
};

/// Uniform time grid t_n = n*tau on [0, T].
class TimeGrid {
 public:
  TimeGrid() = default;
  TimeGrid(double horizon, int steps) : horizon_(horizon), steps_(steps) {
    if (!(horizon > 0.0)) throw InvalidArgument("TimeGrid: horizon must be positive");
    if (steps < 1) throw InvalidArgument("TimeGrid: need at least one step");
  }

  double horizon() const { return horizon_; }
  int steps() const { return steps_; }
  int levels() const { return steps_ + 1; }
  double tau() const { return horizon_ / steps_; }
  double node(int n) const { return n * tau(); }

 private:
  double horizon_ = 1.0;
  int steps_ = 1;
};

/// Orders of the time derivative (gamma) and of the spatial operator (s),
/// both in (0, 1]. The value 1 is admitted so the classical limits
/// (backward Euler in time, the ordinary Laplacian in space) are reachable.
struct FractionalOrders {
  double gamma = 1.0;
  double s = 1.0;

  FractionalOrders() = default;
  FractionalOrders(double gamma_, double s_) : gamma(gamma_), s(s_) {
    if (!(gamma > 0.0) || gamma > 1.0) throw InvalidArgument("FractionalOrders: gamma must lie in (0, 1]");
    if (!(s > 0.0) || s > 1.0) throw InvalidArgument("FractionalOrders: s must lie in (0, 1]");
  }
};

}  // namespace fracnash
