#pragma once

#include <optional>
#include <utility>

#include <Eigen/Core>

#include "fracnash/field.hpp"
#include "fracnash/grid.hpp"
#include "fracnash/subdomain.hpp"

namespace fracnash {

/// Whether the misfit is tracked over omega_d x (0,T) under the evolution
/// equation, or the problem is the stationary variant with no time axis.
enum class TrackingMode { kParabolic, kElliptic };

/// Whether each player's control varies per time level or is one spatial
/// profile applied at every step.
enum class ControlMode { kTimeDependent, kTimeConstant };

/// Source term f: either one spatial profile used at every time level or a
/// full trajectory.
class SourceTerm {
 public:
  SourceTerm() = default;

  static SourceTerm time_constant(Eigen::VectorXd spatial) {
    SourceTerm s;
    s.values_.resize(1, spatial.size());
    s.values_.row(0) = spatial.transpose();
    return s;
  }

  static SourceTerm trajectory(SpaceTimeField::Matrix values) {
    SourceTerm s;
    s.values_ = std::move(values);
    return s;
  }

  bool is_time_constant() const { return values_.rows() == 1; }
  Eigen::Index ndof() const { return values_.cols(); }
  int levels() const { return int(values_.rows()); }

  /// Row for time level n (the constant profile if time-constant).
  Eigen::RowVectorXd level(int n) const {
    return values_.row(is_time_constant() ? 0 : n);
  }

 private:
  SpaceTimeField::Matrix values_ = SpaceTimeField::Matrix::Zero(1, 0);
};

/// Entrywise box bounds on one player's control, matching its value shape.
struct ControlBounds {
  Eigen::MatrixXd lower;
  Eigen::MatrixXd upper;
};

/// The two players' controls. Values are stored per player as a matrix with
/// one row per time level in time-dependent mode, or a single row in
/// time-constant (and elliptic) mode; columns follow the support region's
/// index order.
struct ControlPair {
  Eigen::MatrixXd u1;
  Eigen::MatrixXd u2;

  static ControlPair zero(int rows, Eigen::Index n1, Eigen::Index n2) {
    return {Eigen::MatrixXd::Zero(rows, n1), Eigen::MatrixXd::Zero(rows, n2)};
  }
  static ControlPair constant(int rows, Eigen::Index n1, Eigen::Index n2, double value) {
    return {Eigen::MatrixXd::Constant(rows, n1, value),
            Eigen::MatrixXd::Constant(rows, n2, value)};
  }

  ControlPair operator+(const ControlPair& o) const { return {u1 + o.u1, u2 + o.u2}; }
  ControlPair operator-(const ControlPair& o) const { return {u1 - o.u1, u2 - o.u2}; }
  ControlPair operator*(double a) const { return {a * u1, a * u2}; }
  ControlPair& operator-=(const ControlPair& o) {
    u1 -= o.u1;
    u2 -= o.u2;
    return *this;
  }
  ControlPair& operator+=(const ControlPair& o) {
    u1 += o.u1;
    u2 += o.u2;
    return *this;
  }
};

inline ControlPair operator*(double a, const ControlPair& u) { return u * a; }

/// A complete problem instance: grids, orders, data, subdomains, weights,
/// modes, optional box constraints.
struct ProblemSpec {
  SpaceGrid space = SpaceGrid::line(0.0, 1.0, 2);
  TimeGrid time = TimeGrid(1.0, 1);
  FractionalOrders orders;

  SourceTerm source;
  Eigen::VectorXd initial_state;  // w0
  Eigen::VectorXd target1;        // w_1
  Eigen::VectorXd target2;        // w_2

  double mu1 = 1.0;
  double mu2 = 1.0;

  Subdomain omega1;
  Subdomain omega2;
  Subdomain omega_d;

  TrackingMode tracking = TrackingMode::kParabolic;
  ControlMode control_mode = ControlMode::kTimeDependent;

  std::optional<ControlBounds> bounds1;
  std::optional<ControlBounds> bounds2;

  /// Rows a control-value matrix must have in this instance.
  int control_levels() const {
    return (tracking == TrackingMode::kParabolic &&
            control_mode == ControlMode::kTimeDependent)
               ? time.levels()
               : 1;
  }

  ControlPair zero_controls() const {
    return ControlPair::zero(control_levels(), omega1.size(), omega2.size());
  }

  /// Total number of control degrees of freedom (both players).
  Eigen::Index control_dofs() const {
    return Eigen::Index(control_levels()) * (omega1.size() + omega2.size());
  }

  void validate() const;
};

}  // namespace fracnash
