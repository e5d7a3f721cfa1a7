#pragma once

#include <Eigen/Core>

#include "fracnash/caputo.hpp"
#include "fracnash/field.hpp"
#include "fracnash/problem.hpp"
#include "fracnash/spatial_operator.hpp"

namespace fracnash {

/// Both players' cost values and their pieces:
///   J_j = 1/2 (tracking_j + mu_j * energy_j)
/// with tracking_j the quadrature of ||(w - w_j) chi_d||^2 and energy_j the
/// quadrature of ||u_j||^2 over the support. tracking_curve_j holds the
/// per-time-level squared misfit ||w(t_n) - w_j||^2 over the observation
/// region.
struct CostReport {
  double j1 = 0.0;
  double j2 = 0.0;
  double tracking1 = 0.0;
  double tracking2 = 0.0;
  double energy1 = 0.0;
  double energy2 = 0.0;
  Eigen::VectorXd tracking_curve1;
  Eigen::VectorXd tracking_curve2;
};

/// Owns the assembled spatial operator, the time-stepping weights, and the
/// cached factorization of (beta b_0 I + A); runs the forward, adjoint, and
/// stationary solves for one problem instance. Immutable after construction
/// and safe to share read-only.
class ForwardSystem {
 public:
  explicit ForwardSystem(const ProblemSpec& problem);

  const ProblemSpec& problem() const { return problem_; }
  const L1Weights& weights() const { return weights_; }
  const SpatialOperator& op() const { return op_; }

  /// Trajectory of the state driven by the full data (source, initial state,
  /// both controls). Level n >= 1 solves
  ///   (beta b_0 I + A) w^n = f^n + B1 u1^n + B2 u2^n
  ///     + beta [ b_{n-1} w^0 + sum_{k=1}^{n-1} (b_{n-1-k} - b_{n-k}) w^k ].
  SpaceTimeField solve_state(const ControlPair& controls) const;

  /// Same recursion with zero source and zero initial state; the linear part
  /// of the control-to-state map.
  SpaceTimeField solve_state_zero_data(const ControlPair& controls) const;

  /// Exact transpose, in the unweighted space-time dot product, of
  /// solve_state_zero_data's underlying linear map: the identical L1
  /// recursion run on the time-reversed residual with zero initial value,
  /// reversed back. Level 0 of the result is identically zero (level 0 of
  /// the forward map's input never enters a step).
  SpaceTimeField solve_adjoint(const SpaceTimeField& residual) const;

  /// Stationary solve A w = rhs.
  Eigen::VectorXd solve_elliptic(const Eigen::VectorXd& rhs) const;

  /// Stationary state for given controls: A w = f + B1 u1 + B2 u2.
  Eigen::VectorXd solve_elliptic_state(const ControlPair& controls) const;

  CostReport evaluate_costs(const SpaceTimeField& state, const ControlPair& controls) const;

  /// Stationary-mode costs; the state is a single spatial field.
  CostReport evaluate_costs_elliptic(const Eigen::VectorXd& state,
                                     const ControlPair& controls) const;

 private:
  Eigen::VectorXd control_level(const ControlPair& controls, int n) const;
  SpaceTimeField run_recursion(const SpaceTimeField::Matrix& rhs_levels,
                               const Eigen::VectorXd* initial) const;

  ProblemSpec problem_;
  L1Weights weights_;
  SpatialOperator op_;
  double shift_ = 0.0;  // beta * b_0
};

/// Convenience wrappers matching the operation-level signatures; each builds
/// a ForwardSystem, so prefer the class when solving repeatedly.
SpaceTimeField solve_state(const ProblemSpec& problem, const ControlPair& controls);
SpaceTimeField solve_adjoint(const ProblemSpec& problem, const SpaceTimeField& residual);
Eigen::VectorXd solve_elliptic(const ProblemSpec& problem, const Eigen::VectorXd& rhs);
CostReport evaluate_costs(const ProblemSpec& problem, const SpaceTimeField& state,
                          const ControlPair& controls);

}  // namespace fracnash
