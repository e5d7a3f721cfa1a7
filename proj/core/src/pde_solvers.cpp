#include "fracnash/pde_solvers.hpp"

#include "fracnash/norms.hpp"

namespace fracnash {

ForwardSystem::ForwardSystem(const ProblemSpec& problem) : problem_(problem) {
  problem_.validate();
  op_ = assemble_frac_laplacian(problem_.orders.s, problem_.space);
  if (problem_.tracking == TrackingMode::kParabolic) {
    weights_ = l1_weights(problem_.orders.gamma, problem_.time.steps(), problem_.time.tau());
    shift_ = weights_.beta * weights_.b[0];
    op_.prepare_shift(shift_);
  }
  op_.prepare_shift(0.0);
}

Eigen::VectorXd ForwardSystem::control_level(const ControlPair& controls, int n) const {
  const int row = problem_.control_mode == ControlMode::kTimeConstant ? 0 : n;
  Eigen::VectorXd v =
      extend_by_zero(controls.u1.row(row).transpose(), problem_.omega1, op_.size());
  v += extend_by_zero(controls.u2.row(row).transpose(), problem_.omega2, op_.size());
  return v;
}

SpaceTimeField ForwardSystem::run_recursion(const SpaceTimeField::Matrix& rhs_levels,
                                            const Eigen::VectorXd* initial) const {
  const int m = problem_.time.steps();
  const Eigen::Index ndof = op_.size();
  SpaceTimeField w(m + 1, ndof);
  if (initial) w.row(0) = initial->transpose();

  const double beta = weights_.beta;
  const Eigen::VectorXd& b = weights_.b;
  Eigen::VectorXd rhs(ndof);
  for (int n = 1; n <= m; ++n) {
    rhs = rhs_levels.row(n).transpose();
    if (initial) rhs += beta * b[n - 1] * w.row(0).transpose();
    for (int k = 1; k < n; ++k)
      rhs += beta * (b[n - 1 - k] - b[n - k]) * w.row(k).transpose();
    w.row(n) = op_.solve_shifted(shift_, rhs).transpose();
  }
  return w;
}

SpaceTimeField ForwardSystem::solve_state(const ControlPair& controls) const {
  if (problem_.tracking != TrackingMode::kParabolic)
    throw InvalidArgument("solve_state: instance is stationary; use solve_elliptic_state");
  const int m = problem_.time.steps();
  SpaceTimeField::Matrix rhs(m + 1, op_.size());
  rhs.row(0).setZero();
  for (int n = 1; n <= m; ++n)
    rhs.row(n) = problem_.source.level(n) + control_level(controls, n).transpose();
  return run_recursion(rhs, &problem_.initial_state);
}

SpaceTimeField ForwardSystem::solve_state_zero_data(const ControlPair& controls) const {
  if (problem_.tracking != TrackingMode::kParabolic)
    throw InvalidArgument("solve_state_zero_data: instance is stationary");
  const int m = problem_.time.steps();
  SpaceTimeField::Matrix rhs(m + 1, op_.size());
  rhs.row(0).setZero();
  for (int n = 1; n <= m; ++n) rhs.row(n) = control_level(controls, n).transpose();
  return run_recursion(rhs, nullptr);
}

SpaceTimeField ForwardSystem::solve_adjoint(const SpaceTimeField& residual) const {
  if (problem_.tracking != TrackingMode::kParabolic)
    throw InvalidArgument("solve_adjoint: instance is stationary; the operator is its own adjoint");
  const int m = problem_.time.steps();
  if (residual.levels() != m + 1 || residual.ndof() != op_.size())
    throw InvalidArgument("solve_adjoint: residual shape mismatch");

  // Transposing the block lower-triangular step matrix is the same recursion
  // run against the reversed time index: level m of the reversed problem
  // reads residual level M+1-m, and the zero initial value of the reversed
  // recursion carries the terminal condition.
  SpaceTimeField::Matrix reversed(m + 1, op_.size());
  reversed.row(0).setZero();
  for (int n = 1; n <= m; ++n) reversed.row(n) = residual.row(m + 1 - n);

  SpaceTimeField q = run_recursion(reversed, nullptr);

  SpaceTimeField p(m + 1, op_.size());
  p.row(0).setZero();
  for (int n = 1; n <= m; ++n) p.row(n) = q.row(m + 1 - n);
  return p;
}

Eigen::VectorXd ForwardSystem::solve_elliptic(const Eigen::VectorXd& rhs) const {
  return op_.solve(rhs);
}

Eigen::VectorXd ForwardSystem::solve_elliptic_state(const ControlPair& controls) const {
  Eigen::VectorXd rhs = problem_.source.level(0).transpose();
  rhs += control_level(controls, 0);
  return op_.solve(rhs);
}

CostReport ForwardSystem::evaluate_costs(const SpaceTimeField& state,
                                         const ControlPair& controls) const {
  const Eigen::VectorXd q = trapezoid_weights(problem_.time);
  const double vol = problem_.space.cell_volume();
  const int m = problem_.time.steps();

  CostReport r;
  r.tracking_curve1.resize(m + 1);
  r.tracking_curve2.resize(m + 1);

  for (int n = 0; n <= m; ++n) {
    double m1 = 0.0, m2 = 0.0;
    for (Eigen::Index k : problem_.omega_d.indices()) {
      const double d1 = state.values()(n, k) - problem_.target1[k];
      const double d2 = state.values()(n, k) - problem_.target2[k];
      m1 += d1 * d1;
      m2 += d2 * d2;
    }
    r.tracking_curve1[n] = m1 * vol;
    r.tracking_curve2[n] = m2 * vol;
    r.tracking1 += q[n] * m1 * vol;
    r.tracking2 += q[n] * m2 * vol;

    const int row = problem_.control_mode == ControlMode::kTimeConstant ? 0 : n;
    r.energy1 += q[n] * controls.u1.row(row).squaredNorm() * vol;
    r.energy2 += q[n] * controls.u2.row(row).squaredNorm() * vol;
  }

  r.j1 = 0.5 * (r.tracking1 + problem_.mu1 * r.energy1);
  r.j2 = 0.5 * (r.tracking2 + problem_.mu2 * r.energy2);
  return r;
}

CostReport ForwardSystem::evaluate_costs_elliptic(const Eigen::VectorXd& state,
                                                  const ControlPair& controls) const {
  const double vol = problem_.space.cell_volume();
  CostReport r;
  double m1 = 0.0, m2 = 0.0;
  for (Eigen::Index k : problem_.omega_d.indices()) {
    const double d1 = state[k] - problem_.target1[k];
    const double d2 = state[k] - problem_.target2[k];
    m1 += d1 * d1;
    m2 += d2 * d2;
  }
  r.tracking1 = m1 * vol;
  r.tracking2 = m2 * vol;
  r.tracking_curve1 = Eigen::VectorXd::Constant(1, r.tracking1);
  r.tracking_curve2 = Eigen::VectorXd::Constant(1, r.tracking2);
  r.energy1 = controls.u1.squaredNorm() * vol;
  r.energy2 = controls.u2.squaredNorm() * vol;
  r.j1 = 0.5 * (r.tracking1 + problem_.mu1 * r.energy1);
  r.j2 = 0.5 * (r.tracking2 + problem_.mu2 * r.energy2);
  return r;
}

SpaceTimeField solve_state(const ProblemSpec& problem, const ControlPair& controls) {
  return ForwardSystem(problem).solve_state(controls);
}

SpaceTimeField solve_adjoint(const ProblemSpec& problem, const SpaceTimeField& residual) {
  return ForwardSystem(problem).solve_adjoint(residual);
}

Eigen::VectorXd solve_elliptic(const ProblemSpec& problem, const Eigen::VectorXd& rhs) {
  return ForwardSystem(problem).solve_elliptic(rhs);
}

CostReport evaluate_costs(const ProblemSpec& problem, const SpaceTimeField& state,
                          const ControlPair& controls) {
  return ForwardSystem(problem).evaluate_costs(state, controls);
}

}  // namespace fracnash
