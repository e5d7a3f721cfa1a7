#include "fracnash/control_space.hpp"

#include "fracnash/norms.hpp"

namespace fracnash {

Eigen::VectorXd control_time_weights(const ProblemSpec& problem) {
  if (problem.tracking == TrackingMode::kElliptic)
    return Eigen::VectorXd::Ones(1);
  if (problem.control_mode == ControlMode::kTimeConstant)
    return Eigen::VectorXd::Constant(1, problem.time.horizon());
  return trapezoid_weights(problem.time);
}

double h_inner(const ProblemSpec& problem, const ControlPair& a, const ControlPair& b) {
  const Eigen::VectorXd q = control_time_weights(problem);
  double acc = 0.0;
  for (int n = 0; n < q.size(); ++n)
    acc += q[n] * (a.u1.row(n).dot(b.u1.row(n)) + a.u2.row(n).dot(b.u2.row(n)));
  return acc * problem.space.cell_volume();
}

Eigen::VectorXd flatten_controls(const ControlPair& u) {
  const Eigen::Index n1 = u.u1.size();
  const Eigen::Index n2 = u.u2.size();
  Eigen::VectorXd x(n1 + n2);
  Eigen::Index at = 0;
  for (Eigen::Index r = 0; r < u.u1.rows(); ++r)
    for (Eigen::Index c = 0; c < u.u1.cols(); ++c) x[at++] = u.u1(r, c);
  for (Eigen::Index r = 0; r < u.u2.rows(); ++r)
    for (Eigen::Index c = 0; c < u.u2.cols(); ++c) x[at++] = u.u2(r, c);
  return x;
}

ControlPair unflatten_controls(const ProblemSpec& problem, const Eigen::VectorXd& x) {
  const int rows = problem.control_levels();
  const Eigen::Index n1 = problem.omega1.size();
  const Eigen::Index n2 = problem.omega2.size();
  if (x.size() != rows * (n1 + n2))
    throw InvalidArgument("unflatten_controls: coordinate size mismatch");

  ControlPair u = ControlPair::zero(rows, n1, n2);
  Eigen::Index at = 0;
  for (int r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < n1; ++c) u.u1(r, c) = x[at++];
  for (int r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < n2; ++c) u.u2(r, c) = x[at++];
  return u;
}

Eigen::VectorXd h_weight_diagonal(const ProblemSpec& problem) {
  const Eigen::VectorXd q = control_time_weights(problem);
  const double vol = problem.space.cell_volume();
  const int rows = problem.control_levels();
  const Eigen::Index n1 = problem.omega1.size();
  const Eigen::Index n2 = problem.omega2.size();

  Eigen::VectorXd d(rows * (n1 + n2));
  Eigen::Index at = 0;
  for (int r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < n1; ++c) d[at++] = q[r] * vol;
  for (int r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < n2; ++c) d[at++] = q[r] * vol;
  return d;
}

}  // namespace fracnash
