#include "reference_solvers.hpp"

namespace fracnash::testing {

Eigen::MatrixXd classical_laplacian_1d(const SpaceGrid& grid) {
  const int n = grid.points(0);
  const double h = grid.spacing(0);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = 2.0 / (h * h);
    if (i > 0) a(i, i - 1) = -1.0 / (h * h);
    if (i + 1 < n) a(i, i + 1) = -1.0 / (h * h);
  }
  return a;
}

Eigen::MatrixXd backward_euler(const Eigen::MatrixXd& a, const Eigen::MatrixXd& rhs_levels,
                               const Eigen::VectorXd& w0, double tau, int steps) {
  const Eigen::Index n = a.rows();
  Eigen::MatrixXd system = a;
  system.diagonal().array() += 1.0 / tau;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(system);

  Eigen::MatrixXd w(steps + 1, n);
  w.row(0) = w0.transpose();
  for (int m = 1; m <= steps; ++m) {
    const Eigen::VectorXd rhs = rhs_levels.row(m).transpose() + w.row(m - 1).transpose() / tau;
    w.row(m) = lu.solve(rhs).transpose();
  }
  return w;
}

Eigen::MatrixXd spacetime_matrix(const L1Weights& weights, const Eigen::MatrixXd& a, int steps) {
  const Eigen::Index n = a.rows();
  Eigen::MatrixXd big = Eigen::MatrixXd::Zero(steps * n, steps * n);
  for (int row = 1; row <= steps; ++row) {
    big.block((row - 1) * n, (row - 1) * n, n, n) = a;
    big.block((row - 1) * n, (row - 1) * n, n, n).diagonal().array() +=
        weights.beta * weights.b[0];
    for (int col = 1; col < row; ++col) {
      const double coeff = weights.beta * (weights.b[row - col] - weights.b[row - col - 1]);
      big.block((row - 1) * n, (col - 1) * n, n, n).diagonal().array() += coeff;
    }
  }
  return big;
}

Eigen::MatrixXd monolithic_forward(const L1Weights& weights, const Eigen::MatrixXd& a,
                                   const Eigen::MatrixXd& rhs_levels, const Eigen::VectorXd& w0,
                                   int steps) {
  const Eigen::Index n = a.rows();
  const Eigen::MatrixXd big = spacetime_matrix(weights, a, steps);

  Eigen::VectorXd rhs(steps * n);
  for (int m = 1; m <= steps; ++m)
    rhs.segment((m - 1) * n, n) =
        rhs_levels.row(m).transpose() + weights.beta * weights.b[m - 1] * w0;

  const Eigen::VectorXd flat = Eigen::PartialPivLU<Eigen::MatrixXd>(big).solve(rhs);
  Eigen::MatrixXd w(steps + 1, n);
  w.row(0) = w0.transpose();
  for (int m = 1; m <= steps; ++m) w.row(m) = flat.segment((m - 1) * n, n).transpose();
  return w;
}

Eigen::MatrixXd monolithic_adjoint(const L1Weights& weights, const Eigen::MatrixXd& a,
                                   const Eigen::MatrixXd& residual_levels, int steps) {
  const Eigen::Index n = a.rows();
  const Eigen::MatrixXd big = spacetime_matrix(weights, a, steps);

  Eigen::VectorXd rhs(steps * n);
  for (int m = 1; m <= steps; ++m) rhs.segment((m - 1) * n, n) = residual_levels.row(m).transpose();

  const Eigen::VectorXd flat =
      Eigen::PartialPivLU<Eigen::MatrixXd>(big.transpose()).solve(rhs);
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(steps + 1, n);
  for (int m = 1; m <= steps; ++m) p.row(m) = flat.segment((m - 1) * n, n).transpose();
  return p;
}

}  // namespace fracnash::testing
