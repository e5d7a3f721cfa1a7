#pragma once

#include <Eigen/Core>

namespace fracnash {

/// L1 discretization weights for the time-fractional derivative of order
/// gamma on a uniform grid with step tau:
///
///   d^gamma w(t_n) ~ beta * sum_{k=0}^{n-1} b_{n-1-k} (w^{k+1} - w^k),
///   b_j = (j+1)^{1-gamma} - j^{1-gamma},   beta = tau^{-gamma} / Gamma(2-gamma).
///
/// b_0 = 1 always; for gamma = 1 all later weights vanish and the scheme is
/// plain backward Euler.
struct L1Weights {
  double gamma = 1.0;
  double beta = 1.0;
  Eigen::VectorXd b;  // b_0 .. b_{M-1}

  /// Coefficient of w^k in the history side of the step for level n,
  /// beta * (b_{n-1-k} - b_{n-k}); the initial level uses beta * b_{n-1}.
  double history_coeff(int n, int k) const { return beta * (b[n - 1 - k] - b[n - k]); }
};

L1Weights l1_weights(double gamma, int steps, double tau);

}  // namespace fracnash
