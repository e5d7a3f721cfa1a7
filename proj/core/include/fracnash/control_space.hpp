#pragma once

#include <Eigen/Core>

#include "fracnash/problem.hpp"

namespace fracnash {

/// The control space H is the product of the two players' quadrature-weighted
/// L2 spaces:
///   time-dependent: (u,v) = sum_n q_n * cell_vol * sum_{omega_j} u v
///   time-constant:  (u,v) = T * cell_vol * sum_{omega_j} u v
///   stationary:     (u,v) = cell_vol * sum_{omega_j} u v
/// so coercivity constants and gradients are mesh-independent.

/// Quadrature weight of one control row (time level). Size equals the number
/// of rows a control matrix has in this instance.
Eigen::VectorXd control_time_weights(const ProblemSpec& problem);

double h_inner(const ProblemSpec& problem, const ControlPair& a, const ControlPair& b);

inline double h_norm_sq(const ProblemSpec& problem, const ControlPair& a) {
  return h_inner(problem, a, a);
}

/// Flatten to a single coordinate vector: player 1 rows (level-major) first,
/// then player 2. The inverse of unflatten_controls.
Eigen::VectorXd flatten_controls(const ControlPair& u);
ControlPair unflatten_controls(const ProblemSpec& problem, const Eigen::VectorXd& x);

/// Diagonal of the H inner product in flattened coordinates.
Eigen::VectorXd h_weight_diagonal(const ProblemSpec& problem);

}  // namespace fracnash
