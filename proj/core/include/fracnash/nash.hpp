#pragma once

#include <cstdint>
#include <vector>

#include "fracnash/control_space.hpp"
#include "fracnash/pde_solvers.hpp"
#include "fracnash/problem.hpp"

namespace fracnash {

/// Iteration record of the conjugate-gradient run: step lengths rho_k,
/// direction factors gamma_k, and the relative squared residual
/// ||g^k||^2 / ||g^0||^2 after each iteration.
struct CgDiagnostics {
  int iterations = 0;
  bool converged = false;
  double tol_sq = 0.0;                 // stopping threshold on ||g||^2/||g0||^2
  double initial_residual_sq = 0.0;    // ||g^0||^2_H
  double final_rel_residual_sq = 0.0;  // ||g^k||^2 / ||g^0||^2 at exit
  double final_rel_residual_sq_p1 = 0.0;
  double final_rel_residual_sq_p2 = 0.0;
  std::vector<double> rel_residual_sq_history;
  std::vector<double> rho_history;
  std::vector<double> gamma_history;
};

/// Equilibrium controls with the state and adjoint trajectories they induce,
/// cost values, and solver diagnostics. In stationary mode the trajectories
/// have a single level.
struct NashSolution {
  ControlPair controls;
  SpaceTimeField state;
  SpaceTimeField adjoint1;
  SpaceTimeField adjoint2;
  CostReport costs;
  CgDiagnostics diagnostics;
};

struct CgOptions {
  double tol_sq = 1e-10;
  int max_iter = 500;
};

/// Joint gradient of the two reduced costs at the given controls:
/// g_j = mu_j u_j + B_j^* p_j, with p_j the adjoint of the observed misfit
/// (w - w_j) chi_d. The gradient is exact for the trapezoid-quadrature costs
/// in the H inner product: the misfit rows are weighted by q_n before the
/// adjoint solve and the restriction is unweighted by 1/q_n after, so the
/// whole map equals A u - b.
ControlPair residual_gradient(const ForwardSystem& system, const ControlPair& controls);

/// Linear part of the optimality map applied to a direction: the same
/// construction with zero source, zero initial state, and no targets. Both
/// players' auxiliary adjoints coincide, so one adjoint solve serves both.
ControlPair apply_operator_A(const ForwardSystem& system, const ControlPair& direction);

/// Conjugate-gradient iteration on A u = b over the product control space.
/// Stops when ||g^k||^2/||g^0||^2 <= tol_sq or the iteration cap is hit
/// (reported as converged = false). A non-positive curvature value
/// (A h, h)_H <= 0 signals a broken discretization and throws.
NashSolution nash_cg(const ForwardSystem& system, const CgOptions& options,
                     const ControlPair& initial_guess);
NashSolution nash_cg(const ForwardSystem& system, const CgOptions& options);

struct ProjectedGradientOptions {
  double tol = 1e-8;  // on the H-norm of the projected residual
  int max_iter = 5000;
  double step = 0.1;
};

/// Alternating projected-gradient iteration for box-constrained admissible
/// sets: u_j <- clamp(u_j - step g_j) cycling the players until the
/// projected residual ||u - clamp(u - g)||_H falls below tol. The final
/// projected-residual norm is stored in diagnostics.final_rel_residual_sq's
/// place via vi_residual.
struct ProjectedSolution {
  NashSolution solution;
  double vi_residual = 0.0;
  int cycles = 0;
  bool converged = false;
};

ProjectedSolution projected_gradient_solve(const ForwardSystem& system,
                                           const ProjectedGradientOptions& options,
                                           const ControlPair& initial_guess);

/// Evaluate state, adjoints, and costs at fixed controls without optimizing
/// (the "no control" path and the fixed-initial-controls path).
NashSolution evaluate_at_controls(const ForwardSystem& system, const ControlPair& controls);

struct UnilateralReport {
  int trials_per_player = 0;
  int violations = 0;
  /// Most negative observed J_j(perturbed) - J_j(equilibrium); negative
  /// values beyond the tolerance are violations of the equilibrium property.
  double worst_improvement = 0.0;
};

/// Samples random admissible unilateral deviations for each player and
/// checks that none lowers that player's cost by more than rel_tol * J_j.
UnilateralReport unilateral_check(const ForwardSystem& system, const NashSolution& solution,
                                  int trials, double rel_tol, std::uint64_t seed);

}  // namespace fracnash
