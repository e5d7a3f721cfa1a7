#include "fracnash/nash.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "fracnash/errors.hpp"
#include "fracnash/norms.hpp"

namespace fracnash {

namespace {

/// Misfit against one player's target, restricted to the observation region
/// and scaled per level by the time-quadrature weights.
SpaceTimeField weighted_observed_misfit(const ProblemSpec& p, const SpaceTimeField& state,
                                        const Eigen::VectorXd& target) {
  const Eigen::VectorXd q = trapezoid_weights(p.time);
  SpaceTimeField r(state.levels(), state.ndof());
  for (int n = 0; n < state.levels(); ++n)
    r.row(n) = q[n] * ((state.row(n).transpose() - target).array() * p.omega_d.mask()).matrix();
  return r;
}

/// Gather one player's tracking-gradient rows from the adjoint trajectory,
/// undoing the per-level quadrature weight (time-dependent controls) or
/// averaging in time (time-constant controls).
Eigen::MatrixXd gather_tracking_gradient(const ProblemSpec& p, const SpaceTimeField& adjoint,
                                         const Subdomain& support) {
  const Eigen::VectorXd q = trapezoid_weights(p.time);
  if (p.control_mode == ControlMode::kTimeDependent) {
    Eigen::MatrixXd g(adjoint.levels(), support.size());
    for (int n = 0; n < adjoint.levels(); ++n)
      g.row(n) =
          restrict_to_region(adjoint.row(n).transpose(), support).transpose() / q[n];
    return g;
  }
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(adjoint.ndof());
  for (int n = 0; n < adjoint.levels(); ++n) sum += adjoint.row(n).transpose();
  return restrict_to_region(sum, support).transpose() / p.time.horizon();
}

ControlPair gradient_from_state(const ForwardSystem& system, const SpaceTimeField& state,
                                const ControlPair& controls, bool subtract_targets) {
  const ProblemSpec& p = system.problem();
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(state.ndof());
  const Eigen::VectorXd& t1 = subtract_targets ? p.target1 : zero;
  const Eigen::VectorXd& t2 = subtract_targets ? p.target2 : zero;

  ControlPair g;
  g.u1 = p.mu1 * controls.u1;
  g.u2 = p.mu2 * controls.u2;

  const SpaceTimeField adj1 = system.solve_adjoint(weighted_observed_misfit(p, state, t1));
  g.u1 += gather_tracking_gradient(p, adj1, p.omega1);
  if (subtract_targets) {
    const SpaceTimeField adj2 = system.solve_adjoint(weighted_observed_misfit(p, state, t2));
    g.u2 += gather_tracking_gradient(p, adj2, p.omega2);
  } else {
    // no targets: both auxiliary adjoints coincide
    g.u2 += gather_tracking_gradient(p, adj1, p.omega2);
  }
  return g;
}

ControlPair gradient_elliptic(const ForwardSystem& system, const Eigen::VectorXd& state,
                              const ControlPair& controls, bool subtract_targets) {
  const ProblemSpec& p = system.problem();
  ControlPair g;
  g.u1 = p.mu1 * controls.u1;
  g.u2 = p.mu2 * controls.u2;

  auto observed = [&](const Eigen::VectorXd& target) {
    return ((state - target).array() * p.omega_d.mask()).matrix().eval();
  };
  if (subtract_targets) {
    const Eigen::VectorXd p1 = system.solve_elliptic(observed(p.target1));
    const Eigen::VectorXd p2 = system.solve_elliptic(observed(p.target2));
    g.u1 += restrict_to_region(p1, p.omega1).transpose();
    g.u2 += restrict_to_region(p2, p.omega2).transpose();
  } else {
    const Eigen::VectorXd zero = Eigen::VectorXd::Zero(state.size());
    const Eigen::VectorXd pt = system.solve_elliptic(observed(zero));
    g.u1 += restrict_to_region(pt, p.omega1).transpose();
    g.u2 += restrict_to_region(pt, p.omega2).transpose();
  }
  return g;
}

double h_norm_sq_player(const ProblemSpec& p, const ControlPair& g, int player) {
  ControlPair only = g;
  if (player == 1)
    only.u2.setZero();
  else
    only.u1.setZero();
  return h_norm_sq(p, only);
}

SpaceTimeField single_level_field(const Eigen::VectorXd& v) {
  SpaceTimeField f(1, v.size());
  f.row(0) = v.transpose();
  return f;
}

ControlPair clamp_controls(const ProblemSpec& p, ControlPair u) {
  if (p.bounds1) u.u1 = u.u1.cwiseMax(p.bounds1->lower).cwiseMin(p.bounds1->upper);
  if (p.bounds2) u.u2 = u.u2.cwiseMax(p.bounds2->lower).cwiseMin(p.bounds2->upper);
  return u;
}

}  // namespace

ControlPair residual_gradient(const ForwardSystem& system, const ControlPair& controls) {
  const ProblemSpec& p = system.problem();
  if (p.tracking == TrackingMode::kElliptic)
    return gradient_elliptic(system, system.solve_elliptic_state(controls), controls, true);
  return gradient_from_state(system, system.solve_state(controls), controls, true);
}

ControlPair apply_operator_A(const ForwardSystem& system, const ControlPair& direction) {
  const ProblemSpec& p = system.problem();
  if (p.tracking == TrackingMode::kElliptic) {
    Eigen::VectorXd rhs =
        extend_by_zero(direction.u1.row(0).transpose(), p.omega1, p.space.dof_count()) +
        extend_by_zero(direction.u2.row(0).transpose(), p.omega2, p.space.dof_count());
    return gradient_elliptic(system, system.solve_elliptic(rhs), direction, false);
  }
  return gradient_from_state(system, system.solve_state_zero_data(direction), direction, false);
}

NashSolution evaluate_at_controls(const ForwardSystem& system, const ControlPair& controls) {
  const ProblemSpec& p = system.problem();
  NashSolution s;
  s.controls = controls;
  if (p.tracking == TrackingMode::kElliptic) {
    const Eigen::VectorXd w = system.solve_elliptic_state(controls);
    s.state = single_level_field(w);
    auto observed = [&](const Eigen::VectorXd& target) {
      return ((w - target).array() * p.omega_d.mask()).matrix().eval();
    };
    s.adjoint1 = single_level_field(system.solve_elliptic(observed(p.target1)));
    s.adjoint2 = single_level_field(system.solve_elliptic(observed(p.target2)));
    s.costs = system.evaluate_costs_elliptic(w, controls);
    return s;
  }

  s.state = system.solve_state(controls);
  auto plain_misfit = [&](const Eigen::VectorXd& target) {
    SpaceTimeField r(s.state.levels(), s.state.ndof());
    for (int n = 0; n < s.state.levels(); ++n)
      r.row(n) = ((s.state.row(n).transpose() - target).array() * p.omega_d.mask()).matrix();
    return r;
  };
  s.adjoint1 = system.solve_adjoint(plain_misfit(p.target1));
  s.adjoint2 = system.solve_adjoint(plain_misfit(p.target2));
  s.costs = system.evaluate_costs(s.state, controls);
  return s;
}

NashSolution nash_cg(const ForwardSystem& system, const CgOptions& options,
                     const ControlPair& initial_guess) {
  const ProblemSpec& p = system.problem();
  if (p.bounds1 || p.bounds2)
    throw InvalidArgument("nash_cg: instance has box bounds; use projected_gradient_solve");
  if (!(options.tol_sq > 0.0)) throw InvalidArgument("nash_cg: tolerance must be positive");

  ControlPair u = initial_guess;
  ControlPair g = residual_gradient(system, u);
  const double g0_sq = h_norm_sq(p, g);

  CgDiagnostics diag;
  diag.tol_sq = options.tol_sq;
  diag.initial_residual_sq = g0_sq;

  if (g0_sq == 0.0) {
    diag.converged = true;
    NashSolution s = evaluate_at_controls(system, u);
    s.diagnostics = diag;
    return s;
  }

  ControlPair h = g;
  double g_sq = g0_sq;
  for (int k = 0; k < options.max_iter; ++k) {
    const ControlPair gbar = apply_operator_A(system, h);
    const double curvature = h_inner(p, gbar, h);
    if (!(curvature > 0.0))
      throw NumericalError("nash_cg: non-positive curvature encountered; the reduced operator "
                           "is not positive definite on this instance");

    const double rho = g_sq / curvature;
    u -= rho * h;
    g -= rho * gbar;

    const double g_next_sq = h_norm_sq(p, g);
    diag.rho_history.push_back(rho);
    diag.rel_residual_sq_history.push_back(g_next_sq / g0_sq);
    diag.iterations = k + 1;

    if (g_next_sq / g0_sq <= options.tol_sq) {
      diag.converged = true;
      g_sq = g_next_sq;
      break;
    }
    const double gamma = g_next_sq / g_sq;
    diag.gamma_history.push_back(gamma);
    h = g + gamma * h;
    g_sq = g_next_sq;
  }

  diag.final_rel_residual_sq = g_sq / g0_sq;
  diag.final_rel_residual_sq_p1 = h_norm_sq_player(p, g, 1) / g0_sq;
  diag.final_rel_residual_sq_p2 = h_norm_sq_player(p, g, 2) / g0_sq;

  NashSolution s = evaluate_at_controls(system, u);
  s.diagnostics = diag;
  return s;
}

NashSolution nash_cg(const ForwardSystem& system, const CgOptions& options) {
  return nash_cg(system, options, system.problem().zero_controls());
}

ProjectedSolution projected_gradient_solve(const ForwardSystem& system,
                                           const ProjectedGradientOptions& options,
                                           const ControlPair& initial_guess) {
  const ProblemSpec& p = system.problem();
  if (!p.bounds1 || !p.bounds2)
    throw InvalidArgument("projected_gradient_solve: both players need box bounds");
  if (!(options.step > 0.0)) throw InvalidArgument("projected_gradient_solve: step must be positive");

  ProjectedSolution out;
  ControlPair u = clamp_controls(p, initial_guess);
  ControlPair g = residual_gradient(system, u);

  for (int cycle = 0; cycle < options.max_iter; ++cycle) {
    u.u1 = (u.u1 - options.step * g.u1).cwiseMax(p.bounds1->lower).cwiseMin(p.bounds1->upper);
    g = residual_gradient(system, u);
    u.u2 = (u.u2 - options.step * g.u2).cwiseMax(p.bounds2->lower).cwiseMin(p.bounds2->upper);
    g = residual_gradient(system, u);

    const ControlPair projected = clamp_controls(p, u - g);
    out.vi_residual = std::sqrt(h_norm_sq(p, u - projected));
    out.cycles = cycle + 1;
    if (out.vi_residual <= options.tol) {
      out.converged = true;
      break;
    }
  }

  out.solution = evaluate_at_controls(system, u);
  out.solution.diagnostics.iterations = out.cycles;
  out.solution.diagnostics.converged = out.converged;
  return out;
}

UnilateralReport unilateral_check(const ForwardSystem& system, const NashSolution& solution,
                                  int trials, double rel_tol, std::uint64_t seed) {
  const ProblemSpec& p = system.problem();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  auto cost_of = [&](const ControlPair& u, int player) {
    if (p.tracking == TrackingMode::kElliptic) {
      const CostReport c = system.evaluate_costs_elliptic(system.solve_elliptic_state(u), u);
      return player == 1 ? c.j1 : c.j2;
    }
    const CostReport c = system.evaluate_costs(system.solve_state(u), u);
    return player == 1 ? c.j1 : c.j2;
  };

  UnilateralReport report;
  report.trials_per_player = trials;

  for (int player = 1; player <= 2; ++player) {
    const Eigen::MatrixXd& base = player == 1 ? solution.controls.u1 : solution.controls.u2;
    const auto& bounds = player == 1 ? p.bounds1 : p.bounds2;
    const double base_cost = cost_of(solution.controls, player);
    const double scale = 0.5 * (1.0 + base.cwiseAbs().maxCoeff());

    for (int t = 0; t < trials; ++t) {
      Eigen::MatrixXd candidate(base.rows(), base.cols());
      if (bounds) {
        for (Eigen::Index i = 0; i < candidate.size(); ++i)
          candidate(i) = bounds->lower(i) + unit(rng) * (bounds->upper(i) - bounds->lower(i));
      } else {
        const double amp = scale * unit(rng);
        for (Eigen::Index i = 0; i < candidate.size(); ++i)
          candidate(i) = base(i) + amp * gauss(rng);
      }
      ControlPair perturbed = solution.controls;
      (player == 1 ? perturbed.u1 : perturbed.u2) = candidate;

      const double delta = cost_of(perturbed, player) - base_cost;
      report.worst_improvement = std::min(report.worst_improvement, delta);
      if (delta < -rel_tol * base_cost) ++report.violations;
    }
  }
  return report;
}

}  // namespace fracnash
