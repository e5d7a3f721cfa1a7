#include "fracnash/problem.hpp"

namespace fracnash {

void ProblemSpec::validate() const {
  const Eigen::Index ndof = space.dof_count();
  if (!(mu1 > 0.0) || !(mu2 > 0.0))
    throw InvalidArgument("ProblemSpec: regularization weights must be positive");
  if (omega1.size() == 0 || omega2.size() == 0 || omega_d.size() == 0)
    throw InvalidArgument("ProblemSpec: control and observation subdomains must be nonempty");
  if (omega1.ndof() != ndof || omega2.ndof() != ndof || omega_d.ndof() != ndof)
    throw InvalidArgument("ProblemSpec: subdomain grid size mismatch");
  if (initial_state.size() != ndof || target1.size() != ndof || target2.size() != ndof)
    throw InvalidArgument("ProblemSpec: initial state and targets need one entry per grid point");
  if (source.ndof() != ndof)
    throw InvalidArgument("ProblemSpec: source field size mismatch");
  if (!source.is_time_constant() && tracking == TrackingMode::kParabolic &&
      source.levels() != time.levels())
    throw InvalidArgument("ProblemSpec: source trajectory must cover every time level");

  auto check_bounds = [&](const std::optional<ControlBounds>& b, Eigen::Index width) {
    if (!b) return;
    const int rows = control_levels();
    if (b->lower.rows() != rows || b->lower.cols() != width ||
        b->upper.rows() != rows || b->upper.cols() != width)
      throw InvalidArgument("ProblemSpec: bound shape does not match the control shape");
    if (((b->upper - b->lower).array() < 0.0).any())
      throw InvalidArgument("ProblemSpec: lower bound exceeds upper bound");
  };
  check_bounds(bounds1, omega1.size());
  check_bounds(bounds2, omega2.size());
}

}  // namespace fracnash
