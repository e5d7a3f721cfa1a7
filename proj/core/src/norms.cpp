#include "fracnash/norms.hpp"

#include <cmath>

namespace fracnash {

Eigen::VectorXd trapezoid_weights(const TimeGrid& time) {
  Eigen::VectorXd q = Eigen::VectorXd::Constant(time.levels(), time.tau());
  q[0] *= 0.5;
  q[time.steps()] *= 0.5;
  return q;
}

double l2_norm_space_sq(const Eigen::VectorXd& field, const Subdomain& region,
                        const SpaceGrid& grid) {
  if (field.size() != region.ndof())
    throw InvalidArgument("l2_norm_space: field size does not match the region's grid");
  double acc = 0.0;
  for (Eigen::Index k : region.indices()) acc += field[k] * field[k];
  return acc * grid.cell_volume();
}

double l2_norm_space(const Eigen::VectorXd& field, const Subdomain& region,
                     const SpaceGrid& grid) {
  return std::sqrt(l2_norm_space_sq(field, region, grid));
}

double l2_norm_spacetime(const SpaceTimeField& field, const Subdomain& region,
                         const SpaceGrid& grid, const TimeGrid& time) {
  if (field.levels() != time.levels())
    throw InvalidArgument("l2_norm_spacetime: level count does not match the time grid");
  const Eigen::VectorXd q = trapezoid_weights(time);
  double acc = 0.0;
  for (int n = 0; n < field.levels(); ++n) {
    double level = 0.0;
    for (Eigen::Index k : region.indices()) {
      const double v = field.values()(n, k);
      level += v * v;
    }
    acc += q[n] * level;
  }
  return std::sqrt(acc * grid.cell_volume());
}

}  // namespace fracnash
