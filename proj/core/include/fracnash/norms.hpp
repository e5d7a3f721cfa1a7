#pragma once

#include <Eigen/Core>

#include "fracnash/field.hpp"
#include "fracnash/grid.hpp"
#include "fracnash/subdomain.hpp"

namespace fracnash {

/// Trapezoidal quadrature weights over the time nodes:
/// q_0 = q_M = tau/2, q_n = tau in between. They sum to the horizon.
Eigen::VectorXd trapezoid_weights(const TimeGrid& time);

/// Rectangle-rule L2 norm of a spatial field over a region:
/// sqrt(sum_{i in region} f_i^2 * cell_volume).
double l2_norm_space(const Eigen::VectorXd& field, const Subdomain& region,
                     const SpaceGrid& grid);

/// Squared version, exposed because cost functionals accumulate squares.
double l2_norm_space_sq(const Eigen::VectorXd& field, const Subdomain& region,
                        const SpaceGrid& grid);

/// Space-time L2 norm over region x (0,T): trapezoid in time, rectangle in
/// space.
double l2_norm_spacetime(const SpaceTimeField& field, const Subdomain& region,
                         const SpaceGrid& grid, const TimeGrid& time);

}  // namespace fracnash
