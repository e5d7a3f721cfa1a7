#pragma once

#include <array>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "fracnash/grid.hpp"

namespace fracnash {

/// A set of interior grid points, used for the control supports and the
/// observation region. Keeps both the sorted index list (for gathering)
/// and a 0/1 mask (for elementwise products), plus the defining box when
/// the region came from one.
class Subdomain {
 public:
  struct Box {
    std::array<double, 2> lower{0.0, 0.0};
    std::array<double, 2> upper{0.0, 0.0};
  };

  /// Points whose coordinates lie in the closed box [lower, upper] per axis.
  static Subdomain from_box(const SpaceGrid& grid, const Box& box);

  /// Explicit sorted, duplicate-free index list into 0..ndof-1.
  static Subdomain from_indices(std::vector<Eigen::Index> indices, Eigen::Index ndof);

  /// Every interior point.
  static Subdomain whole(const SpaceGrid& grid);

  const std::vector<Eigen::Index>& indices() const { return indices_; }
  Eigen::Index size() const { return Eigen::Index(indices_.size()); }
  const Eigen::ArrayXd& mask() const { return mask_; }
  Eigen::Index ndof() const { return mask_.size(); }
  const std::optional<Box>& box() const { return box_; }

  bool contains(Eigen::Index k) const { return mask_[k] != 0.0; }

 private:
  std::vector<Eigen::Index> indices_;
  Eigen::ArrayXd mask_;
  std::optional<Box> box_;
};

/// Entries of a spatial field at the region's points, in region order.
/// This is the adjoint of extend_by_zero: multiplication by the region's
/// characteristic function followed by dropping the zeros.
Eigen::VectorXd restrict_to_region(const Eigen::VectorXd& field, const Subdomain& region);

/// Spatial field equal to `values` on the region and zero elsewhere.
Eigen::VectorXd extend_by_zero(const Eigen::VectorXd& values, const Subdomain& region,
                               Eigen::Index ndof);

}  // namespace fracnash
