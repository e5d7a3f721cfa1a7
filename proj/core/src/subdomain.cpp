#include "fracnash/subdomain.hpp"

#include <algorithm>

namespace fracnash {

Subdomain Subdomain::from_box(const SpaceGrid& grid, const Box& box) {
  std::vector<Eigen::Index> idx;
  const Eigen::Index ndof = grid.dof_count();
  for (Eigen::Index k = 0; k < ndof; ++k) {
    const auto xy = grid.coords(k);
    bool inside = xy[0] >= box.lower[0] && xy[0] <= box.upper[0];
    if (grid.dimension() == 2)
      inside = inside && xy[1] >= box.lower[1] && xy[1] <= box.upper[1];
    if (inside) idx.push_back(k);
  }
  Subdomain s = from_indices(std::move(idx), ndof);
  s.box_ = box;
  return s;
}

Subdomain Subdomain::from_indices(std::vector<Eigen::Index> indices, Eigen::Index ndof) {
  std::sort(indices.begin(), indices.end());
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end())
    throw InvalidArgument("Subdomain: duplicate index");
  for (Eigen::Index k : indices)
    if (k < 0 || k >= ndof) throw InvalidArgument("Subdomain: index out of range");

  Subdomain s;
  s.indices_ = std::move(indices);
  s.mask_ = Eigen::ArrayXd::Zero(ndof);
  for (Eigen::Index k : s.indices_) s.mask_[k] = 1.0;
  return s;
}

Subdomain Subdomain::whole(const SpaceGrid& grid) {
  std::vector<Eigen::Index> idx(size_t(grid.dof_count()));
  for (Eigen::Index k = 0; k < grid.dof_count(); ++k) idx[size_t(k)] = k;
  Subdomain s = from_indices(std::move(idx), grid.dof_count());
  s.box_ = Box{{grid.lower(0), grid.dimension() == 2 ? grid.lower(1) : 0.0},
               {grid.upper(0), grid.dimension() == 2 ? grid.upper(1) : 0.0}};
  return s;
}

Eigen::VectorXd restrict_to_region(const Eigen::VectorXd& field, const Subdomain& region) {
  if (field.size() != region.ndof())
    throw InvalidArgument("restrict_to_region: field size does not match the region's grid");
  Eigen::VectorXd out(region.size());
  Eigen::Index i = 0;
  for (Eigen::Index k : region.indices()) out[i++] = field[k];
  return out;
}

Eigen::VectorXd extend_by_zero(const Eigen::VectorXd& values, const Subdomain& region,
                               Eigen::Index ndof) {
  if (values.size() != region.size())
    throw InvalidArgument("extend_by_zero: value count does not match the region size");
  if (ndof != region.ndof())
    throw InvalidArgument("extend_by_zero: ndof does not match the region's grid");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(ndof);
  Eigen::Index i = 0;
  for (Eigen::Index k : region.indices()) out[k] = values[i++];
  return out;
}

}  // namespace fracnash
