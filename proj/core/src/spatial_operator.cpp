#include "fracnash/spatial_operator.hpp"

#include <cmath>
#include <vector>

#include "fracnash/errors.hpp"

namespace fracnash {

namespace {
constexpr double kPi = 3.14159265358979323846;

/// Orthogonal sine-transform matrix for n interior points:
/// S_{ki} = sqrt(2/(n+1)) sin(k i pi / (n+1)). Symmetric and involutive.
/// The product k*i is reduced modulo the period before evaluating, keeping
/// every sine argument small.
Eigen::MatrixXd sine_matrix(int n) {
  const int period = 2 * (n + 1);
  std::vector<double> table(size_t(n + 2));
  for (int j = 0; j <= n + 1; ++j) table[size_t(j)] = std::sin(j * kPi / (n + 1));

  Eigen::MatrixXd S(n, n);
  const double scale = std::sqrt(2.0 / (n + 1));
  for (int k = 1; k <= n; ++k) {
    for (int i = 1; i <= n; ++i) {
      const int m = (k * i) % period;
      const double value = m <= n + 1 ? table[size_t(m)] : -table[size_t(m - (n + 1))];
      S(k - 1, i - 1) = scale * value;
    }
  }
  return S;
}

/// Eigenvalues of the 1D 3-point Laplacian on n interior points, spacing h.
Eigen::ArrayXd laplacian_eigenvalues(int n, double h) {
  Eigen::ArrayXd lam(n);
  for (int k = 1; k <= n; ++k) {
    const double s = std::sin(double(k) * kPi / (2.0 * (n + 1)));
    lam[k - 1] = 4.0 / (h * h) * s * s;
  }
  return lam;
}
}  // namespace

Eigen::VectorXd fcd_weights(double s, int max_offset) {
  if (!(s > 0.0) || s > 1.0) throw InvalidArgument("fcd_weights: s must lie in (0, 1]");
  if (max_offset < 1) throw InvalidArgument("fcd_weights: need at least one offset");

  Eigen::VectorXd c(max_offset + 1);
  const double g1 = std::tgamma(s + 1.0);
  c[0] = std::tgamma(2.0 * s + 1.0) / (g1 * g1);
  for (int m = 0; m < max_offset; ++m)
    c[m + 1] = c[m] * (double(m) - s) / (double(m) + s + 1.0);
  return c;
}

SpatialOperator SpatialOperator::fractional_centered_1d(double s, const SpaceGrid& grid) {
  if (grid.dimension() != 1)
    throw InvalidArgument("fractional_centered_1d: grid must be one-dimensional");

  const int n = grid.points(0);
  const double scale = std::pow(grid.spacing(0), -2.0 * s);
  const Eigen::VectorXd c = fcd_weights(s, n - 1);

  SpatialOperator op;
  op.s_ = s;
  op.dimension_ = 1;
  op.size_ = n;
  op.matrix_.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) op.matrix_(i, j) = scale * c[std::abs(i - j)];
  return op;
}

SpatialOperator SpatialOperator::spectral_2d(double s, const SpaceGrid& grid) {
  if (grid.dimension() != 2)
    throw InvalidArgument("spectral_2d: grid must be two-dimensional");

  SpatialOperator op;
  op.s_ = s;
  op.dimension_ = 2;
  op.nx_ = grid.points(0);
  op.ny_ = grid.points(1);
  op.size_ = grid.dof_count();
  op.sine_x_ = sine_matrix(op.nx_);
  op.sine_y_ = sine_matrix(op.ny_);

  const Eigen::ArrayXd lx = laplacian_eigenvalues(op.nx_, grid.spacing(0));
  const Eigen::ArrayXd ly = laplacian_eigenvalues(op.ny_, grid.spacing(1));
  op.lambda_pow_.resize(op.nx_, op.ny_);
  for (int k = 0; k < op.nx_; ++k)
    for (int l = 0; l < op.ny_; ++l) op.lambda_pow_(k, l) = std::pow(lx[k] + ly[l], s);
  return op;
}

SpatialOperator assemble_frac_laplacian(double s, const SpaceGrid& grid) {
  return grid.dimension() == 1 ? SpatialOperator::fractional_centered_1d(s, grid)
                               : SpatialOperator::spectral_2d(s, grid);
}

Eigen::VectorXd SpatialOperator::apply(const Eigen::VectorXd& v) const {
  if (v.size() != size_) throw InvalidArgument("SpatialOperator::apply: size mismatch");
  if (dimension_ == 1) return matrix_ * v;

  // x-major layout: entry (i,j) sits at i*ny + j, i.e. the field reshapes to
  // an nx x ny row-major matrix.
  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
      f(v.data(), nx_, ny_);
  Eigen::MatrixXd coeff = sine_x_ * f * sine_y_;
  coeff.array() *= lambda_pow_;
  Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> out =
      sine_x_ * coeff * sine_y_;
  return Eigen::Map<const Eigen::VectorXd>(out.data(), size_);
}

void SpatialOperator::prepare_shift(double sigma) {
  if (dimension_ == 2) return;  // spectral solves need no factorization
  if (shifted_llt_.count(sigma)) return;
  Eigen::MatrixXd shifted = matrix_;
  shifted.diagonal().array() += sigma;
  auto llt = std::make_shared<Eigen::LLT<Eigen::MatrixXd>>(shifted);
  if (llt->info() != Eigen::Success)
    throw NumericalError("SpatialOperator: Cholesky factorization of the shifted operator "
                         "failed; the assembled matrix is not positive definite");
  shifted_llt_[sigma] = std::move(llt);
}

Eigen::VectorXd SpatialOperator::solve_shifted(double sigma, const Eigen::VectorXd& rhs) const {
  if (rhs.size() != size_) throw InvalidArgument("SpatialOperator::solve_shifted: size mismatch");
  if (dimension_ == 1) {
    auto it = shifted_llt_.find(sigma);
    if (it == shifted_llt_.end())
      throw NumericalError("SpatialOperator: shift not prepared before solve");
    return it->second->solve(rhs);
  }

  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
      f(rhs.data(), nx_, ny_);
  Eigen::MatrixXd coeff = sine_x_ * f * sine_y_;
  coeff.array() /= (lambda_pow_ + sigma);
  Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> out =
      sine_x_ * coeff * sine_y_;
  return Eigen::Map<const Eigen::VectorXd>(out.data(), size_);
}

Eigen::MatrixXd SpatialOperator::dense() const {
  if (dimension_ == 1) return matrix_;
  Eigen::MatrixXd d(size_, size_);
  Eigen::VectorXd e = Eigen::VectorXd::Zero(size_);
  for (Eigen::Index j = 0; j < size_; ++j) {
    e[j] = 1.0;
    d.col(j) = apply(e);
    e[j] = 0.0;
  }
  return d;
}

}  // namespace fracnash
