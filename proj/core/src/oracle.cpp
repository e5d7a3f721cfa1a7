#include "fracnash/oracle.hpp"

#include <fstream>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "fracnash/csv.hpp"
#include "fracnash/errors.hpp"

namespace fracnash {

DenseReducedSystem assemble_dense_A(const ForwardSystem& system, Eigen::Index dof_cap) {
  const ProblemSpec& p = system.problem();
  const Eigen::Index n = p.control_dofs();
  if (n > dof_cap)
    throw InvalidArgument("assemble_dense_A: instance has " + std::to_string(n) +
                          " control DOFs, above the cap of " + std::to_string(dof_cap));

  DenseReducedSystem d;
  d.weight_sqrt = h_weight_diagonal(p).cwiseSqrt();
  d.matrix.resize(n, n);

  Eigen::VectorXd basis = Eigen::VectorXd::Zero(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    basis[j] = 1.0 / d.weight_sqrt[j];
    const ControlPair column = apply_operator_A(system, unflatten_controls(p, basis));
    d.matrix.col(j) = flatten_controls(column).cwiseProduct(d.weight_sqrt);
    basis[j] = 0.0;
  }

  // b = -(A 0 - b) = -gradient at zero controls
  const ControlPair g0 = residual_gradient(system, p.zero_controls());
  d.rhs = -flatten_controls(g0).cwiseProduct(d.weight_sqrt);

  d.symmetry_defect = (d.matrix - d.matrix.transpose()).cwiseAbs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(
      0.5 * (d.matrix + d.matrix.transpose()), Eigen::EigenvaluesOnly);
  d.min_eigenvalue = eig.eigenvalues().minCoeff();
  return d;
}

ControlPair oracle_nash_solve(const ForwardSystem& system, const DenseReducedSystem& dense) {
  const ProblemSpec& p = system.problem();
  if (dense.rhs.norm() == 0.0) return p.zero_controls();

  Eigen::LDLT<Eigen::MatrixXd> ldlt(0.5 * (dense.matrix + dense.matrix.transpose()));
  if (ldlt.info() != Eigen::Success)
    throw NumericalError("oracle_nash_solve: factorization failed; operator not SPD");
  const Eigen::VectorXd x = ldlt.solve(dense.rhs);

  const double rel_residual = (dense.matrix * x - dense.rhs).norm() / dense.rhs.norm();
  if (rel_residual > 1e-12)
    throw NumericalError("oracle_nash_solve: direct solve residual " +
                         std::to_string(rel_residual) + " exceeds 1e-12");

  return unflatten_controls(p, x.cwiseQuotient(dense.weight_sqrt));
}

SpdCertificate certify_spd(const ForwardSystem& system, const DenseReducedSystem& dense) {
  SpdCertificate c;
  c.symmetry_defect = dense.symmetry_defect;
  c.min_eigenvalue = dense.min_eigenvalue;
  c.coercivity_floor = std::min(system.problem().mu1, system.problem().mu2);
  c.passed = c.symmetry_defect <= 1e-10 && c.min_eigenvalue >= c.coercivity_floor - 1e-8;
  return c;
}

void write_dense_system(const DenseReducedSystem& dense, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("write_dense_system: cannot open " + path);
  for (Eigen::Index i = 0; i < dense.matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < dense.matrix.cols(); ++j) {
      if (j) out << ' ';
      out << format_double(dense.matrix(i, j));
    }
    out << '\n';
  }
  for (Eigen::Index j = 0; j < dense.rhs.size(); ++j) {
    if (j) out << ' ';
    out << format_double(dense.rhs[j]);
  }
  out << '\n';
}

}  // namespace fracnash
