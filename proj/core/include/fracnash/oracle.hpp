#pragma once

#include <string>

#include <Eigen/Core>

#include "fracnash/nash.hpp"
#include "fracnash/pde_solvers.hpp"

namespace fracnash {

/// Dense matrix form of the reduced optimality operator on small instances,
/// assembled column by column from basis directions. The matrix is expressed
/// in the H-orthonormalized basis (coordinates scaled by sqrt of the
/// quadrature weights), which makes it symmetric with the operator's H
/// eigenvalues; solutions are mapped back to plain coordinates.
struct DenseReducedSystem {
  Eigen::MatrixXd matrix;       // normalized-basis representation of A
  Eigen::VectorXd rhs;          // normalized-basis representation of b
  Eigen::VectorXd weight_sqrt;  // sqrt of the H weights, for coordinate maps
  double symmetry_defect = 0.0; // max |A - A^T| entry
  double min_eigenvalue = 0.0;

  Eigen::Index dofs() const { return matrix.rows(); }
};

/// Assemble the dense system; refuses instances above the DOF cap.
DenseReducedSystem assemble_dense_A(const ForwardSystem& system, Eigen::Index dof_cap = 400);

/// Direct factorization solve of A u = b; returns the control pair in plain
/// coordinates. The relative residual of the returned solution is checked
/// against 1e-12 and a failure throws.
ControlPair oracle_nash_solve(const ForwardSystem& system, const DenseReducedSystem& dense);

struct SpdCertificate {
  double symmetry_defect = 0.0;
  double min_eigenvalue = 0.0;
  double coercivity_floor = 0.0;  // min(mu1, mu2)
  bool passed = false;
};

/// Symmetry defect and smallest eigenvalue of the assembled operator; passes
/// iff the defect is at most 1e-10 and the smallest eigenvalue is at least
/// min(mu1, mu2) - 1e-8.
SpdCertificate certify_spd(const ForwardSystem& system, const DenseReducedSystem& dense);

/// Plain-text dump: one row of the matrix per line (space separated), then
/// one line with the right-hand side, decimal text.
void write_dense_system(const DenseReducedSystem& dense, const std::string& path);

}  // namespace fracnash
