#pragma once

#include <string>

#include "cmorse/grid.hpp"

namespace cmorse {

/// Linear operator acting on grid functions. Must be Hermitian with respect
/// to the weighted inner product <f,g> = sum_i w_i conj(f_i) g_i, which for
/// a real matrix H means W H = H^T W.
struct LinearOperator {
  GridPtr grid;
  Eigen::MatrixXd matrix;  // acts on dof values

  int dim() const { return static_cast<int>(matrix.rows()); }
  Eigen::VectorXd apply(const Eigen::VectorXd& v) const { return matrix * v; }
  Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const { return matrix * v; }
};

struct ModelParams {
  enum class Kind { ExplicitMatrix, ParticleInBox, Harmonic, DoubleWell };
  Kind kind = Kind::ExplicitMatrix;

  Eigen::MatrixXd explicit_matrix;  // ExplicitMatrix only
  double omega = 1.0;               // Harmonic: V(x) = 1/2 omega^2 x^2
  double well_scale = 1.0;          // DoubleWell: V(x) = scale (x^2 - 1)^2

  static std::string kind_name(Kind k);
  static Kind kind_from_name(const std::string& name);
};

/// Builds the model operator on the given grid. Finite-difference
/// Hamiltonians use the kinetic term -1/2 d^2/dx^2 via second-order central
/// differences with a dirichlet-zero boundary (hbar = m = 1). Explicit
/// matrices are returned verbatim and require an index grid of matching
/// dimension; non-Hermitian explicit input (residual > 1e-10) is rejected.
LinearOperator build_operator(const ModelParams& params, GridPtr grid);

/// max over basis pairs of |<e_i, A e_j> - <A e_i, e_j>| under the weighted
/// inner product.
double hermiticity_residual(const LinearOperator& op);

/// Dense diagonalization under the weighted inner product; the reference
/// oracle for every spectral statement downstream. Columns of `states` are
/// w-orthonormal, sorted ascending by energy, with a deterministic sign fix
/// (first component of nonnegligible magnitude made positive).
struct OperatorSpectrum {
  Eigen::VectorXd energies;
  Eigen::MatrixXd states;
};
OperatorSpectrum diagonalize(const LinearOperator& op);

/// Reads a dense real matrix from a CSV file of rows.
Eigen::MatrixXd load_matrix_csv(const std::string& path);

}  // namespace cmorse
