#pragma once

#include <vector>

#include "cmorse/constraints.hpp"

namespace cmorse {

/// Spectrum of the constrained Hessian in its real embedding. Eigenvalues
/// ascend; eigenvectors are w-orthonormal increment fields with a
/// deterministic sign fix.
struct SpectrumReport {
  Eigen::VectorXd eigenvalues;
  std::vector<Field> eigenvectors;
  FieldKind kind = FieldKind::Real;
  double symmetry_residual = 0.0;  // of the assembled matrix, pre-symmetrization
  double max_abs_eigenvalue = 0.0;
  double zero_tol_rel = 1e-8;

  double zero_threshold() const { return zero_tol_rel * max_abs_eigenvalue; }
  bool is_zero_mode(int i) const {
    return std::abs(eigenvalues(i)) <= zero_threshold();
  }
  /// Nonzero eigenvalues; for complex problems collapsed to the complex
  /// count (each complex direction contributes two real dimensions).
  std::vector<double> nonzero_eigenvalues_complex_count() const;
  std::vector<double> nonzero_eigenvalues() const;
};

/// Real symmetric matrix of the operator in the weight-transformed basis
/// y = W^{1/2} z (so a standard symmetric eigensolver applies). Errors if
/// the pre-symmetrization residual exceeds 1e-8 relative; the returned
/// matrix is the symmetrized (M + M^T)/2.
Eigen::MatrixXd assemble_matrix(const ConstrainedHessianOperator& op,
                                double* symmetry_residual = nullptr);

SpectrumReport eigensolve(const Eigen::MatrixXd& assembled,
                          const ConstrainedHessianOperator& op,
                          double zero_tol_rel = 1e-8);

/// assemble + eigensolve.
SpectrumReport constrained_spectrum(const ConstrainedHessianOperator& op,
                                    double zero_tol_rel = 1e-8);

enum class Verdict { Minimum, Saddle, Maximum, DegenerateInconclusive };
std::string verdict_name(Verdict v);

struct ClassificationReport {
  double stationarity_residual = 0.0;
  int index_complex = 0;  // descent directions, complex count
  int index_real = 0;     // negative eigenvalues of the real embedding
  int zero_modes = 0;
  int zero_modes_gauge = 0;       // radial/phase (and projected-out) flat modes
  int zero_modes_degenerate = 0;  // remaining zero modes
  double lambda_min_nonzero = 0.0;
  double lambda_max_nonzero = 0.0;
  double strong_positivity_margin = 0.0;  // smallest positive eigenvalue (0 if none)
  double zero_tol_used = 0.0;
  Verdict verdict = Verdict::DegenerateInconclusive;
};

/// Classifies a stationary point from its constrained-Hessian spectrum.
/// Requires stationarity residual < 1e-8. For complex problems the negative
/// count must be even (it is halved for the complex-direction index).
ClassificationReport morse_classify(const SpectrumReport& spectrum,
                                    const ConstrainedHessianOperator& op,
                                    const ConstrainedGradient& gradient,
                                    double zero_tol_rel = 1e-8);

struct TangencyRow {
  double lambda = 0.0;
  /// |lambda <base, v>| for complex problems; the u-weighted analogue
  /// |lambda int (u/C') v| for density problems.
  double eq30_product = 0.0;
  /// First-order constraint residual of the eigenvector:
  /// |int psi* v + int psi v*| or |int C' v|.
  double first_order_constraint = 0.0;
};
std::vector<TangencyRow> tangency_residuals(const SpectrumReport& spectrum,
                                            const Field& base,
                                            const ConstraintSpec& spec,
                                            const Grid& g);

/// Spectrum of the projected Lagrange test: P (Hess A - mu Hess C) P
/// restricted to the tangent space of first-order constraint-preserving
/// increments.
SpectrumReport projected_lagrange_spectrum(const Functional& F, const Field& base,
                                           const ConstraintSpec& spec,
                                           double zero_tol_rel = 1e-8);

struct ProbeDirectionResult {
  std::vector<double> steps;
  std::vector<double> actual;     // A[map(base + h d)] - A[base]
  std::vector<double> predicted;  // second-order prediction from the spectrum
  std::vector<double> residual;
  double slope = 0.0;  // log-log slope of residual vs step
  bool slope_ok = false;
  bool superconvergent = false;  // residual decays faster than cubic
};

struct ProbeRecord {
  std::vector<ProbeDirectionResult> directions;
  double max_phase_increment = 0.0;  // complex kind: |DA| along i*base
  bool all_ok = false;
};

/// Second-order Taylor probe: compares actual increments through the
/// constraint map against the spectral prediction
///   kappa h^2 sum_i lambda_i c_i^2,  c_i = <v_i, J d>_w
/// (kappa = 1 complex, 1/2 real, matching the expansion conventions of the
/// two kinds). The residual must vanish cubically; directions whose cubic
/// term vanishes identically decay faster and are flagged superconvergent
/// rather than failed.
ProbeRecord second_order_probe(const Functional& F, const Field& base,
                               const ConstraintSpec& spec,
                               const SpectrumReport& spectrum,
                               const std::vector<Field>& directions,
                               const std::vector<double>& steps);

std::vector<double> default_probe_steps();

/// Random w-normalized directions for probing (fixed seed => deterministic).
std::vector<Field> random_directions(const Grid& g, FieldKind kind, int count,
                                     unsigned seed);

}  // namespace cmorse
