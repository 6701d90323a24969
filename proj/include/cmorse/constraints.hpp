#pragma once

#include <optional>
#include <vector>

#include "cmorse/pair_calculus.hpp"

namespace cmorse {

enum class ConstraintKind { BilinearNormalization, IntegralOfF };
enum class UChoice { A15, Uniform, Custom };

/// Scalar function family defining an integral constraint int f(rho) dx = C.
struct ConstraintScalarF {
  std::function<double(double)> f, fp, fpp, finv;
  std::string name = "identity";

  static ConstraintScalarF identity();
  static ConstraintScalarF square();  // f = rho^2 on rho > 0
};

struct ConstraintSpec {
  ConstraintKind kind = ConstraintKind::BilinearNormalization;
  double target = 1.0;  // n (bilinear) or C (integral-of-f)

  // integral-of-f only
  ConstraintScalarF f = ConstraintScalarF::identity();
  UChoice u_choice = UChoice::A15;
  Field u_custom;  // Custom only; must integrate to 1 under grid weights

  // bilinear only: additional orthogonality to these w-orthonormal fields
  std::vector<Field> ortho_basis;

  static ConstraintSpec normalization(double n = 1.0);
  static ConstraintSpec mass(double C, UChoice u = UChoice::A15);
};

/// C[field]: int psi* psi (bilinear) or int f(rho) (integral-of-f).
double constraint_value(const Grid& g, const Field& f, const ConstraintSpec& spec);

/// psi -> psi sqrt(n / <psi,psi>). Errors on zero-norm input. Also valid
/// for real fields.
Field normalization_map(const Grid& g, const Field& psi, double n);

/// psi -> normalized projection of psi off the span of `basis` (which must
/// be w-orthonormal, Gram residual < 1e-10). Identity on inputs already
/// satisfying both constraints; errors when psi lies in the span.
Field ortho_normalization_map(const Grid& g, const Field& psi,
                              const std::vector<Field>& basis);

/// rho -> finv(f(rho) - u(x) (int f(rho) - C)) for the integral constraint.
Field general_constraint_map(const Grid& g, const Field& rho, const ConstraintSpec& spec);

/// Dispatch on spec.kind (and ortho_basis).
Field apply_constraint_map(const Grid& g, const Field& f, const ConstraintSpec& spec);

/// Resolved u(x)/C'(x) ratio for the integral-of-f kind. For the a15 choice
/// u = C'^2 / int C'^2 the ratio is C'/int C'^2 by cancellation, which stays
/// finite where C' vanishes.
Eigen::VectorXd u_over_cprime(const Grid& g, const Field& rho, const ConstraintSpec& spec);
Eigen::VectorXd resolve_u(const Grid& g, const Field& rho, const ConstraintSpec& spec);

enum class DiffMethod { Analytic, AnalyticQuadratic, Numeric };
std::string method_tag(DiffMethod m);  // analytic-eq18 | analytic-eq20 | numeric-composed

struct ConstrainedGradient {
  /// Real kind: dA/d_c rho. Complex kind: dA/d_n psi* (the psi-row is its
  /// conjugate).
  Field grad;
  double mu = 0.0;
  DiffMethod method = DiffMethod::Analytic;
  double base_constraint_residual = 0.0;

  double stationarity_residual() const;  // sup norm of grad
};

/// Constrained first derivative at a constraint-satisfying base (projected
/// through the map, with a warning, if the residual exceeds 1e-10).
/// Analytic: the closed normalization-map form (bilinear) or the u-weighted
/// subtraction (integral-of-f). Numeric: finite differences of A composed
/// with the constraint map.
ConstrainedGradient constrained_gradient(const Functional& F, const Field& base,
                                         const ConstraintSpec& spec,
                                         DiffMethod method = DiffMethod::Analytic);

/// Linear operator representing the constrained second derivative at a base
/// point, acting on real-embedded increments in the eigenproblem convention
///   int K_c(x,x') D(x') dx' = lambda D(x)
/// (for complex fields the action is the dA/dpsi*-row of the Wirtinger
/// blocks, whose nonzero eigenvalues are the paper-counted ones).
struct ConstrainedHessianOperator {
  GridPtr grid;
  FieldKind kind = FieldKind::Real;
  Field base;
  ConstraintSpec spec;
  DiffMethod method = DiffMethod::Analytic;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> apply_real;

  int real_dim() const { return base.real_dim(); }
  Field apply(const Field& dir) const;
};

ConstrainedHessianOperator constrained_hessian(const Functional& F, const Field& base,
                                               const ConstraintSpec& spec,
                                               DiffMethod method = DiffMethod::Analytic);

/// First-order mapped increment (the tangent projection d -> J d of the
/// constraint map's Jacobian at a satisfying base).
Field tangent_project(const Grid& g, const Field& base, const ConstraintSpec& spec,
                      const Field& dir);

struct IdentityResiduals {
  std::optional<double> eq27_28;  // bilinear: |int a g_na + int b g_nb|
  std::optional<double> eq29;     // bilinear: Hessian/base contraction identity
  std::optional<double> eqA12;    // integral-of-f: |int (u/C') dA/d_c rho|
  std::optional<double> eqA13;    // integral-of-f: ||int (u/C') K_c(x,x') dx||_inf
};

/// Diagnostic residual record at a constraint-satisfying (not necessarily
/// stationary) point. eqA13 is exact for f = identity at any point and at
/// stationary points for general f.
IdentityResiduals identity_residuals(const Functional& F, const Field& base,
                                     const ConstraintSpec& spec);

/// Relative deviation between analytic and numeric constrained gradients at
/// a satisfying point, and between Hessian actions on a direction.
double gradient_method_deviation(const Functional& F, const Field& base,
                                 const ConstraintSpec& spec);
double hessian_method_deviation(const Functional& F, const Field& base,
                                const ConstraintSpec& spec, const Field& dir);

}  // namespace cmorse
