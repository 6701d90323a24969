#pragma once

#include <functional>
#include <optional>
#include <string>

#include "cmorse/field.hpp"
#include "cmorse/operators.hpp"

namespace cmorse {

struct DerivativeBundle {
  /// Real kind: dA/drho. Complex kind: dA/dpsi* (dA/dpsi is its conjugate).
  Field grad;
  enum class Method { Analytic, FiniteDifference } method = Method::Analytic;
  double step = 0.0;  // finite-difference step actually used (0 = analytic)
};

/// A real-valued functional A[rho] of a real field or A[psi, psi*] of a
/// complex field. Derivatives follow the functional convention
/// dA/drho(x_i) = (1/w_i) dA/drho_i; complex fields are differentiated in
/// the Wirtinger convention (psi and psi* independent), with the stored
/// gradient being dA/dpsi* = 1/2 (dA/du + i dA/dv) per component.
class Functional {
 public:
  using Evaluator = std::function<double(const Field&)>;
  using GradFn = std::function<Field(const Field&)>;
  /// Unconstrained Hessian "row" action. Real kind:
  ///   out(x) = int K(x,x') d(x') dx'.
  /// Complex kind, acting on a complex increment (R-linear):
  ///   out = int d2A/dpsi*dpsi  Dpsi  +  int d2A/dpsi*dpsi*  Dpsi*.
  using HessActionFn = std::function<Field(const Field& at, const Field& dir)>;
  /// Wirtinger block action at base psi (b = psi* implied):
  ///   d -> int d2A/dX(x)dY(x') d(x') dx'.
  using BlockActionFn =
      std::function<Eigen::VectorXcd(const Eigen::VectorXcd& psi, const Eigen::VectorXcd& d)>;
  /// Cancellation-aware increment A[to] - A[from]; optional, used by probe
  /// code where the plain difference of two near-equal values would lose
  /// all significant digits.
  using IncrementFn = std::function<double(const Field& to, const Field& from)>;

  Functional() = default;
  Functional(FieldKind kind, std::string name, GridPtr grid, Evaluator eval);

  FieldKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const GridPtr& grid() const { return grid_; }
  bool has_analytic_gradient() const { return static_cast<bool>(grad_); }
  bool has_analytic_hessian() const { return static_cast<bool>(hess_); }
  bool has_analytic_blocks() const { return static_cast<bool>(block_ba_); }

  void register_gradient(GradFn g) { grad_ = std::move(g); }
  void register_hessian_action(HessActionFn h) { hess_ = std::move(h); }
  void register_blocks(BlockActionFn ba, BlockActionFn bb);
  void register_increment(IncrementFn inc) { increment_ = std::move(inc); }

  /// Evaluates A at the field. Throws on kind mismatch or non-finite result.
  double eval(const Field& f) const;

  /// A[to] - A[from], via the registered stable path when available.
  double increment(const Field& to, const Field& from) const;

  /// Analytic gradient if registered, else central finite differences with
  /// component steps scaled by 1/w_i.
  DerivativeBundle gradient(const Field& f) const;

  /// Unconstrained Hessian row action; analytic if registered, else a
  /// central difference of the gradient along the direction.
  Field hessian_apply(const Field& at, const Field& dir) const;

  /// Wirtinger block actions at base psi with b = psi*. For functionals
  /// without registered blocks they are recovered from the R-linear Hessian
  /// action: linear part ba(d) = (T(d) - i T(id))/2, antilinear part
  /// bb(conj d) = (T(d) + i T(id))/2. Complex kind only.
  Eigen::VectorXcd block_ba(const Eigen::VectorXcd& psi, const Eigen::VectorXcd& d) const;
  Eigen::VectorXcd block_bb_conj(const Eigen::VectorXcd& psi, const Eigen::VectorXcd& d) const;

  double fd_step(const Field& f) const;

 private:
  FieldKind kind_ = FieldKind::Real;
  std::string name_;
  GridPtr grid_;
  Evaluator eval_;
  GradFn grad_;
  HessActionFn hess_;
  BlockActionFn block_ba_, block_bb_;
  IncrementFn increment_;
};

/// A[psi, psi*] = int psi*(x) (A psi)(x) dx for a Hermitian operator, with
/// analytic gradient, Hessian blocks, and a stable increment registered.
Functional quadratic_form_functional(const LinearOperator& op);

/// A[rho] = sum_i w_i g(rho_i) with analytic derivatives g'(rho_i) and
/// g''(rho_i) delta_ij / w_j. The handles are spot-checked for mutual
/// consistency by finite differences at 10 seeded random points.
Functional local_density_functional(std::function<double(double)> g,
                                    std::function<double(double)> gp,
                                    std::function<double(double)> gpp,
                                    GridPtr grid, std::string name = "local-density");

/// The quartic free energy g(rho) = a4 rho^4 + a2 rho^2 used by the demos
/// (defaults: 1/4 rho^4 - 1/2 rho^2).
Functional quartic_free_energy(GridPtr grid, double a4 = 0.25, double a2 = -0.5);

}  // namespace cmorse
