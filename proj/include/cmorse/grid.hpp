#pragma once

#include <Eigen/Dense>
#include <memory>

#include "cmorse/common.hpp"

namespace cmorse {

enum class Boundary { None, DirichletZero };

/// Uniform 1-D grid with trapezoid quadrature weights.
///
/// Every integral in this library is a weighted sum over the variational
/// degrees of freedom, and every delta function is discretized as
/// delta(x_i - x_j) -> delta_ij / w_i, so that the discrete functional
/// derivative dA/drho(x_i) = (1/w_i) dA/drho_i pairs consistently with the
/// continuum convention. With a dirichlet-zero boundary the endpoint values
/// are pinned to zero and excluded from the degrees of freedom.
struct Grid {
  Eigen::VectorXd points;   // full abscissas, strictly increasing
  Eigen::VectorXd weights;  // full quadrature weights, strictly positive
  Boundary boundary = Boundary::None;

  int n_points() const { return static_cast<int>(points.size()); }
  int n_dof() const {
    return boundary == Boundary::DirichletZero ? n_points() - 2 : n_points();
  }
  double length() const { return points(points.size() - 1) - points(0); }
  double spacing() const { return points(1) - points(0); }

  /// Abscissas of the variational degrees of freedom.
  Eigen::VectorXd dof_points() const;
  /// Quadrature weights of the variational degrees of freedom.
  Eigen::VectorXd dof_weights() const;
};

using GridPtr = std::shared_ptr<const Grid>;

/// Uniform grid on [x_min, x_max] with trapezoid weights (h/2 at the
/// endpoints, h inside). Requires n_points >= 3 and finite x_min < x_max.
GridPtr build_grid(int n_points, double x_min, double x_max, Boundary boundary);

/// Abstract index grid (points 0..n-1, unit weights, no boundary) used by
/// explicit-matrix models, where the weighted inner product is the plain
/// Euclidean one.
GridPtr make_index_grid(int n);

}  // namespace cmorse
