#pragma once

#include <complex>

#include "cmorse/grid.hpp"

namespace cmorse {

enum class FieldKind { Real, Complex };

/// A real or complex function sampled on the grid degrees of freedom.
/// Real fields keep a zero imaginary part. The real coordinate embedding
/// used by the spectral code stacks [Re psi; Im psi] for complex fields.
struct Field {
  FieldKind kind = FieldKind::Real;
  Eigen::VectorXcd values;

  int dim() const { return static_cast<int>(values.size()); }
  int real_dim() const { return kind == FieldKind::Complex ? 2 * dim() : dim(); }

  Eigen::VectorXd real_coords() const;
  static Field from_real_coords(FieldKind kind, const Eigen::VectorXd& z);
  static Field real(const Eigen::VectorXd& v);
  static Field complex(const Eigen::VectorXcd& v);
  static Field zero_like(const Field& f);

  bool is_finite() const;
  Field conjugate() const;
};

/// Weighted complex inner product over dof, conjugating the first argument.
std::complex<double> inner_w(const Grid& g, const Eigen::VectorXcd& f,
                             const Eigen::VectorXcd& h);

/// Plain weighted integral sum_i w_i f_i h_i (no conjugation); this is the
/// pairing in which the constrained-derivative identities are written.
std::complex<double> integral_w(const Grid& g, const Eigen::VectorXcd& f,
                                const Eigen::VectorXcd& h);

/// Real-embedded weighted inner product: equals Re <f,h>_w for complex
/// fields and <f,h>_w for real fields.
double inner_w_real(const Grid& g, const Field& f, const Field& h);

double norm_w(const Grid& g, const Field& f);

/// Weight vector of the real embedding (dof weights, duplicated for the
/// imaginary block of complex fields).
Eigen::VectorXd embedded_weights(const Grid& g, FieldKind kind);

}  // namespace cmorse
