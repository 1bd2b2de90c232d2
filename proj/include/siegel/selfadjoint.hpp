#pragma once

#include "siegel/quaternion.hpp"

namespace siegel {

/// Real coordinates on the space of self-adjoint r x r matrices over C or H:
/// the r diagonal entries first, then for each i < j (row-major) the real
/// components of entry (i, j).
struct SelfAdjointLayout {
  Field field = Field::Complex;
  int r = 1;

  int dim() const { return r + real_dim(field) * r * (r - 1) / 2; }
  RVec encode(const QMatrix& h) const;
  QMatrix decode(const RVec& coords) const;

  /// Self-adjoint matrix M with Re tr(M h) = <lambda, h> for every h.
  QMatrix pairing_matrix(const RVec& lambda) const;
};

/// Smallest eigenvalue of a self-adjoint matrix over C or H, computed on the
/// complex embedding.
double min_eigenvalue(const QMatrix& selfadjoint);

/// Formal self-adjoint 2 x 2 matrix [[a, b], [conj(b), c]] with a, c real and
/// b in C^q, stored with coordinates (a, c, Re b_1, Im b_1, ..., Re b_q, Im b_q).
struct SpinElement {
  double a = 0.0;
  double c = 0.0;
  CVec b;

  static SpinElement decode(const RVec& coords);
  RVec encode() const;
};

}  // namespace siegel
