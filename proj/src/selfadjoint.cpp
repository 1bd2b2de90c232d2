#include "siegel/selfadjoint.hpp"

namespace siegel {

namespace {

void set_components(Quaternion& q, Field f, const double* c) {
  q = f == Field::Complex ? Quaternion(c[0], c[1]) : Quaternion(c[0], c[1], c[2], c[3]);
}

void get_components(const Quaternion& q, Field f, double* c) {
  c[0] = q.w;
  c[1] = q.x;
  if (f == Field::Quaternion) {
    c[2] = q.y;
    c[3] = q.z;
  }
}

}  // namespace

RVec SelfAdjointLayout::encode(const QMatrix& h) const {
  if (h.rows() != r || h.cols() != r) throw ArgumentError("SelfAdjointLayout::encode: wrong shape");
  RVec out(dim());
  for (int j = 0; j < r; ++j) out[j] = h(j, j).w;
  int pos = r;
  const int d = real_dim(field);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      get_components(h(i, j), field, out.data() + pos);
      pos += d;
    }
  return out;
}

QMatrix SelfAdjointLayout::decode(const RVec& coords) const {
  if (coords.size() != dim()) throw ArgumentError("SelfAdjointLayout::decode: wrong length");
  QMatrix h(r, r);
  for (int j = 0; j < r; ++j) h(j, j) = Quaternion(coords[j]);
  int pos = r;
  const int d = real_dim(field);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      set_components(h(i, j), field, coords.data() + pos);
      h(j, i) = h(i, j).conj();
      pos += d;
    }
  return h;
}

QMatrix SelfAdjointLayout::pairing_matrix(const RVec& lambda) const {
  // Re tr(M h) = sum_j M_jj h_jj + 2 sum_{i<j} <M_ij, h_ij>_R
  RVec half = lambda;
  half.tail(dim() - r) *= 0.5;
  return decode(half);
}

double min_eigenvalue(const QMatrix& selfadjoint) {
  if (selfadjoint.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<CMat> es(selfadjoint.embed(), Eigen::EigenvaluesOnly);
  return es.eigenvalues()[0];
}

SpinElement SpinElement::decode(const RVec& coords) {
  if (coords.size() < 2 || coords.size() % 2 != 0) throw ArgumentError("SpinElement: bad coordinate length");
  SpinElement e;
  e.a = coords[0];
  e.c = coords[1];
  const Eigen::Index q = (coords.size() - 2) / 2;
  e.b.resize(q);
  for (Eigen::Index l = 0; l < q; ++l) e.b[l] = cplx(coords[2 + 2 * l], coords[3 + 2 * l]);
  return e;
}

RVec SpinElement::encode() const {
  RVec out(2 + 2 * b.size());
  out[0] = a;
  out[1] = c;
  for (Eigen::Index l = 0; l < b.size(); ++l) {
    out[2 + 2 * l] = b[l].real();
    out[3 + 2 * l] = b[l].imag();
  }
  return out;
}

}  // namespace siegel
