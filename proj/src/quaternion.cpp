#include "siegel/quaternion.hpp"

#include <cmath>

namespace siegel {

Eigen::Matrix2cd Quaternion::embed() const {
  Eigen::Matrix2cd m;
  m << alpha(), beta(), -std::conj(beta()), std::conj(alpha());
  return m;
}

const char* field_name(Field f) { return f == Field::Complex ? "C" : "H"; }

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Quaternion(1.0);
  return m;
}

QMatrix QMatrix::adjoint() const {
  QMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j).conj();
  return out;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw ArgumentError("QMatrix product: inner dimensions differ");
  QMatrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < o.cols_; ++j) {
      Quaternion acc;
      for (int l = 0; l < cols_; ++l) acc += (*this)(i, l) * o(l, j);
      out(i, j) = acc;
    }
  return out;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ArgumentError("QMatrix sum: shapes differ");
  QMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
  return out;
}

QMatrix QMatrix::operator-(const QMatrix& o) const { return *this + o * -1.0; }

QMatrix QMatrix::operator*(double s) const {
  QMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * s;
  return out;
}

QMatrix QMatrix::left_scale(const Quaternion& q) const {
  QMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = q * data_[i];
  return out;
}

CMat QMatrix::embed() const {
  CMat out(2 * rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.block<2, 2>(2 * i, 2 * j) = (*this)(i, j).embed();
  return out;
}

double QMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& q : data_) m = std::max(m, std::sqrt(q.norm2()));
  return m;
}

}  // namespace siegel
