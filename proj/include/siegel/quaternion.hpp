#pragma once

#include <vector>

#include "siegel/types.hpp"

namespace siegel {

/// Real quaternion w + x i + y j + z k.
struct Quaternion {
  double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
      : w(w_), x(x_), y(y_), z(z_) {}

  /// q = alpha + beta j with alpha, beta in C = span{1, i}.
  static Quaternion from_complex_pair(cplx alpha, cplx beta) {
    return {alpha.real(), alpha.imag(), beta.real(), beta.imag()};
  }
  cplx alpha() const { return {w, x}; }
  cplx beta() const { return {y, z}; }

  Quaternion conj() const { return {w, -x, -y, -z}; }
  double norm2() const { return w * w + x * x + y * y + z * z; }

  Quaternion operator+(const Quaternion& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
  Quaternion operator-(const Quaternion& o) const { return {w - o.w, x - o.x, y - o.y, z - o.z}; }
  Quaternion operator-() const { return {-w, -x, -y, -z}; }
  Quaternion operator*(double s) const { return {w * s, x * s, y * s, z * s}; }
  Quaternion operator*(const Quaternion& o) const {
    return {w * o.w - x * o.x - y * o.y - z * o.z, w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x, w * o.z + x * o.y - y * o.x + z * o.w};
  }
  Quaternion& operator+=(const Quaternion& o) { return *this = *this + o; }
  Quaternion& operator-=(const Quaternion& o) { return *this = *this - o; }

  /// 2x2 complex block [[alpha, beta], [-conj(beta), conj(alpha)]]; a ring homomorphism.
  Eigen::Matrix2cd embed() const;
};

inline Quaternion operator*(double s, const Quaternion& q) { return q * s; }

inline constexpr Quaternion kQuatI{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion kQuatJ{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion kQuatK{0.0, 0.0, 0.0, 1.0};

enum class Field { Complex, Quaternion };

/// dim_R of the field.
inline int real_dim(Field f) { return f == Field::Complex ? 2 : 4; }
/// dim_C of the field, seen as a left complex vector space.
inline int complex_dim(Field f) { return f == Field::Complex ? 1 : 2; }
const char* field_name(Field f);

/// Dense row-major matrix over C or H. Complex entries are quaternions with
/// zero j and k parts, so one type serves both fields.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows * cols)) {}

  static QMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Quaternion& operator()(int i, int j) { return data_[std::size_t(i * cols_ + j)]; }
  const Quaternion& operator()(int i, int j) const { return data_[std::size_t(i * cols_ + j)]; }

  QMatrix adjoint() const;
  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix operator*(double s) const;
  /// Left multiplication of every entry by q.
  QMatrix left_scale(const Quaternion& q) const;

  /// 2r x 2c complex matrix obtained by embedding each entry.
  CMat embed() const;

  double max_abs() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Quaternion> data_;
};

}  // namespace siegel
