#pragma once

// Small fixed-size algebra used throughout the two-view code: cross and
// skew products, triple-product expansions, Kronecker/vec helpers and a 3x3
// singular value decomposition.

#include <Eigen/Core>
#include <Eigen/LU>
#include <Eigen/SVD>

#include <cmath>
#include <utility>

#include "twoview/error.hpp"

namespace twoview {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Vec9 = Eigen::Matrix<double, 9, 1>;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Mat9 = Eigen::Matrix<double, 9, 9>;
using MatX = Eigen::MatrixXd;
using VecX = Eigen::VectorXd;

struct SingularDecomposition3 {
  Mat3 U = Mat3::Identity();
  Vec3 sigma = Vec3::Zero();  // descending
  Mat3 V = Mat3::Identity();

  Mat3 reassemble() const { return U * sigma.asDiagonal() * V.transpose(); }
};

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return Vec3(a.y() * b.z() - a.z() * b.y(),
              a.z() * b.x() - a.x() * b.z(),
              a.x() * b.y() - a.y() * b.x());
}

inline Mat3 skew(const Vec3& v) {
  Mat3 m;
  m << 0.0, -v.z(), v.y(),
       v.z(), 0.0, -v.x(),
       -v.y(), v.x(), 0.0;
  return m;
}

// Returns ((a x b) x c, a x (b x c)), evaluated directly by cross products.
inline std::pair<Vec3, Vec3> triple_expand(const Vec3& a, const Vec3& b,
                                           const Vec3& c) {
  return {cross(cross(a, b), c), cross(a, cross(b, c))};
}

// Column-stacking vectorization.
template <typename Derived>
VecX vec(const Eigen::MatrixBase<Derived>& m) {
  VecX out(m.rows() * m.cols());
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      out(k++) = m(i, j);
    }
  }
  return out;
}

inline Vec9 vec(const Mat3& m) {
  Vec9 out;
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 3; ++i) out(3 * j + i) = m(i, j);
  }
  return out;
}

inline Mat3 unvec(const Vec9& v) {
  Mat3 m;
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 3; ++i) m(i, j) = v(3 * j + i);
  }
  return m;
}

template <typename DerivedA, typename DerivedB>
MatX kron(const Eigen::MatrixBase<DerivedA>& a,
          const Eigen::MatrixBase<DerivedB>& b) {
  if (a.size() == 0 || b.size() == 0) {
    throw Error(ErrorCode::kDimensionMismatch, "kron of an empty matrix");
  }
  MatX out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// vec(A * B * C) computed as (C^T kron A) vec(B). Throws on non-conforming
// shapes.
template <typename DA, typename DB, typename DC>
VecX vec_product(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b,
                 const Eigen::MatrixBase<DC>& c) {
  if (a.cols() != b.rows() || b.cols() != c.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "vec_product: non-conforming matrix shapes");
  }
  return kron(c.transpose(), a) * vec(b);
}

inline SingularDecomposition3 svd3(const Mat3& m) {
  Eigen::JacobiSVD<Mat3> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  SingularDecomposition3 out;
  out.U = svd.matrixU();
  out.sigma = svd.singularValues();
  out.V = svd.matrixV();
  return out;
}

inline bool is_rotation(const Mat3& r, double tol = 1e-10) {
  return (r.transpose() * r - Mat3::Identity()).cwiseAbs().maxCoeff() <= tol &&
         std::abs(r.determinant() - 1.0) <= tol;
}

}  // namespace twoview
