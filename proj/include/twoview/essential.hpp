#pragma once

// Linear essential-matrix estimation. Each correspondence contributes the
// row (X^T kron X'^T), so that X'^T Q X = (X^T kron X'^T) vec(Q).

#include <array>
#include <cmath>
#include <span>

#include <Eigen/Core>
#include <Eigen/SVD>

#include "twoview/algebra.hpp"
#include "twoview/camera.hpp"
#include "twoview/error.hpp"

namespace twoview {

inline constexpr std::size_t kMinCorrespondences = 8;

// m x 9, row i = X_i^T kron X'_i^T.
using ConstraintMatrix = Eigen::Matrix<double, Eigen::Dynamic, 9>;

struct EssentialEstimate {
  Mat3 Q = Mat3::Zero();
  SingularDecomposition3 svd;  // exact factors of Q: sigma = (s, s, 0)
  double a_norm = 0.0;         // (sqrt(2)/2) * ||vec(Q)||
  // Singular values of the constraint matrix, descending, padded to 9.
  Vec9 system_singular_values = Vec9::Zero();
};

struct SolveOptions {
  // Hartley-style translate+scale conditioning of both point sets before the
  // linear solve. Off by default: inputs are already calibrated.
  bool isotropic_conditioning = false;
  // Numerical nullspace threshold relative to the largest singular value.
  double rank_tolerance = 1e-10;
};

inline Eigen::Matrix<double, 1, 9> constraint_row(const Vec3& x,
                                                  const Vec3& xp) {
  Eigen::Matrix<double, 1, 9> row;
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 3; ++i) row(3 * j + i) = x(j) * xp(i);
  }
  return row;
}

inline ConstraintMatrix build_constraint_matrix(std::span<const Correspondence> corr,
                                                bool require_minimum = true) {
  if (require_minimum && corr.size() < kMinCorrespondences) {
    throw Error(ErrorCode::kTooFewPoints,
                "at least 8 correspondences are required");
  }
  ConstraintMatrix a(static_cast<Eigen::Index>(corr.size()), 9);
  for (std::size_t i = 0; i < corr.size(); ++i) {
    a.row(static_cast<Eigen::Index>(i)) =
        constraint_row(corr[i].left, corr[i].right);
  }
  return a;
}

namespace detail {

// Translate to the centroid and scale so the mean distance is sqrt(2).
inline Mat3 conditioning_transform(std::span<const Correspondence> corr,
                                   bool right) {
  Eigen::Vector2d mean = Eigen::Vector2d::Zero();
  for (const auto& c : corr) mean += (right ? c.right : c.left).head<2>();
  mean /= static_cast<double>(corr.size());
  double dist = 0.0;
  for (const auto& c : corr) {
    dist += ((right ? c.right : c.left).head<2>() - mean).norm();
  }
  dist /= static_cast<double>(corr.size());
  const double s = dist > 0.0 ? std::sqrt(2.0) / dist : 1.0;
  Mat3 t;
  t << s, 0.0, -s * mean.x(), 0.0, s, -s * mean.y(), 0.0, 0.0, 1.0;
  return t;
}

}  // namespace detail

// Unit-norm minimizer of ||A vec(Q)|| projected onto the essential manifold
// (singular values (s1, s2, s3) -> (s, s, 0), s = (s1 + s2) / 2) and
// re-normalized to unit Frobenius norm.
//
// Pure rotation (t = 0) has the 3-dimensional solution family Q = R [a]x,
// every member of which is an essential matrix; that case is accepted. A
// nullspace larger than 3 is reported as DegenerateConfiguration.
inline EssentialEstimate solve_linear(std::span<const Correspondence> corr,
                                      const ConstraintMatrix& a,
                                      const SolveOptions& options = {}) {
  if (corr.size() < kMinCorrespondences) {
    throw Error(ErrorCode::kTooFewPoints,
                "at least 8 correspondences are required");
  }

  Mat3 t_left = Mat3::Identity();
  Mat3 t_right = Mat3::Identity();
  ConstraintMatrix conditioned;
  const ConstraintMatrix* system = &a;
  if (options.isotropic_conditioning) {
    t_left = detail::conditioning_transform(corr, false);
    t_right = detail::conditioning_transform(corr, true);
    conditioned.resize(a.rows(), 9);
    for (std::size_t i = 0; i < corr.size(); ++i) {
      conditioned.row(static_cast<Eigen::Index>(i)) =
          constraint_row(t_left * corr[i].left, t_right * corr[i].right);
    }
    system = &conditioned;
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(*system, Eigen::ComputeFullV);
  EssentialEstimate est;
  const auto& sv = svd.singularValues();
  for (Eigen::Index k = 0; k < sv.size() && k < 9; ++k) {
    est.system_singular_values(k) = sv(k);
  }
  const double largest = est.system_singular_values(0);
  if (!(largest > 0.0) ||
      est.system_singular_values(5) <= options.rank_tolerance * largest) {
    throw Error(ErrorCode::kDegenerateConfiguration,
                "constraint matrix nullspace is larger than the pure-rotation "
                "family");
  }

  const Vec9 q = svd.matrixV().col(8);
  Mat3 q_mat = unvec(q);
  if (options.isotropic_conditioning) {
    q_mat = t_right.transpose() * q_mat * t_left;
  }

  Eigen::JacobiSVD<Mat3> qsvd(q_mat, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Vec3 s = qsvd.singularValues();
  const double mean = 0.5 * (s(0) + s(1));
  if (!(mean > 0.0)) {
    throw Error(ErrorCode::kDegenerateConfiguration,
                "linear solution has rank below 2");
  }
  // Unit Frobenius norm: sqrt(2) * s_hat = 1.
  const double s_hat = 1.0 / std::sqrt(2.0);
  est.svd.U = qsvd.matrixU();
  est.svd.V = qsvd.matrixV();
  est.svd.sigma = Vec3(s_hat, s_hat, 0.0);
  est.Q = est.svd.reassemble();
  est.a_norm = std::sqrt(2.0) / 2.0 * vec(est.Q).norm();
  return est;
}

inline EssentialEstimate solve_linear(std::span<const Correspondence> corr,
                                      const SolveOptions& options = {}) {
  return solve_linear(corr, build_constraint_matrix(corr), options);
}

// Rows (x^2, xy, x, xs, yx, y^2, y, ys, x, y, 1, s) of the depth-augmented
// system L y = 0, where (x, y) come from the left point and s = 1 / z_w.
// Diagnostic only.
inline Eigen::Matrix<double, Eigen::Dynamic, 12> build_L_matrix(
    std::span<const Correspondence> corr, std::span<const double> inverse_depth) {
  if (corr.size() != inverse_depth.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "one inverse depth per correspondence is required");
  }
  Eigen::Matrix<double, Eigen::Dynamic, 12> l(
      static_cast<Eigen::Index>(corr.size()), 12);
  for (std::size_t i = 0; i < corr.size(); ++i) {
    const double x = corr[i].left.x();
    const double y = corr[i].left.y();
    const double s = inverse_depth[i];
    l.row(static_cast<Eigen::Index>(i)) << x * x, x * y, x, x * s, y * x,
        y * y, y, y * s, x, y, 1.0, s;
  }
  return l;
}

// The three structural null vectors of L (columns 2=5, 3=9, 7=10, 1-based).
inline std::array<Eigen::Matrix<double, 12, 1>, 3> L_null_vectors() {
  std::array<Eigen::Matrix<double, 12, 1>, 3> xi;
  for (auto& v : xi) v.setZero();
  xi[0](1) = 1.0;
  xi[0](4) = -1.0;
  xi[1](2) = 1.0;
  xi[1](8) = -1.0;
  xi[2](6) = 1.0;
  xi[2](9) = -1.0;
  return xi;
}

}  // namespace twoview
