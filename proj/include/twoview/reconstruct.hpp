#pragma once

// Relative-depth reconstruction from an identified pose. All outputs are in
// units of ||t||: with a unit translation direction e,
//   z / ||t||  = ||e x X'|| / ||X' x R X||
//   z' / ||t|| = ||e x R X|| / ||X' x R X||.

#include <cmath>
#include <span>
#include <vector>

#include <Eigen/SVD>

#include "twoview/algebra.hpp"
#include "twoview/camera.hpp"

namespace twoview {

struct ReconstructedPoint {
  double depth_left = 0.0;   // z_w / ||t||
  double depth_right = 0.0;  // z'_w / ||t||
  Vec3 point = Vec3::Zero(); // left frame, units of ||t||
  double gap = 0.0;          // distance between the two single-view points
  bool valid = false;
};

struct ReconstructionResult {
  std::vector<ReconstructedPoint> points;

  std::size_t valid_count() const {
    std::size_t n = 0;
    for (const auto& p : points) n += p.valid ? 1 : 0;
    return n;
  }
};

// Rays whose cross-product norm falls below this fraction of ||X|| ||X'||
// are treated as parallel.
inline constexpr double kParallelTolerance = 1e-9;

namespace detail {

// Writes into `out` (left untouched for parallel rays); `rt` is R^T.
inline void analytic_depth_into(const Mat3& r, const Mat3& rt, const Vec3& e,
                                const Correspondence& c, ReconstructedPoint& out) {
  const Vec3 rx = r * c.left;
  const Vec3 b = cross(c.right, rx);
  const double b2 = b.squaredNorm();
  if (b2 <= kParallelTolerance * kParallelTolerance * c.right.squaredNorm() *
                c.left.squaredNorm()) {
    return;
  }
  const double inv_parallax = 1.0 / std::sqrt(b2);
  out.depth_left = cross(e, c.right).norm() * inv_parallax;
  out.depth_right = cross(e, rx).norm() * inv_parallax;
  const Vec3 from_left = out.depth_left * c.left;
  const Vec3 from_right = rt * (out.depth_right * c.right - e);
  out.point = 0.5 * (from_left + from_right);
  out.gap = (from_left - from_right).norm();
  out.valid = true;
}

}  // namespace detail

inline ReconstructedPoint analytic_depth(const Mat3& r, const Vec3& e,
                                         const Correspondence& c) {
  ReconstructedPoint out;
  detail::analytic_depth_into(r, r.transpose(), e, c, out);
  return out;
}

inline ReconstructionResult analytic_depths(const Mat3& r, const Vec3& t_dir,
                                            std::span<const Correspondence> corr) {
  ReconstructionResult out;
  out.points.resize(corr.size());
  const Mat3 rt = r.transpose();
  for (std::size_t i = 0; i < corr.size(); ++i) {
    detail::analytic_depth_into(r, rt, t_dir, corr[i], out.points[i]);
  }
  return out;
}

// Homogeneous DLT for P1 = [I | 0], P2 = [R | t]. Returns the homogeneous
// solution (unit norm).
inline Vec4 dlt_homogeneous(const Mat3& r, const Vec3& t, const Vec3& x,
                            const Vec3& xp) {
  Eigen::Matrix<double, 3, 4> p2;
  p2.leftCols<3>() = r;
  p2.col(3) = t;
  Mat4 design;
  design.row(0) << -x.z(), 0.0, x.x(), 0.0;  // x * P1.row(2) - z * P1.row(0)
  design.row(1) << 0.0, -x.z(), x.y(), 0.0;
  design.row(2) = xp.x() * p2.row(2) - xp.z() * p2.row(0);
  design.row(3) = xp.y() * p2.row(2) - xp.z() * p2.row(1);
  Eigen::JacobiSVD<Mat4> svd(design, Eigen::ComputeFullV);
  return svd.matrixV().col(3);
}

inline ReconstructedPoint dlt_point(const Mat3& r, const Vec3& t,
                                    const Correspondence& c) {
  ReconstructedPoint out;
  const Vec4 h = dlt_homogeneous(r, t, c.left, c.right);
  if (std::abs(h(3)) <= 1e-14 * h.head<3>().norm()) return out;
  out.point = h.head<3>() / h(3);
  out.depth_left = out.point.z();
  out.depth_right = (r * out.point + t).z();
  out.valid = true;
  return out;
}

inline ReconstructionResult dlt_triangulate(const Mat3& r, const Vec3& t_dir,
                                            std::span<const Correspondence> corr) {
  ReconstructionResult out;
  out.points.reserve(corr.size());
  for (const auto& c : corr) out.points.push_back(dlt_point(r, t_dir, c));
  return out;
}

}  // namespace twoview
