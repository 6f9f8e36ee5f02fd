#pragma once

// Pinhole camera model and the two-view imaging relation
//   z' X' = z R X + t,
// with X, X' normalized homogeneous image points (third coordinate 1).

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "twoview/algebra.hpp"
#include "twoview/error.hpp"

namespace twoview {

using Vec2 = Eigen::Vector2d;

struct CameraIntrinsics {
  double fx = 800.0;
  double fy = 800.0;
  double cx = 512.0;
  double cy = 512.0;

  bool valid() const { return fx > 0.0 && fy > 0.0; }

  Mat3 matrix() const {
    Mat3 k;
    k << fx, 0.0, cx, 0.0, fy, cy, 0.0, 0.0, 1.0;
    return k;
  }
};

// Pose of the right camera: X'_w = R X_w + t.
struct Pose {
  Mat3 R = Mat3::Identity();
  Vec3 t = Vec3::Zero();

  Vec3 transform(const Vec3& xw) const { return R * xw + t; }
};

struct Correspondence {
  Vec3 left = Vec3::UnitZ();   // (x, y, 1)
  Vec3 right = Vec3::UnitZ();  // (x', y', 1)
  std::optional<Vec2> left_px;
  std::optional<Vec2> right_px;
};

using CorrespondenceSet = std::vector<Correspondence>;

struct ProjectedPair {
  Vec2 left_px;
  Vec2 right_px;
  Vec3 left;
  Vec3 right;
};

inline Vec3 pixel_to_normalized(const Vec2& px, const CameraIntrinsics& k) {
  return Vec3((px.x() - k.cx) / k.fx, (px.y() - k.cy) / k.fy, 1.0);
}

inline Vec2 normalized_to_pixel(const Vec3& p, const CameraIntrinsics& k) {
  return Vec2(k.fx * p.x() / p.z() + k.cx, k.fy * p.y() / p.z() + k.cy);
}

inline ProjectedPair project_pair(const Vec3& xw, const Pose& pose,
                                  const CameraIntrinsics& k) {
  const Vec3 xw_right = pose.transform(xw);
  if (!(xw.z() > 0.0) || !(xw_right.z() > 0.0)) {
    throw Error(ErrorCode::kNonPositiveDepth,
                "world point has non-positive depth in a view");
  }
  ProjectedPair out;
  out.left = xw / xw.z();
  out.right = xw_right / xw_right.z();
  // Third coordinate is exactly 1 after the division above; pin it anyway so
  // the homogeneous convention never drifts.
  out.left.z() = 1.0;
  out.right.z() = 1.0;
  out.left_px = normalized_to_pixel(out.left, k);
  out.right_px = normalized_to_pixel(out.right, k);
  return out;
}

inline Correspondence make_correspondence(const ProjectedPair& p) {
  return Correspondence{p.left, p.right, p.left_px, p.right_px};
}

inline Correspondence correspondence_from_pixels(const Vec2& left_px,
                                                 const Vec2& right_px,
                                                 const CameraIntrinsics& k) {
  return Correspondence{pixel_to_normalized(left_px, k),
                        pixel_to_normalized(right_px, k), left_px, right_px};
}

}  // namespace twoview
