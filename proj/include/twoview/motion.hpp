#pragma once

// Pure-rotation detection.
//
// PRI is the mean absolute intersection value. By default the value is
// computed on unit rays, |X'^T e / ||X'|| - X^T R^T e / ||X|||, which keeps
// the 0.015 threshold dimensionless. M3 is the mean normalized parallax
// ||X' x R X|| / (||X'|| ||X||) and is reported for comparison only.

#include <cmath>
#include <optional>
#include <span>

#include "twoview/algebra.hpp"
#include "twoview/camera.hpp"
#include "twoview/identify.hpp"

namespace twoview {

inline constexpr double kDefaultPriThreshold = 0.015;

enum class MotionLabel { kPureRotation, kGeneralMotion };

constexpr const char* motion_label_name(MotionLabel label) {
  return label == MotionLabel::kPureRotation ? "pure_rotation"
                                             : "general_motion";
}

enum class PriForm { kRayNormalized, kRaw };

inline double compute_pri(const Mat3& r, const Vec3& t_dir,
                          std::span<const Correspondence> corr,
                          PriForm form = PriForm::kRayNormalized) {
  if (corr.empty()) return 0.0;
  const Vec3 rte = r.transpose() * t_dir;
  double sum = 0.0;
  for (const auto& c : corr) {
    if (form == PriForm::kRayNormalized) {
      sum += std::abs(c.right.dot(t_dir) / c.right.norm() -
                      c.left.dot(rte) / c.left.norm());
    } else {
      sum += std::abs(c.left.norm() * c.right.dot(t_dir) -
                      c.right.norm() * c.left.dot(rte));
    }
  }
  return sum / static_cast<double>(corr.size());
}

inline double compute_m3(const Mat3& r, std::span<const Correspondence> corr) {
  if (corr.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& c : corr) {
    sum += cross(c.right, r * c.left).norm() / (c.right.norm() * c.left.norm());
  }
  return sum / static_cast<double>(corr.size());
}

struct MotionClassification {
  double pri = 0.0;
  double m3 = 0.0;
  MotionLabel label = MotionLabel::kGeneralMotion;
  double delta_pri = kDefaultPriThreshold;
  std::optional<double> delta_theta;
  // M3 < delta_theta, only when a threshold was supplied. Never drives label.
  std::optional<bool> m3_says_pure_rotation;
};

struct ClassifyOptions {
  double delta_pri = kDefaultPriThreshold;
  std::optional<double> delta_theta;
  PriForm form = PriForm::kRayNormalized;
};

inline MotionClassification classify(const Mat3& r, const Vec3& t_dir,
                                     std::span<const Correspondence> corr,
                                     const ClassifyOptions& options = {}) {
  if (!(options.delta_pri >= 0.0)) {
    throw Error(ErrorCode::kConfigInvalid, "delta_pri must be non-negative");
  }
  MotionClassification out;
  out.pri = compute_pri(r, t_dir, corr, options.form);
  out.m3 = compute_m3(r, corr);
  out.delta_pri = options.delta_pri;
  out.delta_theta = options.delta_theta;
  out.label = out.pri < options.delta_pri ? MotionLabel::kPureRotation
                                          : MotionLabel::kGeneralMotion;
  if (options.delta_theta) out.m3_says_pure_rotation = out.m3 < *options.delta_theta;
  return out;
}

}  // namespace twoview
