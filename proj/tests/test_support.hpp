#pragma once

#include <cstdint>

#include "twoview/twoview.hpp"

namespace twoview::testing {

inline Vec3 random_vec(Rng& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  return Vec3(u(rng), u(rng), u(rng));
}

inline Mat3 random_rotation(Rng& rng) {
  std::uniform_real_distribution<double> u(-180.0, 180.0);
  return euler_zyx_to_rotation(Vec3(u(rng), u(rng) / 2.0, u(rng)));
}

// Noise-free scene with the default layout.
inline Scene noiseless_scene(std::uint64_t seed, double alpha, int n_pts = 50,
                             double d = 30.0) {
  ScenarioConfig cfg;
  cfg.n_pts = n_pts;
  cfg.d = d;
  Rng rng(seed);
  return generate_scene(cfg, alpha, rng);
}

inline Scene noisy_scene(std::uint64_t seed, double alpha, double std_px,
                         int n_pts = 50) {
  ScenarioConfig cfg;
  cfg.n_pts = n_pts;
  Rng rng(seed);
  Scene s = generate_scene(cfg, alpha, rng);
  s.correspondences = add_pixel_noise(s.correspondences, std_px, cfg.intrinsics, rng);
  return s;
}

// Angle of R_a^T R_b in degrees.
inline double rotation_angle_deg(const Mat3& a, const Mat3& b) {
  // ||A - B||_F = 2 sqrt(2) sin(theta / 2); accurate for small angles.
  const double s = std::min(1.0, (a - b).norm() / (2.0 * std::sqrt(2.0)));
  return 2.0 * std::asin(s) * kDegPerRad;
}

}  // namespace twoview::testing
