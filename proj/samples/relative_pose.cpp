// Minimal use of the library: simulate one noisy scene, estimate the pose,
// and compare against the ground truth.

#include <cstdio>

#include "twoview/twoview.hpp"

int main() {
  using namespace twoview;

  ScenarioConfig cfg;  // 50 points, d = 30, K = (800, 800, 512, 512)
  Rng rng(2024);
  const Scene scene = generate_scene(cfg, /*alpha=*/0.5, rng);
  const CorrespondenceSet corr =
      add_pixel_noise(scene.correspondences, /*std_px=*/1.0, cfg.intrinsics, rng);

  const PipelineResult res = run_pipeline(corr);
  const auto& id = res.identification;

  std::printf("chosen candidate   %d (R%d, t%d)\n", id.chosen_index,
              id.rotation_index + 1, id.translation_index + 1);
  std::printf("S1 votes           %d / %d\n", id.s1[0], id.s1[1]);
  std::printf("S2 votes           %d / %d\n", id.s2[0], id.s2[1]);
  std::printf("rotation error     %.4f deg\n", rotation_discrepancy(scene.pose.R, id.chosen.R));
  std::printf("translation error  %.4f deg\n",
              translation_discrepancy(scene.t_dir, id.chosen.t_dir));
  std::printf("motion             %s (PRI %.4f)\n", motion_label_name(res.motion.label),
              res.motion.pri);

  // Depths come out in units of ||t||; scale by the true baseline to compare.
  const double scale = scene.pose.t.norm();
  const auto& p = res.reconstruction.points.front();
  std::printf("point 0 depth      %.3f (true %.3f)\n", scale * p.depth_left,
              scene.points.front().z());
  return 0;
}
