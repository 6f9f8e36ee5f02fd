#include <gtest/gtest.h>

#include "test_support.hpp"

namespace twoview {
namespace {

TEST(Pri, NearZeroForPureRotation) {
  for (int i = 0; i < 20; ++i) {
    const Scene s = testing::noiseless_scene(8000 + i, 0.0);
    EXPECT_LE(compute_pri(s.pose.R, s.t_dir, s.correspondences), 1e-9);
  }
}

TEST(Pri, LargeForFullBaseline) {
  const Scene s = testing::noiseless_scene(81, 1.0);
  EXPECT_GT(compute_pri(s.pose.R, s.t_dir, s.correspondences), 5.0 * kDefaultPriThreshold);
}

TEST(Pri, SymmetricInTranslationSign) {
  const Scene s = testing::noisy_scene(82, 0.3, 1.0);
  for (auto form : {PriForm::kRayNormalized, PriForm::kRaw}) {
    EXPECT_DOUBLE_EQ(compute_pri(s.pose.R, s.t_dir, s.correspondences, form),
                     compute_pri(s.pose.R, -s.t_dir, s.correspondences, form));
  }
}

TEST(Pri, RayNormalizedFormIgnoresRayScale) {
  const Scene s = testing::noisy_scene(83, 0.5, 1.0);
  Rng rng(83);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  CorrespondenceSet scaled = s.correspondences;
  for (auto& c : scaled) {
    c.left *= u(rng);
    c.right *= u(rng);
  }
  EXPECT_NEAR(compute_pri(s.pose.R, s.t_dir, scaled),
              compute_pri(s.pose.R, s.t_dir, s.correspondences), 1e-14);
  EXPECT_NEAR(compute_m3(s.pose.R, scaled), compute_m3(s.pose.R, s.correspondences), 1e-14);
}

TEST(Pri, RawFormMatchesIntersectionValues) {
  const Scene s = testing::noisy_scene(84, 0.5, 1.0);
  const VecX m2 = intersection_values(s.pose.R, s.t_dir, s.correspondences);
  EXPECT_NEAR(compute_pri(s.pose.R, s.t_dir, s.correspondences, PriForm::kRaw),
              m2.cwiseAbs().mean(), 1e-14);
}

TEST(M3, PerpendicularRays) {
  const CorrespondenceSet corr{Correspondence{Vec3(0, 0, 1), Vec3(1, 0, 0)}};
  EXPECT_DOUBLE_EQ(compute_m3(Mat3::Identity(), corr), 1.0);
  EXPECT_EQ(compute_m3(Mat3::Identity(), CorrespondenceSet{}), 0.0);
}

TEST(Classify, ZeroThresholdAlwaysReportsGeneralMotion) {
  const Scene s = testing::noiseless_scene(85, 0.0);
  ClassifyOptions opt;
  opt.delta_pri = 0.0;
  EXPECT_EQ(classify(s.pose.R, s.t_dir, s.correspondences, opt).label,
            MotionLabel::kGeneralMotion);
  opt.delta_pri = -1.0;
  EXPECT_THROW(classify(s.pose.R, s.t_dir, s.correspondences, opt), Error);
}

TEST(Classify, NoisyPureRotationScenes) {
  for (int i = 0; i < 50; ++i) {
    const Scene s = testing::noisy_scene(8600 + i, 0.0, 1.0);
    const PipelineResult res = run_pipeline(s.correspondences);
    EXPECT_EQ(res.motion.label, MotionLabel::kPureRotation) << "pri " << res.motion.pri;
  }
}

TEST(Classify, GeneralMotionScenes) {
  for (int i = 0; i < 50; ++i) {
    const Scene s = testing::noisy_scene(8700 + i, 1.0, 0.3);
    const PipelineResult res = run_pipeline(s.correspondences);
    EXPECT_EQ(res.motion.label, MotionLabel::kGeneralMotion) << "pri " << res.motion.pri;
  }
}

TEST(Classify, OptionalM3Verdict) {
  const Scene s = testing::noiseless_scene(88, 1.0);
  ClassifyOptions opt;
  EXPECT_FALSE(classify(s.pose.R, s.t_dir, s.correspondences, opt).m3_says_pure_rotation);
  opt.delta_theta = 1e-6;
  const auto c = classify(s.pose.R, s.t_dir, s.correspondences, opt);
  ASSERT_TRUE(c.m3_says_pure_rotation.has_value());
  EXPECT_FALSE(*c.m3_says_pure_rotation);
  EXPECT_STREQ(motion_label_name(c.label), "general_motion");
}

// Noiseless data: a point has |m2| ~ 0 exactly when its rays are parallel.
TEST(Classify, VanishingIntersectionIffParallelRays) {
  auto check = [](const Scene& s, bool expect_parallel) {
    for (const auto& c : s.correspondences) {
      const bool m2_zero = std::abs(intersection_value(s.pose.R, s.t_dir, c)) <= 1e-10;
      const bool parallel =
          cross(c.right, s.pose.R * c.left).norm() <= 1e-10 * c.left.norm() * c.right.norm();
      EXPECT_EQ(m2_zero, parallel);
      EXPECT_EQ(parallel, expect_parallel);
    }
  };
  for (int i = 0; i < 20; ++i) {
    check(testing::noiseless_scene(8900 + i, 0.0), true);
    check(testing::noiseless_scene(8950 + i, 0.2 + 0.04 * i), false);
  }
}

}  // namespace
}  // namespace twoview
