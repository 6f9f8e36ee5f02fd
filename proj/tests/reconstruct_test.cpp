#include <gtest/gtest.h>

#include "test_support.hpp"

namespace twoview {
namespace {

TEST(Analytic, HandExample) {
  const Correspondence c{Vec3(0, 0, 1), Vec3(1, 0, 1)};
  const ReconstructedPoint p = analytic_depth(Mat3::Identity(), Vec3::UnitX(), c);
  ASSERT_TRUE(p.valid);
  EXPECT_DOUBLE_EQ(p.depth_left, 1.0);
  EXPECT_DOUBLE_EQ(p.depth_right, 1.0);
  EXPECT_LE((p.point - Vec3(0, 0, 1)).norm(), 1e-15);
  EXPECT_LE(p.gap, 1e-15);
}

TEST(Analytic, ParallelRaysAreInvalid) {
  const Scene s = testing::noiseless_scene(71, 0.0);
  const ReconstructionResult r = analytic_depths(s.pose.R, s.t_dir, s.correspondences);
  EXPECT_EQ(r.points.size(), s.correspondences.size());
  EXPECT_EQ(r.valid_count(), 0u);
}

TEST(Analytic, MatchesGroundTruth) {
  for (int i = 0; i < 100; ++i) {
    const Scene s = testing::noiseless_scene(7200 + i, 0.05 + 0.0095 * i);
    const double scale = s.pose.t.norm();
    const ReconstructionResult r = analytic_depths(s.pose.R, s.t_dir, s.correspondences);
    ASSERT_EQ(r.valid_count(), s.points.size());
    for (std::size_t k = 0; k < s.points.size(); ++k) {
      const Vec3& xw = s.points[k];
      const double zr = s.pose.transform(xw).z();
      EXPECT_NEAR(scale * r.points[k].depth_left, xw.z(), 1e-8 * xw.z());
      EXPECT_NEAR(scale * r.points[k].depth_right, zr, 1e-8 * zr);
      EXPECT_LE((scale * r.points[k].point - xw).norm(), 1e-8 * xw.norm());
    }
  }
}

TEST(Analytic, SatisfiesScaledImagingEquation) {
  const Scene s = testing::noiseless_scene(73, 0.4);
  const ReconstructionResult r = analytic_depths(s.pose.R, s.t_dir, s.correspondences);
  for (std::size_t k = 0; k < s.points.size(); ++k) {
    const auto& c = s.correspondences[k];
    const auto& p = r.points[k];
    const Vec3 lhs = p.depth_right * c.right;
    const Vec3 rhs = p.depth_left * s.pose.R * c.left + s.t_dir;
    EXPECT_LE((lhs - rhs).norm(), 1e-9 * lhs.norm());
  }
}

TEST(Analytic, RelativeDepthGrowsAsBaselineShrinks) {
  ScenarioConfig cfg;
  Rng rng(74);
  const SceneBase base = draw_scene_base(cfg, rng);
  double previous = 0.0;
  for (double alpha : {1.0, 0.1, 0.01, 0.001}) {
    const Scene s = instantiate_scene(base, alpha, cfg);
    const ReconstructionResult r = analytic_depths(s.pose.R, s.t_dir, s.correspondences);
    const double z = r.points[0].depth_left;
    EXPECT_NEAR(z * alpha * cfg.t_max, s.points[0].z(), 1e-6 * s.points[0].z());
    EXPECT_GT(z, previous);
    previous = z;
  }
}

TEST(Dlt, AgreesWithAnalyticOnNoiselessData) {
  const Scene s = testing::noiseless_scene(75, 0.6);
  const ReconstructionResult a = analytic_depths(s.pose.R, s.t_dir, s.correspondences);
  const ReconstructionResult d = dlt_triangulate(s.pose.R, s.t_dir, s.correspondences);
  for (std::size_t k = 0; k < s.points.size(); ++k) {
    ASSERT_TRUE(d.points[k].valid);
    EXPECT_LE((a.points[k].point - d.points[k].point).norm(), 1e-8 * a.points[k].point.norm());
    EXPECT_NEAR(a.points[k].depth_right, d.points[k].depth_right,
                1e-8 * a.points[k].depth_right);
  }
}

TEST(Dlt, HomogeneousSolutionIsUnit) {
  const Vec4 h = dlt_homogeneous(Mat3::Identity(), Vec3::UnitX(), Vec3(0, 0, 1), Vec3(1, 0, 1));
  EXPECT_NEAR(h.norm(), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(h(2) / h(3)), 1.0, 1e-12);
}

}  // namespace
}  // namespace twoview
