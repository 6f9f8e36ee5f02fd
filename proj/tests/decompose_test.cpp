#include <gtest/gtest.h>

#include "test_support.hpp"

namespace twoview {
namespace {

bool matches(const PoseCandidate& c, const Mat3& r, const Vec3& t_dir, double tol) {
  return (c.R - r).norm() <= tol && (c.t_dir - t_dir).norm() <= tol;
}

TEST(Decompose, ExactlyOneCandidateMatchesTruth) {
  for (int i = 0; i < 100; ++i) {
    const Scene s = testing::noiseless_scene(3000 + i, 0.05 + 0.0095 * i);
    const PoseCandidateSet cands = decompose(solve_linear(s.correspondences));
    int n = 0;
    for (const auto& c : cands.candidates) n += matches(c, s.pose.R, s.t_dir, 1e-7) ? 1 : 0;
    EXPECT_EQ(n, 1) << "scene " << i;
  }
}

TEST(Decompose, CandidatesAreProperRotationsAndUnitTranslations) {
  const Scene s = testing::noisy_scene(41, 0.4, 2.0);
  const PoseCandidateSet cands = decompose(solve_linear(s.correspondences));
  for (const auto& c : cands.candidates) {
    EXPECT_TRUE(is_rotation(c.R, 1e-10));
    EXPECT_NEAR(c.t_dir.norm(), 1.0, 1e-12);
  }
  EXPECT_NEAR(cands.U.determinant() * cands.V.determinant(), 1.0, 1e-10);
  // Layout: index = 2 * translation + rotation.
  EXPECT_EQ(cands.candidates[0].R, cands.candidates[2].R);
  EXPECT_EQ(cands.candidates[1].R, cands.candidates[3].R);
  EXPECT_EQ(cands.candidates[0].t_dir, cands.candidates[1].t_dir);
  EXPECT_EQ(cands.candidates[2].t_dir, -cands.candidates[0].t_dir);
}

TEST(Decompose, SkewOfUnitZ) {
  SingularDecomposition3 svd = svd3(skew(Vec3::UnitZ()));
  const PoseCandidateSet cands = decompose(svd);
  Mat3 rz180;
  rz180 << -1, 0, 0, 0, -1, 0, 0, 0, 1;
  const Mat3& r1 = cands.rotation(0);
  const Mat3& r2 = cands.rotation(1);
  const bool order_a = (r1 - Mat3::Identity()).norm() < 1e-12 && (r2 - rz180).norm() < 1e-12;
  const bool order_b = (r2 - Mat3::Identity()).norm() < 1e-12 && (r1 - rz180).norm() < 1e-12;
  EXPECT_TRUE(order_a || order_b);
  EXPECT_NEAR(std::abs(cands.translation(0).z()), 1.0, 1e-12);
  EXPECT_EQ(cands.translation(1), -cands.translation(0));
}

TEST(Decompose, PureRotationKeepsTrueRotation) {
  ScenarioConfig cfg;
  Rng rng(42);
  SceneBase base = draw_scene_base(cfg, rng);
  base.R = euler_zyx_to_rotation(Vec3(10, -5, 2));
  const Scene s = instantiate_scene(base, 0.0, cfg);
  const PoseCandidateSet cands = decompose(solve_linear(s.correspondences));
  const double d1 = (cands.rotation(0) - s.pose.R).norm();
  const double d2 = (cands.rotation(1) - s.pose.R).norm();
  EXPECT_LE(std::min(d1, d2), 1e-8);
  EXPECT_GT(std::max(d1, d2), 1e-3);
  for (const auto& c : cands.candidates) EXPECT_NEAR(c.t_dir.norm(), 1.0, 1e-12);
}

TEST(Decompose, RankDeficientInputThrows) {
  SingularDecomposition3 svd;
  svd.sigma = Vec3(1.0, 0.0, 0.0);
  try {
    decompose(svd);
    FAIL() << "expected RankDeficientEssential";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRankDeficientEssential);
  }
}

TEST(Decompose, WMatrices) {
  for (int k = 1; k <= 4; ++k) {
    const Mat3 w = w_matrix(k);
    EXPECT_TRUE((w.transpose() * w).isApprox(Mat3::Identity()));
  }
  EXPECT_EQ(w_matrix(1).determinant(), 1.0);
  EXPECT_EQ(w_matrix(2), w_matrix(1).transpose());
  EXPECT_THROW(w_matrix(5), Error);
}

}  // namespace
}  // namespace twoview
