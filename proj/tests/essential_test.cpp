#include <gtest/gtest.h>

#include "test_support.hpp"

namespace twoview {
namespace {

TEST(Essential, ConstraintRowExample) {
  // X^T kron X'^T with X = (1, 2, 1), X' = (3, 4, 1).
  Eigen::Matrix<double, 1, 9> expected;
  expected << 3, 4, 1, 6, 8, 2, 3, 4, 1;
  EXPECT_EQ(constraint_row(Vec3(1, 2, 1), Vec3(3, 4, 1)), expected);
}

TEST(Essential, RowTimesVecEqualsBilinearForm) {
  Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    const Vec3 x = testing::random_vec(rng);
    const Vec3 xp = testing::random_vec(rng);
    const Mat3 q = Mat3::Random();
    EXPECT_NEAR(constraint_row(x, xp).dot(vec(q)), xp.dot(q * x), 1e-12);
  }
}

TEST(Essential, RequiresEightCorrespondences) {
  const Scene s = testing::noiseless_scene(32, 0.5, 7);
  try {
    solve_linear(s.correspondences);
    FAIL() << "expected TooFewPoints";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooFewPoints);
  }
  EXPECT_NO_THROW(solve_linear(testing::noiseless_scene(32, 0.5, 8).correspondences));
}

TEST(Essential, TrueEssentialSatisfiesConstraints) {
  const Scene s = testing::noiseless_scene(33, 0.8);
  const Mat3 e = skew(s.pose.t) * s.pose.R;
  const ConstraintMatrix a = build_constraint_matrix(s.correspondences);
  EXPECT_LE((a * vec(e)).norm(), 1e-10);
}

TEST(Essential, RecoversTrueEssentialUpToSign) {
  for (int i = 0; i < 50; ++i) {
    const Scene s = testing::noiseless_scene(1000 + i, 0.05 + 0.019 * i);
    const Mat3 e = skew(s.pose.t) * s.pose.R;
    const EssentialEstimate est = solve_linear(s.correspondences);
    const double align = std::abs(vec(est.Q).dot(vec(e))) / (vec(e).norm() * vec(est.Q).norm());
    EXPECT_GE(align, 1.0 - 1e-8) << "scene " << i;
  }
}

TEST(Essential, EstimateHasEssentialStructure) {
  const Scene s = testing::noisy_scene(34, 0.3, 1.0);
  const EssentialEstimate est = solve_linear(s.correspondences);
  EXPECT_NEAR(est.Q.norm(), 1.0, 1e-12);
  EXPECT_NEAR(est.svd.sigma(0), std::sqrt(0.5), 1e-12);
  EXPECT_NEAR(est.svd.sigma(1), std::sqrt(0.5), 1e-12);
  EXPECT_EQ(est.svd.sigma(2), 0.0);
  const Vec3 sv = svd3(est.Q).sigma;
  EXPECT_NEAR(sv(0), sv(1), 1e-12);
  EXPECT_LE(sv(2), 1e-12);
  // 2 Q Q^T Q - tr(Q Q^T) Q = 0
  const Mat3 cubic = 2.0 * est.Q * est.Q.transpose() * est.Q -
                     (est.Q * est.Q.transpose()).trace() * est.Q;
  EXPECT_LE(cubic.norm(), 1e-12);
  EXPECT_NEAR(est.a_norm, std::sqrt(2.0) / 2.0, 1e-12);
}

TEST(Essential, FrobeniusNormOfEssentialIsRootTwoTimesBaseline) {
  Rng rng(35);
  for (int i = 0; i < 100; ++i) {
    const Vec3 t = testing::random_vec(rng, 5.0);
    const Mat3 q = skew(t) * testing::random_rotation(rng);
    EXPECT_NEAR(std::sqrt(2.0) / 2.0 * vec(q).norm(), t.norm(), 1e-12 * t.norm());
  }
}

TEST(Essential, PureRotationIsAccepted) {
  const Scene s = testing::noiseless_scene(36, 0.0);
  EssentialEstimate est;
  ASSERT_NO_THROW(est = solve_linear(s.correspondences));
  // Three-dimensional nullspace: Q = R [a]x for any a.
  EXPECT_LE(est.system_singular_values(6), 1e-10 * est.system_singular_values(0));
  EXPECT_GT(est.system_singular_values(5), 1e-6 * est.system_singular_values(0));
  EXPECT_NEAR(est.Q.norm(), 1.0, 1e-12);
}

TEST(Essential, IdenticalCorrespondencesAreDegenerate) {
  CorrespondenceSet corr(12, Correspondence{Vec3(0.1, 0.2, 1.0), Vec3(0.15, 0.2, 1.0)});
  try {
    solve_linear(corr);
    FAIL() << "expected DegenerateConfiguration";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateConfiguration);
  }
}

TEST(Essential, ConditionedSolveAgreesOnCleanData) {
  const Scene s = testing::noiseless_scene(37, 0.6);
  SolveOptions opt;
  opt.isotropic_conditioning = true;
  const EssentialEstimate a = solve_linear(s.correspondences);
  const EssentialEstimate b = solve_linear(s.correspondences, opt);
  EXPECT_GE(std::abs(vec(a.Q).dot(vec(b.Q))), 1.0 - 1e-8);
}

TEST(DepthSystem, RowLayout) {
  const CorrespondenceSet corr{Correspondence{Vec3(1, 2, 1), Vec3(0, 0, 1)}};
  const std::vector<double> s{3.0};
  const auto l = build_L_matrix(corr, s);
  Eigen::Matrix<double, 1, 12> expected;
  expected << 1, 2, 1, 3, 2, 4, 2, 6, 1, 2, 1, 3;
  EXPECT_EQ(l.row(0), expected);
}

TEST(DepthSystem, StructuralNullVectorsAndRank) {
  for (int i = 0; i < 100; ++i) {
    const Scene scene = testing::noiseless_scene(2000 + i, 0.5, 12);
    std::vector<double> inv_depth;
    for (const auto& p : scene.points) inv_depth.push_back(1.0 / p.z());
    const auto l = build_L_matrix(scene.correspondences, inv_depth);
    for (const auto& xi : L_null_vectors()) {
      EXPECT_EQ((l * xi).cwiseAbs().maxCoeff(), 0.0);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(l);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k) rank += sv(k) > 1e-10 * sv(0) ? 1 : 0;
    EXPECT_LE(rank, 9);
  }
  const std::vector<double> short_depths{1.0};
  EXPECT_THROW(build_L_matrix(testing::noiseless_scene(1, 0.5, 12).correspondences, short_depths),
               Error);
}

}  // namespace
}  // namespace twoview
