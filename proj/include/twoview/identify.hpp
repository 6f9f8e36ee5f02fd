#pragma once

// Pose identification without triangulation.
//
// Same-side inequality, per point:     m1(R) = X'^T Q Q^T R X > 0
// Intersection inequality, per point:  m2(t) = ||X|| X'^T e - ||X'|| X^T R^T e > 0
//
// The right rotation collects the most positive m1 entries and the right
// translation the most positive m2 entries. m1(R1) = -m1(R2) and m2 does not
// depend on which of the paired rotations is used.

#include <array>
#include <span>
#include <vector>

#include <Eigen/SVD>

#include "twoview/algebra.hpp"
#include "twoview/camera.hpp"
#include "twoview/decompose.hpp"
#include "twoview/essential.hpp"
#include "twoview/reconstruct.hpp"

namespace twoview {

enum class IdentificationMethod { kPpo, kCheirality };

struct IdentificationResult {
  PoseCandidate chosen;
  int chosen_index = 0;       // into PoseCandidateSet::candidates
  int rotation_index = 0;     // 0 -> R1, 1 -> R2
  int translation_index = 0;  // 0 -> t1, 1 -> t2
  std::array<int, 2> s1{};    // positive m1 entries per rotation
  std::array<int, 2> s2{};    // positive m2 entries per translation
  std::array<double, 2> m1_margin{};
  std::array<double, 2> m2_margin{};
  std::array<int, 4> candidate_votes{};  // cheirality: points in front of both views
  IdentificationMethod method = IdentificationMethod::kPpo;
};

// Row-wise (X^T kron X'^T) vec(Q Q^T R); `a` is the constraint matrix already
// used for the linear solve.
inline VecX same_side_values(const Mat3& q, const Mat3& r,
                             const ConstraintMatrix& a) {
  return a * vec(Mat3(q * q.transpose() * r));
}

inline VecX same_side_values(const Mat3& q, const Mat3& r,
                             std::span<const Correspondence> corr) {
  return same_side_values(q, r, build_constraint_matrix(corr, false));
}

// Direct evaluation, kept separate from the Kronecker route.
inline VecX same_side_values_direct(const Mat3& q, const Mat3& r,
                                    std::span<const Correspondence> corr) {
  const Mat3 qqr = q * q.transpose() * r;
  VecX out(static_cast<Eigen::Index>(corr.size()));
  for (std::size_t i = 0; i < corr.size(); ++i) {
    out(static_cast<Eigen::Index>(i)) = corr[i].right.dot(qqr * corr[i].left);
  }
  return out;
}

inline double intersection_value(const Mat3& r, const Vec3& e,
                                 const Correspondence& c) {
  return c.left.norm() * c.right.dot(e) -
         c.right.norm() * c.left.dot(r.transpose() * e);
}

inline VecX intersection_values(const Mat3& r, const Vec3& t_dir,
                                std::span<const Correspondence> corr) {
  const Vec3 rte = r.transpose() * t_dir;
  VecX out(static_cast<Eigen::Index>(corr.size()));
  for (std::size_t i = 0; i < corr.size(); ++i) {
    const auto& c = corr[i];
    out(static_cast<Eigen::Index>(i)) =
        c.left.norm() * c.right.dot(t_dir) - c.right.norm() * c.left.dot(rte);
  }
  return out;
}

namespace detail {

inline int count_positive(const VecX& v) {
  return static_cast<int>((v.array() > 0.0).count());
}

// Larger count wins, then larger margin, then the first index.
inline int pick(const std::array<int, 2>& votes,
                const std::array<double, 2>& margins) {
  if (votes[1] != votes[0]) return votes[1] > votes[0] ? 1 : 0;
  return margins[1] > margins[0] ? 1 : 0;
}

}  // namespace detail

inline IdentificationResult identify(const PoseCandidateSet& candidates,
                                     const Mat3& q,
                                     std::span<const Correspondence> corr,
                                     const ConstraintMatrix& a) {
  IdentificationResult out;
  out.method = IdentificationMethod::kPpo;
  for (int k = 0; k < 2; ++k) {
    const VecX m1 = same_side_values(q, candidates.rotation(k), a);
    out.s1[k] = detail::count_positive(m1);
    out.m1_margin[k] = m1.sum();
  }
  out.rotation_index = detail::pick(out.s1, out.m1_margin);
  const Mat3& r = candidates.rotation(out.rotation_index);
  for (int k = 0; k < 2; ++k) {
    const VecX m2 = intersection_values(r, candidates.translation(k), corr);
    out.s2[k] = detail::count_positive(m2);
    out.m2_margin[k] = m2.sum();
  }
  out.translation_index = detail::pick(out.s2, out.m2_margin);
  out.chosen_index = candidate_index(out.rotation_index, out.translation_index);
  out.chosen = candidates.candidates[out.chosen_index];
  return out;
}

inline IdentificationResult identify(const PoseCandidateSet& candidates,
                                     const Mat3& q,
                                     std::span<const Correspondence> corr) {
  return identify(candidates, q, corr, build_constraint_matrix(corr, false));
}

// Traditional baseline: triangulate under every candidate and keep the one
// with the most points in front of both cameras.
inline IdentificationResult cheirality_identify(
    const PoseCandidateSet& candidates, std::span<const Correspondence> corr) {
  IdentificationResult out;
  out.method = IdentificationMethod::kCheirality;
  int best = 0;
  for (int k = 0; k < 4; ++k) {
    const auto& cand = candidates.candidates[k];
    int count = 0;
    for (const auto& c : corr) {
      const ReconstructedPoint p = dlt_point(cand.R, cand.t_dir, c);
      if (p.valid && p.depth_left > 0.0 && p.depth_right > 0.0) ++count;
    }
    out.candidate_votes[k] = count;
    if (count > out.candidate_votes[best]) best = k;
  }
  out.chosen_index = best;
  out.rotation_index = best % 2;
  out.translation_index = best / 2;
  out.chosen = candidates.candidates[best];
  return out;
}

struct PpoResiduals {
  std::vector<double> same_side;
  std::vector<double> intersection;
  std::vector<double> ordering_violation;  // max(0, -(||X|| X'^T e + X'^T R X))
  double coplanarity_rank_gap = 0.0;       // sigma3 / sigma2 of [X'_i x R X_i]
};

inline PpoResiduals ppo_residuals(const Mat3& r, const Vec3& e,
                                  std::span<const Correspondence> corr) {
  PpoResiduals out;
  out.same_side.reserve(corr.size());
  out.intersection.reserve(corr.size());
  out.ordering_violation.reserve(corr.size());
  Eigen::Matrix<double, Eigen::Dynamic, 3> b(
      static_cast<Eigen::Index>(corr.size()), 3);
  for (std::size_t i = 0; i < corr.size(); ++i) {
    const Vec3& x = corr[i].left;
    const Vec3& xp = corr[i].right;
    const Vec3 rx = r * x;

    const Vec3 ex = cross(e, rx);
    const Vec3 exp = cross(e, xp);
    const double nx = ex.norm();
    const double nxp = exp.norm();
    out.same_side.push_back(nx < 1e-12 || nxp < 1e-12
                                ? 0.0
                                : (ex / nx - exp / nxp).norm());

    const Vec3 bi = cross(xp, rx);
    const double lhs = cross(xp, e).norm() * bi.norm();
    const double rhs = xp.dot(rx) * xp.dot(e) - xp.squaredNorm() * rx.dot(e);
    out.intersection.push_back(std::abs(lhs - rhs));
    out.ordering_violation.push_back(
        std::max(0.0, -(x.norm() * xp.dot(e) + xp.dot(rx))));

    b.row(static_cast<Eigen::Index>(i)) = bi.transpose();
  }
  if (corr.size() >= 3) {
    Eigen::JacobiSVD<Eigen::Matrix<double, Eigen::Dynamic, 3>> svd(b);
    const Vec3 s = svd.singularValues();
    out.coplanarity_rank_gap = s(1) > 0.0 ? s(2) / s(1) : 0.0;
  }
  return out;
}

}  // namespace twoview
