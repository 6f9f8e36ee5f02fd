#pragma once

// Complete pose decomposition of a linear essential solution.
//
// With Q = U diag(s, s, 0) V^T and the sign of U's third column chosen so
// that det(U V) = +1, the valid rotations are U W1^T V^T and U W2^T V^T and
// the translation direction is +-u3. Candidates are emitted in the fixed
// order [R1|t1], [R2|t1], [R1|t2], [R2|t2].

#include <array>

#include "twoview/algebra.hpp"
#include "twoview/essential.hpp"

namespace twoview {

struct PoseCandidate {
  Mat3 R = Mat3::Identity();
  Vec3 t_dir = Vec3::UnitZ();
};

struct PoseCandidateSet {
  std::array<PoseCandidate, 4> candidates;
  Mat3 W1;
  Mat3 W2;
  Mat3 U;  // sign-normalized
  Mat3 V;
  bool flipped_u3 = false;  // true when U's third column was negated

  const Mat3& rotation(int which) const { return candidates[which].R; }
  const Vec3& translation(int which) const {
    return candidates[2 * which].t_dir;
  }
};

inline Mat3 w_matrix(int which) {
  Mat3 w;
  switch (which) {
    case 1: w << 0, -1, 0, 1, 0, 0, 0, 0, 1; break;
    case 2: w << 0, 1, 0, -1, 0, 0, 0, 0, 1; break;
    case 3: w << 0, -1, 0, 1, 0, 0, 0, 0, -1; break;
    case 4: w << 0, 1, 0, -1, 0, 0, 0, 0, -1; break;
    default: throw Error(ErrorCode::kDimensionMismatch, "W index is 1..4");
  }
  return w;
}

// Index of the candidate holding rotation r (0 or 1) and translation t (0 or 1).
constexpr int candidate_index(int rotation, int translation) {
  return 2 * translation + rotation;
}

inline PoseCandidateSet decompose(const SingularDecomposition3& svd) {
  if (!(svd.sigma(1) > 1e-12 * svd.sigma(0))) {
    throw Error(ErrorCode::kRankDeficientEssential,
                "essential estimate has rank below 2");
  }
  PoseCandidateSet out;
  out.U = svd.U;
  out.V = svd.V;
  if (out.U.determinant() * out.V.determinant() < 0.0) {
    out.U.col(2) = -out.U.col(2);
    out.flipped_u3 = true;
  }
  out.W1 = w_matrix(1);
  out.W2 = w_matrix(2);
  const Mat3 r1 = out.U * out.W1.transpose() * out.V.transpose();
  const Mat3 r2 = out.U * out.W2.transpose() * out.V.transpose();
  const Vec3 t1 = out.U.col(2).normalized();
  const Vec3 t2 = -t1;
  out.candidates[candidate_index(0, 0)] = {r1, t1};
  out.candidates[candidate_index(1, 0)] = {r2, t1};
  out.candidates[candidate_index(0, 1)] = {r1, t2};
  out.candidates[candidate_index(1, 1)] = {r2, t2};
  return out;
}

inline PoseCandidateSet decompose(const EssentialEstimate& est) {
  return decompose(est.svd);
}

}  // namespace twoview
