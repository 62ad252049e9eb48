#pragma once

// Internal helpers shared by the decomposition modules.

#include <vector>

#include "dcla/matrix.hpp"

namespace dcla::detail {

/// Index ranges [begin, end) of consecutive values of a descending-sorted
/// sequence, split wherever neighbours differ by more than threshold.
struct Cluster {
  Eigen::Index begin = 0;
  Eigen::Index end = 0;
  double mean = 0.0;
  Eigen::Index size() const { return end - begin; }
};

std::vector<Cluster> cluster_descending(const Eigen::VectorXd& values, double threshold);

/// Minimum-norm least-squares solution of m x = rhs, treating singular
/// values of m at or below rank_cut as zero.
CMatrix solve_min_norm(const CMatrix& m, const CMatrix& rhs, double rank_cut);

/// Orthonormal basis of the null space of m (singular values <= cut).
CMatrix null_space(const CMatrix& m, double cut);

/// Projector onto the orthogonal complement of range(m).
CMatrix left_null_projector(const CMatrix& m, double cut);

/// Rotates v so its first entry with magnitude above 1e-8 * |v| is real
/// positive.
CVector fix_phase(const CVector& v);

inline double spectral_norm_estimate(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().colwise().sum().maxCoeff();
}

}  // namespace dcla::detail
