#include "numeric_detail.hpp"

#include <cmath>

namespace dcla::detail {

std::vector<Cluster> cluster_descending(const Eigen::VectorXd& values, double threshold) {
  std::vector<Cluster> out;
  const auto n = values.size();
  Eigen::Index begin = 0;
  for (Eigen::Index i = 1; i <= n; ++i) {
    if (i == n || values[i - 1] - values[i] > threshold) {
      out.push_back({begin, i, values.segment(begin, i - begin).mean()});
      begin = i;
    }
  }
  return out;
}

CMatrix solve_min_norm(const CMatrix& m, const CMatrix& rhs, double rank_cut) {
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  CMatrix utb = svd.matrixU().adjoint() * rhs;
  CMatrix y = CMatrix::Zero(m.cols(), rhs.cols());
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (sv[k] > rank_cut) y.row(k) = utb.row(k) / sv[k];
  }
  return svd.matrixV() * y;
}

CMatrix null_space(const CMatrix& m, double cut) {
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv[rank] > cut) ++rank;
  return svd.matrixV().rightCols(m.cols() - rank);
}

CMatrix left_null_projector(const CMatrix& m, double cut) {
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullU);
  const auto& sv = svd.singularValues();
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv[rank] > cut) ++rank;
  const CMatrix basis = svd.matrixU().rightCols(m.rows() - rank);
  return basis * basis.adjoint();
}

CVector fix_phase(const CVector& v) {
  const double scale = v.norm();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v[i]);
    if (mag > 1e-8 * scale) return v * (std::conj(v[i]) / mag);
  }
  return v;
}

}  // namespace dcla::detail
