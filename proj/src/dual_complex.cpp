#include "dcla/dual_complex.hpp"

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <string>

#include "dcla/error.hpp"

namespace dcla {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotAppreciable: return "NotAppreciable";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::SingularStandardPart: return "SingularStandardPart";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::NotSkewSymmetric: return "NotSkewSymmetric";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::BadEigenspace: return "BadEigenspace";
    case ErrorCode::UnknownEigenvalue: return "UnknownEigenvalue";
    case ErrorCode::IllConditionedGap: return "IllConditionedGap";
    case ErrorCode::ResidualExceeded: return "ResidualExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

void Tolerances::validate() const {
  for (double v : {group_tol, resid_tol, zero_tol}) {
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(ErrorCode::InvalidArgument, "tolerances must be finite and nonnegative");
    }
  }
}

DualComplex inverse(const DualComplex& q, double zero_tol) {
  const double mag2 = std::norm(q.standard);
  if (!(std::sqrt(mag2) > zero_tol) || mag2 == 0.0) {
    throw Error(ErrorCode::NotAppreciable, "inverse of an infinitesimal dual complex number");
  }
  return (1.0 / mag2) * conj(q);
}

namespace {

Eigen::Vector4d coords(const DualComplex& q) {
  return {q.standard.real(), q.standard.imag(), q.infinitesimal.real(), q.infinitesimal.imag()};
}

DualComplex from_coords(const Eigen::Vector4d& v) { return DualComplex::from_real4(v[0], v[1], v[2], v[3]); }

}  // namespace

std::optional<DualComplex> find_similarity(const DualComplex& p, const DualComplex& q, double null_tol) {
  static const std::array<DualComplex, 4> basis = {
      DualComplex::from_real4(1, 0, 0, 0), DualComplex::from_real4(0, 1, 0, 0),
      DualComplex::from_real4(0, 0, 1, 0), DualComplex::from_real4(0, 0, 0, 1)};

  // Column c holds the coordinates of p e_c - e_c q.
  Eigen::Matrix4d T;
  for (int c = 0; c < 4; ++c) T.col(c) = coords(p * basis[c] - basis[c] * q);

  const double scale = std::max(1.0, T.norm());
  if (T.col(0).norm() <= null_tol * scale) return DualComplex(1.0);

  Eigen::JacobiSVD<Eigen::Matrix4d> svd(T, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  int rank = 0;
  while (rank < 4 && sv[rank] > null_tol * scale) ++rank;
  if (rank == 4) return std::nullopt;

  const Eigen::MatrixXd null_basis = svd.matrixV().rightCols(4 - rank);
  const Eigen::MatrixXd standard_rows = null_basis.topRows(2);
  Eigen::JacobiSVD<Eigen::MatrixXd> inner(standard_rows, Eigen::ComputeFullV);
  const double top = inner.singularValues()[0];
  if (top <= null_tol) return std::nullopt;

  Eigen::Vector4d u = null_basis * (inner.matrixV().col(0) / top);
  if (u[0] < -null_tol || (std::abs(u[0]) <= null_tol && u[1] < 0.0)) u = -u;
  return from_coords(u);
}

}  // namespace dcla
