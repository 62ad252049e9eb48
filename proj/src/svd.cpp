#include "dcla/svd.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dcla/error.hpp"
#include "dcla/herm_spectral.hpp"
#include "spectral_detail.hpp"

namespace dcla {

namespace {

// Complex unitary acting on the trailing block: blockdiag(I_lead, tail).
DCMatrix embed_trailing(Eigen::Index lead, const CMatrix& tail) {
  const auto n = lead + tail.rows();
  CMatrix full = CMatrix::Identity(n, n);
  full.bottomRightCorner(tail.rows(), tail.cols()) = tail;
  return DCMatrix(std::move(full));
}

// Inverse of the block-diagonal Sigma_r:
// (sigma I + N ej)^-1 = I / sigma - N / sigma^2 ej.
DCMatrix sigma_inverse(const std::vector<SingularBlock>& blocks, Eigen::Index r) {
  DCMatrix inv(r, r);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    inv.standard()(at, at) = 1.0 / b.sigma;
    if (b.paired()) {
      inv.standard()(at + 1, at + 1) = 1.0 / b.sigma;
      inv.infinitesimal()(at, at + 1) = -b.nu / (b.sigma * b.sigma);
      inv.infinitesimal()(at + 1, at) = b.nu / (b.sigma * b.sigma);
    }
    at += b.dimension();
  }
  return inv;
}

// Extends the orthonormal dual complex columns U1 = X1 + Y1 ej to a square
// unitary. X2 completes X1 over C; Y2 = X1 Y1^T conj(X2) makes
// U_st^* U_I symmetric, which is the dual part of U* U = I.
DCMatrix complete_unitary(const DCMatrix& u1) {
  const auto m = u1.rows();
  const auto r = u1.cols();
  const CMatrix& x1 = u1.standard();
  const CMatrix& y1 = u1.infinitesimal();
  CMatrix x2;
  if (r == 0) {
    x2 = CMatrix::Identity(m, m);
  } else {
    Eigen::HouseholderQR<CMatrix> qr(x1);
    const CMatrix q = qr.householderQ() * CMatrix::Identity(m, m);
    x2 = q.rightCols(m - r);
  }
  const CMatrix y2 = x1 * y1.transpose() * x2.conjugate();
  DCMatrix u(m, m);
  u.standard() << x1, x2;
  u.infinitesimal() << y1, y2;
  return u;
}

// m >= n.
SvdResult svd_tall(const DCMatrix& a, const Tolerances& tol) {
  const auto m = a.rows();
  const auto n = a.cols();
  SvdResult res;

  Eigen::JacobiSVD<CMatrix> st_svd(a.standard(), Eigen::ComputeFullV);
  const Eigen::VectorXd sv = st_svd.singularValues();
  const double smax = sv.size() ? sv[0] : 0.0;
  Eigen::Index r = 0;
  while (r < sv.size() && smax > 0.0 && sv[r] > tol.zero_tol * smax) ++r;

  // Eigensystem of (A* A)_st = A_st^* A_st, with the zero block exact.
  Eigen::VectorXd d = Eigen::VectorXd::Zero(n);
  for (Eigen::Index i = 0; i < r; ++i) d[i] = sv[i] * sv[i];
  const double threshold = tol.group_tol * (1.0 + (n ? d[0] : 0.0));
  if (r > 0 && r < n && d[r - 1] < 10.0 * threshold) {
    throw Error(ErrorCode::IllConditionedGap,
                "smallest standard singular value is too close to zero to separate");
  }

  DCMatrix gram = conj_transpose(a) * a;
  gram.standard() = (0.5 * (gram.standard() + gram.standard().adjoint())).eval();
  gram.infinitesimal() = (0.5 * (gram.infinitesimal() - gram.infinitesimal().transpose())).eval();
  const SpectralDecomposition spec = detail::spectral_from_eigensystem(gram, d, st_svd.matrixV(), tol);

  Eigen::Index dim = 0;
  for (const auto& b : spec.blocks) {
    if (dim >= r) break;
    const double sigma = std::sqrt(b.lambda);
    res.standard_blocks.push_back(
        {sigma, b.kind == BlockKind::Sub ? b.mu / (2.0 * sigma) : cdouble{}});
    dim += b.dimension();
  }
  res.standard_rank = r;

  const DCMatrix& v_prime = spec.U;
  const DCMatrix u1 = a * v_prime.block(0, 0, n, r) * sigma_inverse(res.standard_blocks, r);
  const DCMatrix u_prime = complete_unitary(u1);

  CMatrix g_left = CMatrix::Identity(m - r, m - r);
  CMatrix g_right = CMatrix::Identity(n - r, n - r);
  if (m > r && n > r) {
    const DCMatrix tail =
        conj_transpose(u_prime.block(0, r, m, m - r)) * a * v_prime.block(0, r, n, n - r);
    Eigen::JacobiSVD<CMatrix> g_svd(tail.infinitesimal(), Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& gs = g_svd.singularValues();
    const double cut = tol.zero_tol * std::max(1.0, gs.size() ? gs[0] : 0.0);
    for (Eigen::Index i = 0; i < gs.size() && gs[i] > cut; ++i) res.infinitesimal_values.push_back(gs[i]);
    g_left = g_svd.matrixU();
    g_right = g_svd.matrixV().conjugate();
  }
  res.infinitesimal_rank = static_cast<Eigen::Index>(res.infinitesimal_values.size());
  res.U = u_prime * embed_trailing(r, g_left);
  res.V = v_prime * embed_trailing(r, g_right);
  return res;
}

}  // namespace

SvdResult dc_svd(const DCMatrix& a, const Tolerances& tol) {
  tol.validate();
  if (a.rows() >= a.cols()) return svd_tall(a, tol);

  // (U* A* V)* = V* A U, whose infinitesimal diagonal block is -D ej;
  // flipping the sign of those columns of V restores +D ej.
  SvdResult t = svd_tall(conj_transpose(a), tol);
  SvdResult res;
  res.U = std::move(t.V);
  res.V = std::move(t.U);
  res.standard_blocks = std::move(t.standard_blocks);
  res.infinitesimal_values = std::move(t.infinitesimal_values);
  res.standard_rank = t.standard_rank;
  res.infinitesimal_rank = t.infinitesimal_rank;
  for (Eigen::Index k = 0; k < res.infinitesimal_rank; ++k) {
    const auto c = res.standard_rank + k;
    res.V.standard().col(c) *= -1.0;
    res.V.infinitesimal().col(c) *= -1.0;
  }
  return res;
}

Eigen::Index standard_rank(const DCMatrix& a, const Tolerances& tol) {
  if (a.standard().size() == 0) return 0;
  Eigen::JacobiSVD<CMatrix> svd(a.standard());
  const auto& sv = svd.singularValues();
  const double smax = sv[0];
  if (!(smax > 0.0)) return 0;
  return (sv.array() > tol.zero_tol * smax).count();
}

DCMatrix svd_core(const SvdResult& res, Eigen::Index m, Eigen::Index n) {
  DCMatrix core(m, n);
  Eigen::Index at = 0;
  for (const auto& b : res.standard_blocks) {
    core.standard()(at, at) = b.sigma;
    if (b.paired()) {
      core.standard()(at + 1, at + 1) = b.sigma;
      core.infinitesimal()(at, at + 1) = b.nu;
      core.infinitesimal()(at + 1, at) = -b.nu;
    }
    at += b.dimension();
  }
  for (double v : res.infinitesimal_values) {
    core.infinitesimal()(at, at) = v;
    ++at;
  }
  return core;
}

ResidualPair verify_svd(const DCMatrix& a, const SvdResult& res, const Tolerances& tol) {
  (void)tol;
  const auto m = a.rows(), n = a.cols();
  if (res.U.rows() != m || res.U.cols() != m || res.V.rows() != n || res.V.cols() != n) {
    throw Error(ErrorCode::ShapeMismatch, "verify_svd: factor shapes do not match the matrix");
  }
  Eigen::Index dims = 0;
  for (const auto& b : res.standard_blocks) dims += b.dimension();
  if (dims + static_cast<Eigen::Index>(res.infinitesimal_values.size()) > std::min(m, n)) {
    throw Error(ErrorCode::ShapeMismatch, "verify_svd: more singular values than min(m, n)");
  }
  const ResidualPair core = residual(conj_transpose(res.U) * a * res.V, svd_core(res, m, n));
  const ResidualPair uu = residual(conj_transpose(res.U) * res.U, DCMatrix::identity(m));
  const ResidualPair vv = residual(conj_transpose(res.V) * res.V, DCMatrix::identity(n));
  return {std::max({core.standard, uu.standard, vv.standard}),
          std::max({core.infinitesimal, uu.infinitesimal, vv.infinitesimal})};
}

}  // namespace dcla
