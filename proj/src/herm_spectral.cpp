#include "dcla/herm_spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dcla/error.hpp"
#include "numeric_detail.hpp"
#include "spectral_detail.hpp"

namespace dcla {

namespace detail {

YoulaForm youla_with_cut(const CMatrix& c, double pair_cut, double verify_tol) {
  const auto n = c.rows();
  YoulaForm out;
  out.Q = CMatrix::Zero(n, n);

  // Deflation: take the top singular pair of the skew matrix restricted to
  // the remaining subspace. With C v = s u, the columns v and -conj(u) span
  // a transpose-congruence invariant pair, and q1^T C q' = q2^T C q' = 0 for
  // every q' orthogonal to both.
  CMatrix rest = CMatrix::Identity(n, n);
  Eigen::Index filled = 0;
  while (rest.cols() >= 2) {
    CMatrix local = rest.transpose() * c * rest;
    local = (0.5 * (local - local.transpose())).eval();
    Eigen::JacobiSVD<CMatrix> svd(local, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const double s = svd.singularValues()[0];
    if (s <= pair_cut) break;

    const CVector u1 = svd.matrixV().col(0);
    CVector u2 = -svd.matrixU().col(0).conjugate();
    u2 -= u1 * u1.dot(u2);
    u2.normalize();

    out.Q.col(filled) = rest * u1;
    out.Q.col(filled + 1) = rest * u2;
    filled += 2;
    out.pairs.push_back(s);

    CMatrix pair(local.rows(), 2);
    pair << u1, u2;
    Eigen::HouseholderQR<CMatrix> qr(pair);
    const CMatrix full = qr.householderQ() * CMatrix::Identity(local.rows(), local.rows());
    rest = (rest * full.rightCols(local.rows() - 2)).eval();
  }
  out.null_dim = n - filled;
  out.Q.rightCols(out.null_dim) = rest;

  // Report pairs from the realised congruence; they match the singular
  // values up to rounding.
  const CMatrix form = out.Q.transpose() * c * out.Q;
  CMatrix target = CMatrix::Zero(n, n);
  for (std::size_t k = 0; k < out.pairs.size(); ++k) {
    const auto i = static_cast<Eigen::Index>(2 * k);
    target(i, i + 1) = out.pairs[k];
    target(i + 1, i) = -out.pairs[k];
  }
  const double congruence = (form - target).norm();
  const double orth = (out.Q.adjoint() * out.Q - CMatrix::Identity(n, n)).norm();
  if (congruence > verify_tol || orth > verify_tol) {
    throw Error(ErrorCode::ResidualExceeded,
                "skew-symmetric canonical form failed verification (residual " +
                    std::to_string(std::max(congruence, orth)) + ")");
  }
  return out;
}

SpectralDecomposition spectral_from_eigensystem(const DCMatrix& a, const Eigen::VectorXd& d,
                                                const CMatrix& w, const Tolerances& tol) {
  const auto n = a.rows();
  const double st_norm = d.size() ? d.cwiseAbs().maxCoeff() : 0.0;
  const double threshold = tol.group_tol * (1.0 + st_norm);
  const auto clusters = cluster_descending(d, threshold);

  for (std::size_t c = 0; c + 1 < clusters.size(); ++c) {
    const double gap = d[clusters[c].end - 1] - d[clusters[c + 1].begin];
    if (gap < 10.0 * threshold) {
      throw Error(ErrorCode::IllConditionedGap,
                  "eigenvalue clusters " + std::to_string(clusters[c].mean) + " and " +
                      std::to_string(clusters[c + 1].mean) + " are too close to separate");
    }
  }

  std::vector<Eigen::Index> owner(static_cast<std::size_t>(n));
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    for (auto i = clusters[c].begin; i < clusters[c].end; ++i) owner[static_cast<std::size_t>(i)] = static_cast<Eigen::Index>(c);
  }

  CMatrix coupling = w.adjoint() * a.infinitesimal() * w.conjugate();
  coupling = (0.5 * (coupling - coupling.transpose())).eval();

  // Symmetric correction: its off-cluster entries cancel the coupling
  // between clusters, so the correction I - K ej is unitary.
  CMatrix correction = CMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (owner[static_cast<std::size_t>(i)] != owner[static_cast<std::size_t>(j)]) {
        correction(i, j) = coupling(i, j) / (d[i] - d[j]);
      }
    }
  }

  const double inf_norm = a.infinitesimal().norm();
  const double pair_cut = std::max(tol.resid_tol, tol.zero_tol) * (1.0 + inf_norm);

  SpectralDecomposition out;
  CMatrix rotation = CMatrix::Zero(n, n);
  for (const auto& cl : clusters) {
    const CMatrix block = coupling.block(cl.begin, cl.begin, cl.size(), cl.size());
    const YoulaForm form =
        youla_with_cut(block, pair_cut, tol.resid_tol * (1.0 + block.norm()) + 1e-12);
    const auto paired = cl.size() - form.null_dim;
    // Eigen columns first, then the pairs by descending s.
    CMatrix ordered(cl.size(), cl.size());
    ordered << form.Q.rightCols(form.null_dim), form.Q.leftCols(paired);
    rotation.block(cl.begin, cl.begin, cl.size(), cl.size()) = ordered.conjugate();

    for (Eigen::Index k = 0; k < form.null_dim; ++k) {
      out.blocks.push_back({BlockKind::Eigen, cl.mean, cdouble{}});
    }
    for (double s : form.pairs) out.blocks.push_back({BlockKind::Sub, cl.mean, cdouble{s, 0.0}});
  }

  out.U = DCMatrix(w * rotation, -(w * correction * rotation.conjugate()));
  const DCMatrix sigma = assemble_blocks(out.blocks);
  out.residual = residual(conj_transpose(out.U) * a * out.U, sigma);

  const double bound = tol.resid_tol * (1.0 + frobenius_norm(a) + inf_norm);
  if (!out.residual.within(bound)) {
    throw Error(ErrorCode::ResidualExceeded,
                "spectral reconstruction residual (" + std::to_string(out.residual.standard) + ", " +
                    std::to_string(out.residual.infinitesimal) + ") exceeds tolerance");
  }
  return out;
}

}  // namespace detail

YoulaForm youla_skew(const CMatrix& c, const Tolerances& tol) {
  tol.validate();
  if (c.rows() != c.cols()) throw Error(ErrorCode::ShapeMismatch, "youla_skew: matrix is not square");
  const double scale = 1.0 + c.norm();
  if ((c + c.transpose()).norm() > tol.resid_tol * scale) {
    throw Error(ErrorCode::NotSkewSymmetric, "youla_skew: C + C^T is not zero");
  }
  const CMatrix skew = 0.5 * (c - c.transpose());
  return detail::youla_with_cut(skew, tol.resid_tol * scale, tol.resid_tol * scale);
}

SpectralDecomposition herm_spectral(const DCMatrix& a, const Tolerances& tol) {
  tol.validate();
  if (!a.is_square()) throw Error(ErrorCode::ShapeMismatch, "herm_spectral: matrix is not square");
  if (!is_hermitian(a, tol)) throw Error(ErrorCode::NotHermitian, "herm_spectral: matrix is not Hermitian");

  const DCMatrix sym(0.5 * (a.standard() + a.standard().adjoint()),
                     0.5 * (a.infinitesimal() - a.infinitesimal().transpose()));
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(sym.standard());
  // Descending, ties kept in the solver's order.
  const auto n = a.rows();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return eig.eigenvalues()[i] > eig.eigenvalues()[j]; });
  Eigen::VectorXd d(n);
  CMatrix w(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    d[k] = eig.eigenvalues()[order[static_cast<std::size_t>(k)]];
    w.col(k) = eig.eigenvectors().col(order[static_cast<std::size_t>(k)]);
  }
  return detail::spectral_from_eigensystem(sym, d, w, tol);
}

DCMatrix assemble_blocks(const std::vector<SpectralBlock>& blocks) {
  Eigen::Index n = 0;
  for (const auto& b : blocks) n += b.dimension();
  DCMatrix sigma(n, n);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    sigma.standard()(at, at) = b.lambda;
    if (b.kind == BlockKind::Sub) {
      sigma.standard()(at + 1, at + 1) = b.lambda;
      sigma.infinitesimal()(at, at + 1) = b.mu;
      sigma.infinitesimal()(at + 1, at) = -b.mu;
    }
    at += b.dimension();
  }
  return sigma;
}

ResidualPair verify_spectral(const DCMatrix& a, const SpectralDecomposition& decomp) {
  const DCMatrix sigma = assemble_blocks(decomp.blocks);
  if (decomp.U.rows() != a.rows() || !decomp.U.is_square() || sigma.rows() != a.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "verify_spectral: decomposition does not match the matrix");
  }
  const DCMatrix uh = conj_transpose(decomp.U);
  const ResidualPair recon = residual(uh * a * decomp.U, sigma);
  const ResidualPair unit = residual(uh * decomp.U, DCMatrix::identity(a.rows()));
  return {std::max(recon.standard, unit.standard), std::max(recon.infinitesimal, unit.infinitesimal)};
}

ResidualPair verify_subeigenpair(const DCMatrix& a, double lambda, cdouble mu, const DCMatrix& x,
                                 const DCMatrix& y, const Tolerances& tol) {
  if (!a.is_square() || x.cols() != 1 || y.cols() != 1 || x.rows() != a.rows() || y.rows() != a.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "verify_subeigenpair: shapes do not conform");
  }
  if (!(vector_norm(x) > tol.zero_tol) || !(vector_norm(y) > tol.zero_tol)) {
    throw Error(ErrorCode::NotAppreciable, "subeigenvectors must be appreciable");
  }
  const DualComplex xy = inner(x, y);
  if (std::abs(xy.standard) > tol.resid_tol || std::abs(xy.infinitesimal) > tol.resid_tol) {
    throw Error(ErrorCode::NotOrthogonal, "subeigenvectors must be orthogonal");
  }
  const DualComplex coupling(cdouble{}, mu);
  const DCMatrix r1 = a * x - mul_right(x, lambda) - mul_right(y, coupling);
  const DCMatrix r2 = a * y - mul_right(y, lambda) + mul_right(x, coupling);
  const ResidualPair p1 = components(r1), p2 = components(r2);
  return {std::max(p1.standard, p2.standard), std::max(p1.infinitesimal, p2.infinitesimal)};
}

DoubleEigVerdict double_eig_classify(const DCMatrix& a, const CVector& x_st, const CVector& y_st,
                                     const Tolerances& tol) {
  tol.validate();
  const auto n = a.rows();
  if (!a.is_square() || x_st.size() != n || y_st.size() != n || n < 2) {
    throw Error(ErrorCode::ShapeMismatch, "double_eig_classify: shapes do not conform");
  }
  if (!is_hermitian(a, tol)) throw Error(ErrorCode::NotHermitian, "double_eig_classify: matrix is not Hermitian");

  const CMatrix& st = a.standard();
  const CMatrix& inf = a.infinitesimal();
  if (std::abs(x_st.norm() - 1.0) > tol.resid_tol || std::abs(y_st.norm() - 1.0) > tol.resid_tol ||
      std::abs(x_st.dot(y_st)) > tol.resid_tol) {
    throw Error(ErrorCode::BadEigenspace, "basis is not orthonormal");
  }
  const double lx = x_st.dot(st * x_st).real();
  const double ly = y_st.dot(st * y_st).real();
  const double st_norm = detail::spectral_norm_estimate(st);
  const double threshold = tol.group_tol * (1.0 + st_norm);
  const double eig_defect = std::max((st * x_st - lx * x_st).norm(), (st * y_st - ly * y_st).norm());
  if (eig_defect > threshold || std::abs(lx - ly) > threshold) {
    throw Error(ErrorCode::BadEigenspace, "vectors do not span an eigenspace of the standard part");
  }

  DoubleEigVerdict out;
  out.lambda = 0.5 * (lx + ly);
  const CMatrix shifted = out.lambda * CMatrix::Identity(n, n) - st;
  Eigen::JacobiSVD<CMatrix> svd(shifted);
  const auto& sv = svd.singularValues();
  const auto null_count = (sv.array() <= threshold).count();
  if (null_count != 2) {
    throw Error(ErrorCode::BadEigenspace,
                "eigenvalue has multiplicity " + std::to_string(null_count) + ", expected 2");
  }

  out.mu = y_st.dot(inf * x_st.conjugate());
  out.kind = std::abs(out.mu) <= tol.resid_tol * (1.0 + inf.norm()) ? DoubleKind::DoubleEigen
                                                                     : DoubleKind::DoubleSub;
  const cdouble mu = out.kind == DoubleKind::DoubleSub ? out.mu : cdouble{};
  const CVector rhs_x = inf * x_st.conjugate() - mu * y_st;
  const CVector rhs_y = inf * y_st.conjugate() + mu * x_st;
  out.x_inf = detail::solve_min_norm(shifted, rhs_x, threshold);
  out.y_inf = detail::solve_min_norm(shifted, rhs_y, threshold);
  return out;
}

Multiplicity classify_multiplicity(const SpectralDecomposition& decomp, double lambda, const Tolerances& tol) {
  double scale = 0.0;
  for (const auto& b : decomp.blocks) scale = std::max(scale, std::abs(b.lambda));
  const double threshold = tol.group_tol * (1.0 + scale);
  Multiplicity m;
  for (const auto& b : decomp.blocks) {
    if (std::abs(b.lambda - lambda) <= threshold) {
      m.p += b.dimension();
      if (b.kind == BlockKind::Sub) ++m.k;
    }
  }
  if (m.p == 0) throw Error(ErrorCode::UnknownEigenvalue, "no block at lambda " + std::to_string(lambda));
  return m;
}

bool is_psd(const DCMatrix& a, const Tolerances& tol) {
  const auto decomp = herm_spectral(a, tol);
  return std::all_of(decomp.blocks.begin(), decomp.blocks.end(),
                     [&](const SpectralBlock& b) { return b.lambda >= -tol.resid_tol; });
}

bool is_pd(const DCMatrix& a, const Tolerances& tol) {
  const auto decomp = herm_spectral(a, tol);
  return std::all_of(decomp.blocks.begin(), decomp.blocks.end(),
                     [&](const SpectralBlock& b) { return b.lambda > tol.resid_tol; });
}

}  // namespace dcla
