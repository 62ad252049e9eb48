#pragma once

#include <vector>

#include "dcla/matrix.hpp"

namespace dcla {

enum class BlockKind { Eigen, Sub };

/// One diagonal block of Sigma = U* A U for a Hermitian A:
///   Eigen: the 1x1 block (lambda)
///   Sub:   [[lambda, mu ej], [-mu ej, lambda]] with mu != 0
struct SpectralBlock {
  BlockKind kind = BlockKind::Eigen;
  double lambda = 0.0;
  cdouble mu{};  // zero for Eigen blocks

  Eigen::Index dimension() const noexcept { return kind == BlockKind::Eigen ? 1 : 2; }
};

/// U unitary with U* A U = blockdiag(blocks). Blocks are ordered by
/// descending lambda, Eigen before Sub at equal lambda, Sub by descending
/// |mu|. The columns of U are right eigenvectors (Eigen blocks) and pairs of
/// right subeigenvectors (Sub blocks).
struct SpectralDecomposition {
  DCMatrix U;
  std::vector<SpectralBlock> blocks;
  ResidualPair residual;  // components of U* A U - Sigma
};

/// Unitary transpose-congruence canonical form of a complex skew-symmetric C:
///   Q^T C Q = blockdiag([[0, s1], [-s1, 0]], ..., [[0, sk], [-sk, 0]], 0)
/// with s1 >= ... >= sk > 0 (the nonzero singular values of C, each of even
/// multiplicity). Pairs occupy the leading columns of Q, the null space the
/// trailing null_dim columns.
struct YoulaForm {
  CMatrix Q;
  std::vector<double> pairs;
  Eigen::Index null_dim = 0;
};

/// Throws NotSkewSymmetric when ||C + C^T||_F > resid_tol (1 + ||C||_F).
/// Singular values at or below resid_tol (1 + ||C||_F) go to the null block.
YoulaForm youla_skew(const CMatrix& c, const Tolerances& tol);

/// Block diagonalisation of a dual complex Hermitian matrix.
///
/// A_st = W diag(d) W^* is clustered into exact multiple eigenvalues; the
/// off-cluster part of C = W^* A_I conj(W) is removed by the unitary
/// correction I - K ej with K_ab = C_ab / (d_a - d_b); each cluster's
/// diagonal block lambda I + C_cc ej is then brought to canonical form by
/// youla_skew(C_cc).
///
/// Errors: NotHermitian; IllConditionedGap when two clusters are closer than
/// 10 group_tol (1 + ||A_st||_2); ResidualExceeded when the reconstruction
/// misses resid_tol (1 + ||A||_F).
SpectralDecomposition herm_spectral(const DCMatrix& a, const Tolerances& tol);

/// Sigma assembled from a block list.
DCMatrix assemble_blocks(const std::vector<SpectralBlock>& blocks);

/// Componentwise max of the residuals of U* A U - Sigma and U* U - I.
ResidualPair verify_spectral(const DCMatrix& a, const SpectralDecomposition& decomp);

/// Residual of A x = x lambda + y mu ej and A y = y lambda - x mu ej; the
/// larger component pair of the two equations. Throws NotAppreciable when
/// x or y has ||st|| <= zero_tol and NotOrthogonal when either component of
/// x* y exceeds resid_tol.
ResidualPair verify_subeigenpair(const DCMatrix& a, double lambda, cdouble mu, const DCMatrix& x,
                                 const DCMatrix& y, const Tolerances& tol);

enum class DoubleKind { DoubleEigen, DoubleSub };

struct DoubleEigVerdict {
  DoubleKind kind = DoubleKind::DoubleEigen;
  double lambda = 0.0;
  cdouble mu{};      // y_st^* A_I conj(x_st)
  CVector x_inf;     // solves (lambda I - A_st) x_I = A_I conj(x_st) - mu y_st
  CVector y_inf;     // solves (lambda I - A_st) y_I = A_I conj(y_st) + mu x_st
};

/// Classifies a double eigenvalue of A_st from an orthonormal basis
/// {x_st, y_st} of its eigenspace. DoubleEigen when |mu| <=
/// resid_tol (1 + ||A_I||_F). Throws BadEigenspace when the basis is not
/// orthonormal, not an eigenspace, or the eigenvalue is not exactly double.
DoubleEigVerdict double_eig_classify(const DCMatrix& a, const CVector& x_st, const CVector& y_st,
                                     const Tolerances& tol);

/// p = total block dimension at lambda, k = number of Sub blocks there.
struct Multiplicity {
  Eigen::Index p = 0;
  Eigen::Index k = 0;
};

/// Throws UnknownEigenvalue when no block matches lambda within
/// group_tol (1 + max |block lambda|).
Multiplicity classify_multiplicity(const SpectralDecomposition& decomp, double lambda,
                                   const Tolerances& tol);

/// Every block lambda >= -resid_tol. Throws NotHermitian.
bool is_psd(const DCMatrix& a, const Tolerances& tol);
/// Every block lambda > resid_tol. Throws NotHermitian.
bool is_pd(const DCMatrix& a, const Tolerances& tol);

}  // namespace dcla
