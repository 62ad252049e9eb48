#pragma once

#include "dcla/herm_spectral.hpp"

namespace dcla::detail {

/// herm_spectral with the eigensystem of A_st supplied by the caller:
/// eigenvalues in descending order, matching orthonormal eigenvector columns.
/// A must already be Hermitian.
SpectralDecomposition spectral_from_eigensystem(const DCMatrix& a, const Eigen::VectorXd& eigenvalues,
                                                const CMatrix& eigenvectors, const Tolerances& tol);

/// youla_skew with explicit cutoffs: singular values <= pair_cut are null,
/// the congruence residual must stay within verify_tol.
YoulaForm youla_with_cut(const CMatrix& c, double pair_cut, double verify_tol);

}  // namespace dcla::detail
