#pragma once

#include <optional>
#include <vector>

#include "dcla/matrix.hpp"

namespace dcla {

/// lambda and an appreciable x with A x = x lambda.
struct RightEigenPair {
  DualComplex value;
  DCMatrix vector;  // n x 1, ||x_st|| = 1
  ResidualPair residual;
  /// Set when lambda_st belongs to a cluster of eigenvalues of a
  /// non-Hermitian A_st; acceptance is then least-squares only.
  bool clustered = false;
};

/// Components of A x - x lambda. Throws NotAppreciable if ||x_st|| <= zero_tol.
ResidualPair verify_eigenpair(const DCMatrix& a, const DualComplex& lambda, const DCMatrix& x,
                              const Tolerances& tol);

/// Complex right eigenvalues (lambda_I = 0). For every eigenvalue cluster of
/// A_st the eigenspace is searched for x_st with
///   A_I conj(x_st) + (A_st - conj(lambda) I) x_I = 0
/// solvable; one pair is returned per independent solvable direction.
/// Acceptance threshold is resid_tol (1 + ||A_I||_F).
std::vector<RightEigenPair> complex_right_eigs(const DCMatrix& a, const Tolerances& tol);

/// Tries to extend one eigenpair (lambda_st, x_st) of A_st to a right
/// eigenpair of A by solving
///   lambda_I x_st = A_I conj(x_st) + (A_st - conj(lambda_st) I) x_I
/// in least squares, with lambda_I fixed first from the part of the right
/// side outside range(A_st - conj(lambda_st) I). x_st is normalised to unit
/// length but its phase is kept. Returns nullopt when inconsistent.
std::optional<RightEigenPair> lift_right_eigenpair(const DCMatrix& a, cdouble lambda_st,
                                                   const CVector& x_st, const Tolerances& tol);

/// Right eigenvalues of A, one representative per eigenvector of an
/// orthonormal eigenspace basis of A_st. Hermitian matrices with clustered
/// A_st are answered from herm_spectral instead (its Eigen-block columns).
std::vector<RightEigenPair> dual_right_eigs(const DCMatrix& a, const Tolerances& tol);

/// Minimum-norm x_I with A_I conj(x_st) = (lambda I - A_st) x_I for a simple
/// eigenvalue lambda of the Hermitian A_st. Throws Inconsistent when the
/// residual exceeds resid_tol (1 + ||A_I||_F) and NotHermitian.
CVector simple_eig_lift(const DCMatrix& a, double lambda, const CVector& x_st, const Tolerances& tol);

}  // namespace dcla
