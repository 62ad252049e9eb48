#pragma once

#include <vector>

#include "dcla/matrix.hpp"

namespace dcla {

/// One block of the standard singular part:
///   (sigma)                                 when nu == 0
///   [[sigma, nu ej], [-nu ej, sigma]]       otherwise
struct SingularBlock {
  double sigma = 0.0;
  cdouble nu{};

  bool paired() const noexcept { return nu != cdouble{}; }
  Eigen::Index dimension() const noexcept { return paired() ? 2 : 1; }
};

/// U* A V = [[Sigma_r, 0, 0], [0, D ej, 0], [0, 0, 0]] with Sigma_r assembled
/// from standard_blocks (dimension r) and D = diag(infinitesimal_values)
/// (dimension p).
struct SvdResult {
  DCMatrix U;  // m x m
  DCMatrix V;  // n x n
  std::vector<SingularBlock> standard_blocks;
  std::vector<double> infinitesimal_values;
  Eigen::Index standard_rank = 0;
  Eigen::Index infinitesimal_rank = 0;
};

/// Singular value decomposition of a general dual complex matrix.
///
/// The right factor comes from the Hermitian block decomposition of A* A
/// (its eigensystem taken from the complex SVD of A_st, which is the same
/// eigensystem computed without squaring the condition number). A Sub
/// block (sigma^2, mu) of A* A becomes the block (sigma, mu / (2 sigma)).
/// The left factor is A V1 Sigma_r^-1, completed to a dual complex unitary,
/// and the remaining infinitesimal block G is split by a complex SVD.
/// Standard singular values at or below zero_tol * sigma_max are zero;
/// infinitesimal ones at or below zero_tol * max(1, sigma_max(G)) are zero.
/// For m < n the decomposition of A* is transposed back.
///
/// Errors: IllConditionedGap and ResidualExceeded from the spectral step.
SvdResult dc_svd(const DCMatrix& a, const Tolerances& tol);

/// Count of singular values of A_st above zero_tol * sigma_max.
Eigen::Index standard_rank(const DCMatrix& a, const Tolerances& tol);

/// The block matrix U* A V should equal, of shape m x n.
DCMatrix svd_core(const SvdResult& res, Eigen::Index m, Eigen::Index n);

/// Componentwise max over U* A V - core, U* U - I and V* V - I.
/// Throws ShapeMismatch.
ResidualPair verify_svd(const DCMatrix& a, const SvdResult& res, const Tolerances& tol);

}  // namespace dcla
