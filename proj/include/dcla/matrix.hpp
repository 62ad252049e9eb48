#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string_view>

#include "dcla/dual_complex.hpp"

namespace dcla {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Dense dual complex matrix A = A_st + A_I (epsilon j), stored as two
/// complex matrices of identical shape. Vectors are n x 1 matrices.
class DCMatrix {
 public:
  DCMatrix() = default;
  DCMatrix(Eigen::Index rows, Eigen::Index cols);
  /// Throws ShapeMismatch when the two parts differ in shape.
  DCMatrix(CMatrix standard, CMatrix infinitesimal);
  /// Purely standard matrix (zero infinitesimal part).
  explicit DCMatrix(CMatrix standard);

  static DCMatrix zero(Eigen::Index rows, Eigen::Index cols) { return {rows, cols}; }
  static DCMatrix identity(Eigen::Index n);

  Eigen::Index rows() const noexcept { return st_.rows(); }
  Eigen::Index cols() const noexcept { return st_.cols(); }
  bool is_square() const noexcept { return rows() == cols(); }

  const CMatrix& standard() const noexcept { return st_; }
  const CMatrix& infinitesimal() const noexcept { return inf_; }
  CMatrix& standard() noexcept { return st_; }
  CMatrix& infinitesimal() noexcept { return inf_; }

  DualComplex operator()(Eigen::Index i, Eigen::Index j) const { return {st_(i, j), inf_(i, j)}; }
  void set(Eigen::Index i, Eigen::Index j, const DualComplex& v) {
    st_(i, j) = v.standard;
    inf_(i, j) = v.infinitesimal;
  }

  DCMatrix col(Eigen::Index j) const;
  DCMatrix block(Eigen::Index i, Eigen::Index j, Eigen::Index rows, Eigen::Index cols) const;
  void set_block(Eigen::Index i, Eigen::Index j, const DCMatrix& b);

 private:
  CMatrix st_;
  CMatrix inf_;
};

/// Pair of Frobenius norms (standard part, infinitesimal part). The dual
/// complex Frobenius norm ignores infinitesimal magnitudes, so residuals
/// are always reported as this pair.
struct ResidualPair {
  double standard = 0.0;
  double infinitesimal = 0.0;

  double max() const noexcept { return standard > infinitesimal ? standard : infinitesimal; }
  bool within(double tol) const noexcept { return standard <= tol && infinitesimal <= tol; }
};

ResidualPair components(const DCMatrix& a);
ResidualPair residual(const DCMatrix& a, const DCMatrix& b);

DCMatrix operator+(const DCMatrix& a, const DCMatrix& b);
DCMatrix operator-(const DCMatrix& a, const DCMatrix& b);
DCMatrix operator-(const DCMatrix& a);

/// Dual complex product through the dispatched kernel.
/// AB = A_st B_st + (A_st B_I + A_I conj(B_st)) ej. Throws ShapeMismatch.
DCMatrix operator*(const DCMatrix& a, const DCMatrix& b);

/// a * q with the scalar on the right (x lambda).
DCMatrix mul_right(const DCMatrix& a, const DualComplex& q);
/// q * a with the scalar on the left.
DCMatrix mul_left(const DualComplex& q, const DCMatrix& a);

/// A* = conj(A_st)^T - A_I^T ej.
DCMatrix conj_transpose(const DCMatrix& a);
/// Plain transpose; note (AB)^T != B^T A^T in general.
DCMatrix transpose(const DCMatrix& a);

/// sqrt(sum |a_ij|^2), which equals the complex Frobenius norm of A_st.
double frobenius_norm(const DCMatrix& a);

/// X^-1 - X^-1 Y conj(X^-1) ej for A = X + Y ej.
/// Throws SingularStandardPart when X is numerically singular.
DCMatrix inverse(const DCMatrix& a);

/// A_st Hermitian and A_I skew-symmetric, each to resid_tol in Frobenius norm.
bool is_hermitian(const DCMatrix& a, const Tolerances& tol);

/// U_st unitary and U_st^* U_I complex symmetric, each to resid_tol.
bool is_unitary(const DCMatrix& u, const Tolerances& tol);

/// x* y for column vectors of equal length.
DualComplex inner(const DCMatrix& x, const DCMatrix& y);

/// sqrt(x* x); always real and equal to the norm of x_st.
double vector_norm(const DCMatrix& x);

enum class RandomKind { General, Hermitian, Unitary, Psd };

RandomKind parse_random_kind(std::string_view name);
std::string_view to_string(RandomKind kind) noexcept;

/// Deterministic random matrix for a fixed seed.
///  General:   Gaussian standard and infinitesimal parts.
///  Hermitian: Hermitian A_st, skew-symmetric A_I.
///  Unitary:   W + W S ej with W complex unitary (QR of a Gaussian matrix)
///             and S complex symmetric.
///  Psd:       B* B for a General B.
/// Structured kinds require m == n (ShapeMismatch otherwise).
DCMatrix gen_random(RandomKind kind, Eigen::Index m, Eigen::Index n, std::uint64_t seed);

/// Random complex unitary matrix (QR of a Gaussian matrix with the phases of
/// R's diagonal absorbed).
CMatrix random_complex_unitary(Eigen::Index n, std::uint64_t seed);

}  // namespace dcla
