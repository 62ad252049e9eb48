#include "dcla/matrix.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "dcla/error.hpp"
#include "dcla/kernels.hpp"

namespace dcla {

DCMatrix::DCMatrix(Eigen::Index rows, Eigen::Index cols)
    : st_(CMatrix::Zero(rows, cols)), inf_(CMatrix::Zero(rows, cols)) {}

DCMatrix::DCMatrix(CMatrix standard, CMatrix infinitesimal)
    : st_(std::move(standard)), inf_(std::move(infinitesimal)) {
  if (st_.rows() != inf_.rows() || st_.cols() != inf_.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "standard and infinitesimal parts differ in shape");
  }
}

DCMatrix::DCMatrix(CMatrix standard)
    : st_(std::move(standard)), inf_(CMatrix::Zero(st_.rows(), st_.cols())) {}

DCMatrix DCMatrix::identity(Eigen::Index n) { return DCMatrix(CMatrix::Identity(n, n)); }

DCMatrix DCMatrix::col(Eigen::Index j) const { return {st_.col(j), inf_.col(j)}; }

DCMatrix DCMatrix::block(Eigen::Index i, Eigen::Index j, Eigen::Index r, Eigen::Index c) const {
  return {st_.block(i, j, r, c), inf_.block(i, j, r, c)};
}

void DCMatrix::set_block(Eigen::Index i, Eigen::Index j, const DCMatrix& b) {
  st_.block(i, j, b.rows(), b.cols()) = b.standard();
  inf_.block(i, j, b.rows(), b.cols()) = b.infinitesimal();
}

namespace {

void require_same_shape(const DCMatrix& a, const DCMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::ShapeMismatch, std::string(what) + ": operand shapes differ");
  }
}

void require_square(const DCMatrix& a, const char* what) {
  if (!a.is_square()) throw Error(ErrorCode::ShapeMismatch, std::string(what) + ": matrix is not square");
}

double norm_of(const CMatrix& m) {
  return std::sqrt(kernels::sum_abs2({m.data(), static_cast<std::size_t>(m.size())}));
}

}  // namespace

ResidualPair components(const DCMatrix& a) { return {norm_of(a.standard()), norm_of(a.infinitesimal())}; }

ResidualPair residual(const DCMatrix& a, const DCMatrix& b) { return components(a - b); }

DCMatrix operator+(const DCMatrix& a, const DCMatrix& b) {
  require_same_shape(a, b, "add");
  return {a.standard() + b.standard(), a.infinitesimal() + b.infinitesimal()};
}

DCMatrix operator-(const DCMatrix& a, const DCMatrix& b) {
  require_same_shape(a, b, "subtract");
  return {a.standard() - b.standard(), a.infinitesimal() - b.infinitesimal()};
}

DCMatrix operator-(const DCMatrix& a) { return {-a.standard(), -a.infinitesimal()}; }

DCMatrix operator*(const DCMatrix& a, const DCMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "product: inner dimensions differ (" +
                                              std::to_string(a.cols()) + " vs " +
                                              std::to_string(b.rows()) + ")");
  }
  DCMatrix c(a.rows(), b.cols());
  const auto size = [](const CMatrix& m) { return static_cast<std::size_t>(m.size()); };
  kernels::GemmOperands ops;
  ops.m = static_cast<std::size_t>(a.rows());
  ops.n = static_cast<std::size_t>(b.cols());
  ops.k = static_cast<std::size_t>(a.cols());
  ops.a_st = {a.standard().data(), size(a.standard())};
  ops.a_inf = {a.infinitesimal().data(), size(a.infinitesimal())};
  ops.b_st = {b.standard().data(), size(b.standard())};
  ops.b_inf = {b.infinitesimal().data(), size(b.infinitesimal())};
  ops.c_st = {c.standard().data(), size(c.standard())};
  ops.c_inf = {c.infinitesimal().data(), size(c.infinitesimal())};
  kernels::dc_gemm(ops);
  return c;
}

DCMatrix mul_right(const DCMatrix& a, const DualComplex& q) {
  return {a.standard() * q.standard,
          a.standard() * q.infinitesimal + a.infinitesimal() * std::conj(q.standard)};
}

DCMatrix mul_left(const DualComplex& q, const DCMatrix& a) {
  return {q.standard * a.standard(),
          q.standard * a.infinitesimal() + q.infinitesimal * a.standard().conjugate()};
}

DCMatrix conj_transpose(const DCMatrix& a) { return {a.standard().adjoint(), -a.infinitesimal().transpose()}; }

DCMatrix transpose(const DCMatrix& a) { return {a.standard().transpose(), a.infinitesimal().transpose()}; }

double frobenius_norm(const DCMatrix& a) { return norm_of(a.standard()); }

DCMatrix inverse(const DCMatrix& a) {
  require_square(a, "inverse");
  const auto n = a.rows();
  if (n == 0) return a;
  Eigen::JacobiSVD<CMatrix> svd(a.standard());
  const auto& sv = svd.singularValues();
  const double cutoff = static_cast<double>(n) * std::numeric_limits<double>::epsilon() * sv[0];
  if (!(sv[n - 1] > cutoff)) {
    throw Error(ErrorCode::SingularStandardPart, "standard part is numerically singular");
  }
  const CMatrix x_inv = a.standard().partialPivLu().inverse();
  return {x_inv, -x_inv * a.infinitesimal() * x_inv.conjugate()};
}

bool is_hermitian(const DCMatrix& a, const Tolerances& tol) {
  if (!a.is_square()) return false;
  const CMatrix st_defect = a.standard() - a.standard().adjoint();
  const CMatrix inf_defect = a.infinitesimal() + a.infinitesimal().transpose();
  return norm_of(st_defect) <= tol.resid_tol && norm_of(inf_defect) <= tol.resid_tol;
}

bool is_unitary(const DCMatrix& u, const Tolerances& tol) {
  if (!u.is_square()) return false;
  const auto n = u.rows();
  const CMatrix gram = u.standard().adjoint() * u.standard() - CMatrix::Identity(n, n);
  const CMatrix z = u.standard().adjoint() * u.infinitesimal();
  const CMatrix asym = z - z.transpose();
  return norm_of(gram) <= tol.resid_tol && norm_of(asym) <= tol.resid_tol;
}

DualComplex inner(const DCMatrix& x, const DCMatrix& y) {
  if (x.cols() != 1 || y.cols() != 1 || x.rows() != y.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "inner: expected column vectors of equal length");
  }
  const DCMatrix p = conj_transpose(x) * y;
  return p(0, 0);
}

double vector_norm(const DCMatrix& x) {
  if (x.cols() != 1) throw Error(ErrorCode::ShapeMismatch, "vector_norm: expected a column vector");
  return norm_of(x.standard());
}

RandomKind parse_random_kind(std::string_view name) {
  if (name == "general") return RandomKind::General;
  if (name == "hermitian") return RandomKind::Hermitian;
  if (name == "unitary") return RandomKind::Unitary;
  if (name == "psd") return RandomKind::Psd;
  throw Error(ErrorCode::InvalidArgument, "unknown matrix kind '" + std::string(name) + "'");
}

std::string_view to_string(RandomKind kind) noexcept {
  switch (kind) {
    case RandomKind::General: return "general";
    case RandomKind::Hermitian: return "hermitian";
    case RandomKind::Unitary: return "unitary";
    case RandomKind::Psd: return "psd";
  }
  return "unknown";
}

namespace {

CMatrix gaussian(Eigen::Index m, Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix g(m, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < m; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = {re, im};
    }
  }
  return g;
}

CMatrix unitary_from(std::mt19937_64& rng, Eigen::Index n) {
  const CMatrix g = gaussian(n, n, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  const CMatrix& r = qr.matrixQR();
  for (Eigen::Index k = 0; k < n; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

}  // namespace

CMatrix random_complex_unitary(Eigen::Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return unitary_from(rng, n);
}

DCMatrix gen_random(RandomKind kind, Eigen::Index m, Eigen::Index n, std::uint64_t seed) {
  if (m <= 0 || n <= 0) throw Error(ErrorCode::InvalidArgument, "gen_random: dimensions must be positive");
  if (kind != RandomKind::General && m != n) {
    throw Error(ErrorCode::ShapeMismatch, "gen_random: structured kinds need a square shape");
  }
  std::mt19937_64 rng(seed);
  switch (kind) {
    case RandomKind::General: {
      CMatrix st = gaussian(m, n, rng);
      CMatrix inf = gaussian(m, n, rng);
      return {std::move(st), std::move(inf)};
    }
    case RandomKind::Hermitian: {
      const CMatrix g = gaussian(n, n, rng);
      const CMatrix k = gaussian(n, n, rng);
      return {0.5 * (g + g.adjoint()), 0.5 * (k - k.transpose())};
    }
    case RandomKind::Unitary: {
      const CMatrix w = unitary_from(rng, n);
      const CMatrix k = gaussian(n, n, rng);
      const CMatrix s = 0.5 * (k + k.transpose());
      return {w, w * s};
    }
    case RandomKind::Psd: {
      CMatrix st = gaussian(n, n, rng);
      CMatrix inf = gaussian(n, n, rng);
      const DCMatrix b(std::move(st), std::move(inf));
      DCMatrix a = conj_transpose(b) * b;
      // exact Hermitian structure, free of product roundoff
      a.standard() = 0.5 * (a.standard() + a.standard().adjoint()).eval();
      a.infinitesimal() = 0.5 * (a.infinitesimal() - a.infinitesimal().transpose()).eval();
      return a;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "gen_random: unknown kind");
}

}  // namespace dcla
