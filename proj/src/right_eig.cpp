#include "dcla/right_eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dcla/error.hpp"
#include "dcla/herm_spectral.hpp"
#include "numeric_detail.hpp"

namespace dcla {

namespace {

struct EigenCluster {
  cdouble value;
  Eigen::Index size = 0;
};

// Single-linkage clustering of the (complex) eigenvalues of A_st.
std::vector<EigenCluster> cluster_eigenvalues(const CMatrix& st, double threshold) {
  Eigen::ComplexEigenSolver<CMatrix> solver(st, false);
  const CVector ev = solver.eigenvalues();
  const auto n = ev.size();
  std::vector<Eigen::Index> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Eigen::Index i) {
    while (parent[static_cast<std::size_t>(i)] != i) i = parent[static_cast<std::size_t>(i)];
    return i;
  };
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (std::abs(ev[i] - ev[j]) <= threshold) parent[static_cast<std::size_t>(find(j))] = find(i);
    }
  }
  std::vector<EigenCluster> out;
  std::vector<Eigen::Index> slot(static_cast<std::size_t>(n), -1);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto root = static_cast<std::size_t>(find(i));
    if (slot[root] < 0) {
      slot[root] = static_cast<Eigen::Index>(out.size());
      out.push_back({});
    }
    auto& c = out[static_cast<std::size_t>(slot[root])];
    c.value += ev[i];
    ++c.size;
  }
  for (auto& c : out) c.value /= static_cast<double>(c.size);
  std::sort(out.begin(), out.end(), [](const EigenCluster& a, const EigenCluster& b) {
    if (a.value.real() != b.value.real()) return a.value.real() > b.value.real();
    return a.value.imag() > b.value.imag();
  });
  return out;
}

struct Scales {
  double rank_cut;  // singular values treated as zero
  double accept;    // consistency threshold
};

Scales scales_for(const DCMatrix& a, const Tolerances& tol) {
  return {tol.group_tol * (1.0 + detail::spectral_norm_estimate(a.standard())),
          tol.resid_tol * (1.0 + a.infinitesimal().norm())};
}

// Orthonormal eigenspace basis of A_st at value; never empty.
CMatrix eigenspace(const CMatrix& st, cdouble value, double rank_cut) {
  const auto n = st.rows();
  const CMatrix shifted = st - value * CMatrix::Identity(n, n);
  CMatrix basis = detail::null_space(shifted, rank_cut);
  if (basis.cols() == 0) {
    Eigen::JacobiSVD<CMatrix> svd(shifted, Eigen::ComputeFullV);
    basis = svd.matrixV().rightCols(1);
  }
  return basis;
}

bool accepted(const ResidualPair& r, const Scales& s) {
  return r.standard <= std::max(s.accept, s.rank_cut) && r.infinitesimal <= s.accept;
}

}  // namespace

ResidualPair verify_eigenpair(const DCMatrix& a, const DualComplex& lambda, const DCMatrix& x,
                              const Tolerances& tol) {
  if (!a.is_square() || x.cols() != 1 || x.rows() != a.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "verify_eigenpair: shapes do not conform");
  }
  if (!(vector_norm(x) > tol.zero_tol)) {
    throw Error(ErrorCode::NotAppreciable, "eigenvector must be appreciable");
  }
  return residual(a * x, mul_right(x, lambda));
}

std::vector<RightEigenPair> complex_right_eigs(const DCMatrix& a, const Tolerances& tol) {
  tol.validate();
  if (!a.is_square()) throw Error(ErrorCode::ShapeMismatch, "complex_right_eigs: matrix is not square");
  const auto n = a.rows();
  const Scales sc = scales_for(a, tol);
  const CMatrix& st = a.standard();
  const CMatrix& inf = a.infinitesimal();

  std::vector<RightEigenPair> out;
  for (const auto& cl : cluster_eigenvalues(st, sc.rank_cut)) {
    const CMatrix basis = eigenspace(st, cl.value, sc.rank_cut);
    const CMatrix shifted = st - std::conj(cl.value) * CMatrix::Identity(n, n);

    // Solvable iff A_I conj(E c) has no component outside range(shifted).
    // That defect is complex-linear in conj(c).
    const CMatrix defect = detail::left_null_projector(shifted, sc.rank_cut) * inf * basis.conjugate();
    Eigen::JacobiSVD<CMatrix> svd(defect, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    for (Eigen::Index k = 0; k < basis.cols(); ++k) {
      const double sigma = k < sv.size() ? sv[k] : 0.0;
      if (sigma > sc.accept) continue;
      CVector x_st = basis * svd.matrixV().col(k).conjugate();
      x_st = detail::fix_phase(x_st.normalized());
      const CVector x_inf = detail::solve_min_norm(shifted, -(inf * x_st.conjugate()), sc.rank_cut);

      RightEigenPair pair;
      pair.value = DualComplex(cl.value);
      pair.vector = DCMatrix(CMatrix(x_st), CMatrix(x_inf));
      pair.residual = verify_eigenpair(a, pair.value, pair.vector, tol);
      pair.clustered = cl.size > 1;
      if (accepted(pair.residual, sc)) out.push_back(std::move(pair));
    }
  }
  return out;
}

std::optional<RightEigenPair> lift_right_eigenpair(const DCMatrix& a, cdouble lambda_st, const CVector& x_st,
                                                   const Tolerances& tol) {
  tol.validate();
  const auto n = a.rows();
  if (!a.is_square() || x_st.size() != n) {
    throw Error(ErrorCode::ShapeMismatch, "lift_right_eigenpair: shapes do not conform");
  }
  const double len = x_st.norm();
  if (!(len > tol.zero_tol)) throw Error(ErrorCode::NotAppreciable, "eigenvector must be appreciable");

  const Scales sc = scales_for(a, tol);
  const CVector x = x_st / len;
  const CMatrix shifted = a.standard() - std::conj(lambda_st) * CMatrix::Identity(n, n);
  const CVector rhs = a.infinitesimal() * x.conjugate();

  // lambda_I must absorb whatever part of rhs lies outside range(shifted).
  const CMatrix proj = detail::left_null_projector(shifted, sc.rank_cut);
  const CVector px = proj * x;
  cdouble lambda_inf{};
  if (px.squaredNorm() > 1e-16) lambda_inf = px.dot(proj * rhs) / px.squaredNorm();

  const CVector x_inf = detail::solve_min_norm(shifted, lambda_inf * x - rhs, sc.rank_cut);

  RightEigenPair pair;
  pair.value = DualComplex(lambda_st, lambda_inf);
  pair.vector = DCMatrix(CMatrix(x), CMatrix(x_inf));
  pair.residual = verify_eigenpair(a, pair.value, pair.vector, tol);
  if (!accepted(pair.residual, sc)) return std::nullopt;
  return pair;
}

std::vector<RightEigenPair> dual_right_eigs(const DCMatrix& a, const Tolerances& tol) {
  tol.validate();
  if (!a.is_square()) throw Error(ErrorCode::ShapeMismatch, "dual_right_eigs: matrix is not square");
  const Scales sc = scales_for(a, tol);
  const auto clusters = cluster_eigenvalues(a.standard(), sc.rank_cut);
  const bool has_cluster =
      std::any_of(clusters.begin(), clusters.end(), [](const EigenCluster& c) { return c.size > 1; });

  std::vector<RightEigenPair> out;
  if (has_cluster && is_hermitian(a, tol)) {
    const auto decomp = herm_spectral(a, tol);
    Eigen::Index col = 0;
    for (const auto& b : decomp.blocks) {
      if (b.kind == BlockKind::Eigen) {
        RightEigenPair pair;
        pair.value = DualComplex(b.lambda);
        pair.vector = decomp.U.col(col);
        pair.residual = verify_eigenpair(a, pair.value, pair.vector, tol);
        out.push_back(std::move(pair));
      }
      col += b.dimension();
    }
    return out;
  }

  for (const auto& cl : clusters) {
    const CMatrix basis = eigenspace(a.standard(), cl.value, sc.rank_cut);
    for (Eigen::Index k = 0; k < basis.cols(); ++k) {
      const CVector x_st = detail::fix_phase(basis.col(k));
      if (auto pair = lift_right_eigenpair(a, cl.value, x_st, tol)) {
        pair->clustered = cl.size > 1;
        out.push_back(std::move(*pair));
      }
    }
  }
  return out;
}

CVector simple_eig_lift(const DCMatrix& a, double lambda, const CVector& x_st, const Tolerances& tol) {
  tol.validate();
  const auto n = a.rows();
  if (!a.is_square() || x_st.size() != n) throw Error(ErrorCode::ShapeMismatch, "simple_eig_lift: shapes do not conform");
  if (!is_hermitian(a, tol)) throw Error(ErrorCode::NotHermitian, "simple_eig_lift: matrix is not Hermitian");

  const Scales sc = scales_for(a, tol);
  const CMatrix shifted = lambda * CMatrix::Identity(n, n) - a.standard();
  const CVector rhs = a.infinitesimal() * x_st.conjugate();
  CVector x_inf = detail::solve_min_norm(shifted, rhs, sc.rank_cut);
  const double defect = (shifted * x_inf - rhs).norm();
  if (defect > sc.accept) {
    throw Error(ErrorCode::Inconsistent, "no infinitesimal part solves the lifting equation (defect " +
                                             std::to_string(defect) + ")");
  }
  return x_inf;
}

}  // namespace dcla
