#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <random>

#include "dcla/error.hpp"
#include "dcla/right_eig.hpp"
#include "oracles.hpp"

using namespace dcla;
using cd = std::complex<double>;

namespace {

DCMatrix example1() {
  CMatrix i2 = CMatrix::Identity(2, 2);
  return {i2, i2};
}

DCMatrix column(const CVector& st, const CVector& inf) { return {CMatrix(st), CMatrix(inf)}; }

}  // namespace

TEST_CASE("example 1: no complex right eigenvalue, 1 - i ej is one") {
  const Tolerances tol;
  const auto a = example1();
  CHECK(complex_right_eigs(a, tol).empty());

  const CVector x = CVector::Constant(2, cd(1, 1));
  const auto r = verify_eigenpair(a, DualComplex(cd(1), cd(0, -1)), column(x, CVector::Zero(2)), tol);
  CHECK(r.within(1e-14));

  const auto lifted = lift_right_eigenpair(a, cd(1), x, tol);
  REQUIRE(lifted.has_value());
  CHECK(std::abs(lifted->value.standard - cd(1)) <= 1e-14);
  CHECK(std::abs(lifted->value.infinitesimal - cd(0, -1)) <= 1e-14);

  // Every value dual_right_eigs finds must be similar to 1 - i ej.
  for (const auto& p : dual_right_eigs(a, tol)) {
    CHECK(p.residual.within(1e-12));
    CHECK(find_similarity(p.value, DualComplex(cd(1), cd(0, -1))).has_value());
  }
}

TEST_CASE("diagonal standard part: acceptance per entry against the brute-force solve") {
  const Tolerances tol;
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::Index n = 2 + trial % 5;
    CMatrix st = CMatrix::Zero(n, n);
    CMatrix inf(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) inf(i, j) = oracle::random_complex(rng);
      const bool real_entry = (i + trial) % 2 == 0;
      st(i, i) = real_entry ? cd(double(i) + 0.5, 0) : cd(double(i) + 0.5, 1.0 + double(i));
      if (real_entry && (i + trial) % 4 == 0) inf(i, i) = 0;
    }
    const DCMatrix a(st, inf);
    const auto pairs = complex_right_eigs(a, tol);

    std::size_t expected = 0;
    for (Eigen::Index k = 0; k < n; ++k) {
      const CMatrix shifted = st - std::conj(st(k, k)) * CMatrix::Identity(n, n);
      const CVector rhs = -(inf * CVector::Unit(n, k).conjugate());
      const bool solvable = oracle::consistent(shifted, rhs, 1e-10);
      const auto found = std::count_if(pairs.begin(), pairs.end(), [&](const RightEigenPair& p) {
        return std::abs(p.value.standard - st(k, k)) < 1e-9;
      });
      CHECK(found == (solvable ? 1 : 0));
      expected += solvable ? 1 : 0;
    }
    CHECK(pairs.size() == expected);
    for (const auto& p : pairs) {
      CHECK(p.residual.within(1e-10));
      CHECK(std::abs(p.value.infinitesimal) == 0.0);
    }
  }
}

TEST_CASE("zero infinitesimal part reduces to complex eigenpairs") {
  const Tolerances tol;
  DCMatrix a = gen_random(RandomKind::General, 4, 4, 3);
  a.infinitesimal().setZero();
  const auto all = dual_right_eigs(a, tol);
  CHECK(all.size() == 4);
  for (const auto& p : all) {
    CHECK(std::abs(p.value.infinitesimal) <= 1e-12);
    CHECK(p.residual.within(1e-10));
  }
}

TEST_CASE("random 2x2: every returned pair round-trips, values come from A_st, similarity closure") {
  const Tolerances tol;
  std::mt19937_64 rng(12);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto a = gen_random(RandomKind::General, 2, 2, seed);
    const auto pairs = dual_right_eigs(a, tol);
    CHECK(!pairs.empty());
    Eigen::ComplexEigenSolver<CMatrix> es(a.standard(), false);
    for (const auto& p : pairs) {
      CHECK(verify_eigenpair(a, p.value, p.vector, tol).within(1e-10));
      const double nearest = std::min(std::abs(p.value.standard - es.eigenvalues()[0]),
                                      std::abs(p.value.standard - es.eigenvalues()[1]));
      CHECK(nearest <= 1e-10);
      const auto q = oracle::random_scalar(rng);
      const auto moved = inverse(q) * p.value * q;
      CHECK(verify_eigenpair(a, moved, mul_right(p.vector, q), tol).within(1e-9));
    }
  }
}

TEST_CASE("simple eigenvalue lift") {
  const Tolerances tol;
  SUBCASE("complex Hermitian input lifts to zero") {
    DCMatrix a = gen_random(RandomKind::Hermitian, 4, 4, 5);
    a.infinitesimal().setZero();
    Eigen::SelfAdjointEigenSolver<CMatrix> es(a.standard());
    CHECK(simple_eig_lift(a, es.eigenvalues()[0], es.eigenvectors().col(0), tol).norm() <= 1e-12);
  }
  SUBCASE("random Hermitian: all lifts verify") {
    const auto a = gen_random(RandomKind::Hermitian, 4, 4, 6);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(a.standard());
    for (Eigen::Index k = 0; k < 4; ++k) {
      const CVector x = es.eigenvectors().col(k);
      const CVector xi = simple_eig_lift(a, es.eigenvalues()[k], x, tol);
      CHECK(verify_eigenpair(a, DualComplex(es.eigenvalues()[k]), column(x, xi), tol).within(1e-10));
    }
  }
  SUBCASE("example 2 has no right eigenvalue") {
    CMatrix inf(2, 2);
    inf << 0, 1, -1, 0;
    const DCMatrix a(CMatrix::Identity(2, 2), inf);
    try {
      simple_eig_lift(a, 1.0, CVector::Unit(2, 0), tol);
      FAIL("expected Inconsistent");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Inconsistent);
    }
    CHECK(complex_right_eigs(a, tol).empty());
    CHECK(dual_right_eigs(a, tol).empty());
  }
  SUBCASE("non-Hermitian input is rejected") {
    CHECK_THROWS_AS(simple_eig_lift(gen_random(RandomKind::General, 3, 3, 1), 0.0, CVector::Unit(3, 0), tol), Error);
  }
}

TEST_CASE("shape and appreciability errors") {
  const Tolerances tol;
  CHECK_THROWS_AS(complex_right_eigs(DCMatrix(2, 3), tol), Error);
  CHECK_THROWS_AS(verify_eigenpair(DCMatrix::identity(2), DualComplex(1.0), DCMatrix(2, 1), tol), Error);
}
