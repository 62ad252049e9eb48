#include <doctest.h>

#include "dcla/error.hpp"
#include "dcla/svd.hpp"
#include "oracles.hpp"

using namespace dcla;

TEST_CASE("complex input reduces to the classical SVD") {
  const Tolerances tol;
  DCMatrix a = gen_random(RandomKind::General, 5, 3, 1);
  a.infinitesimal().setZero();
  const auto s = dc_svd(a, tol);
  CHECK(s.infinitesimal_rank == 0);
  CHECK(s.standard_rank == 3);
  const auto sv = oracle::singular_values(a.standard());
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK_FALSE(s.standard_blocks[k].paired());
    CHECK(std::abs(s.standard_blocks[k].sigma - sv[k]) <= 1e-10);
  }
}

TEST_CASE("diag(1, ej)") {
  const Tolerances tol;
  CMatrix st = CMatrix::Zero(2, 2), inf = CMatrix::Zero(2, 2);
  st(0, 0) = 1;
  inf(1, 1) = 1;
  const DCMatrix a(st, inf);
  const auto s = dc_svd(a, tol);
  CHECK(s.standard_rank == 1);
  REQUIRE(s.standard_blocks.size() == 1);
  CHECK(s.standard_blocks[0].sigma == doctest::Approx(1.0));
  REQUIRE(s.infinitesimal_values.size() == 1);
  CHECK(s.infinitesimal_values[0] == doctest::Approx(1.0));
  CHECK(s.infinitesimal_rank == 1);
  CHECK(verify_svd(a, s, tol).within(1e-14));
  CHECK(standard_rank(a, tol) == 1);
}

TEST_CASE("ranks of simple matrices") {
  const Tolerances tol;
  CHECK(standard_rank(DCMatrix(3, 4), tol) == 0);
  const auto z = dc_svd(DCMatrix(3, 3), tol);
  CHECK(z.standard_rank == 0);
  CHECK(z.infinitesimal_rank == 0);
  CMatrix i3 = CMatrix::Identity(3, 3);
  CHECK(standard_rank(DCMatrix(i3, i3), tol) == 3);
}

TEST_CASE("random shapes round trip") {
  const Tolerances tol;
  for (auto [m, n] : {std::pair<Eigen::Index, Eigen::Index>{5, 3}, {3, 5}, {4, 4}, {1, 6}, {6, 1}}) {
    const auto a = gen_random(RandomKind::General, m, n, static_cast<std::uint64_t>(m * 10 + n));
    const auto s = dc_svd(a, tol);
    CHECK(verify_svd(a, s, tol).within(1e-9));
    CHECK(is_unitary(s.U, tol));
    CHECK(is_unitary(s.V, tol));
    // A = U core V* through the oracle product.
    const auto back = oracle::matmul(oracle::matmul(s.U, svd_core(s, m, n)), oracle::adjoint(s.V));
    CHECK(residual(back, a).within(1e-9));
    double sum = 0;
    for (const auto& b : s.standard_blocks) sum += b.sigma * b.sigma * static_cast<double>(b.dimension());
    CHECK(std::sqrt(sum) == doctest::Approx(frobenius_norm(a)).epsilon(1e-10));
  }
}

TEST_CASE("paired block squares to the Gram sub block") {
  // A = U diag-block(sigma, nu) V* for unitary U, V; A*A must carry (sigma^2, 2 sigma nu).
  const Tolerances tol;
  const double sigma = 2.0, nu = 0.3;
  DCMatrix core(2, 2);
  core.standard().setIdentity();
  core.standard() *= sigma;
  core.infinitesimal()(0, 1) = nu;
  core.infinitesimal()(1, 0) = -nu;
  const auto u = gen_random(RandomKind::Unitary, 2, 2, 4), v = gen_random(RandomKind::Unitary, 2, 2, 5);
  const auto a = oracle::matmul(oracle::matmul(u, core), oracle::adjoint(v));
  const auto s = dc_svd(a, tol);
  REQUIRE(s.standard_blocks.size() == 1);
  const auto& b = s.standard_blocks[0];
  CHECK(b.paired());
  CHECK(b.sigma == doctest::Approx(sigma));
  CHECK(std::abs(b.nu) == doctest::Approx(nu));
  CHECK(verify_svd(a, s, tol).within(1e-10));
  const auto gram = core * core;
  CHECK(std::abs(gram.infinitesimal()(0, 1)) == doctest::Approx(2 * sigma * nu));
}

TEST_CASE("verify_svd detects corruption and checks shapes") {
  const Tolerances tol;
  SvdResult trivial;
  trivial.U = trivial.V = DCMatrix::identity(3);
  trivial.standard_blocks = {{1.0}, {1.0}, {1.0}};
  trivial.standard_rank = 3;
  CHECK(verify_svd(DCMatrix::identity(3), trivial, tol).within(0.0));

  const auto a = gen_random(RandomKind::General, 4, 3, 8);
  auto s = dc_svd(a, tol);
  s.U.standard().col(0) *= 1.01;
  CHECK(verify_svd(a, s, tol).max() > 1e-3);
  CHECK_THROWS_AS(verify_svd(gen_random(RandomKind::General, 3, 3, 1), s, tol), Error);
}
