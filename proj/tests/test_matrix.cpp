#include <doctest.h>

#include "dcla/error.hpp"
#include "dcla/matrix.hpp"
#include "oracles.hpp"

using namespace dcla;

TEST_CASE("matrix product agrees with the entrywise oracle") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Eigen::Index m = 1 + seed % 5, k = 2 + seed % 3, n = 1 + seed % 7;
    const auto a = gen_random(RandomKind::General, m, k, seed);
    const auto b = gen_random(RandomKind::General, k, n, seed + 100);
    CHECK(residual(a * b, oracle::matmul(a, b)).within(1e-12));
  }
  CHECK_THROWS_AS(DCMatrix(2, 3) * DCMatrix(2, 3), Error);
}

TEST_CASE("conjugate transpose and inverse") {
  const auto a = gen_random(RandomKind::General, 5, 5, 7);
  CHECK(residual(conj_transpose(a), oracle::adjoint(a)).within(0.0));
  CHECK(residual(conj_transpose(conj_transpose(a)), a).within(0.0));
  const auto b = gen_random(RandomKind::General, 5, 5, 8);
  CHECK(residual(conj_transpose(a * b), conj_transpose(b) * conj_transpose(a)).within(1e-12));
  CHECK(residual(a * inverse(a), DCMatrix::identity(5)).within(1e-10));
  CHECK(residual(inverse(a) * a, DCMatrix::identity(5)).within(1e-10));

  DCMatrix singular(3, 3);
  singular.infinitesimal().setIdentity();
  CHECK_THROWS_AS(inverse(singular), Error);
}

TEST_CASE("generated kinds have their structure") {
  const Tolerances tol;
  CHECK(is_hermitian(gen_random(RandomKind::Hermitian, 6, 6, 1), tol));
  CHECK(is_hermitian(gen_random(RandomKind::Psd, 6, 6, 1), tol));
  CHECK(is_unitary(gen_random(RandomKind::Unitary, 6, 6, 1), tol));
  CHECK_FALSE(is_hermitian(gen_random(RandomKind::General, 6, 6, 1), tol));
  CHECK_FALSE(is_unitary(gen_random(RandomKind::General, 6, 6, 1), tol));
  CHECK_THROWS_AS(gen_random(RandomKind::Hermitian, 3, 4, 1), Error);
  CHECK(residual(gen_random(RandomKind::General, 3, 4, 9), gen_random(RandomKind::General, 3, 4, 9)).within(0.0));

  // U*U = I exercises the symmetric part of U_st^* U_I.
  const auto u = gen_random(RandomKind::Unitary, 5, 5, 3);
  CHECK(residual(oracle::matmul(oracle::adjoint(u), u), DCMatrix::identity(5)).within(1e-12));
}

TEST_CASE("inner product and norm") {
  const auto x = gen_random(RandomKind::General, 4, 1, 2);
  const auto y = gen_random(RandomKind::General, 4, 1, 3);
  const auto xy = inner(x, y);
  const auto expect = oracle::matmul(oracle::adjoint(x), y)(0, 0);
  CHECK(std::abs(xy.standard - expect.standard) <= 1e-12);
  CHECK(std::abs(xy.infinitesimal - expect.infinitesimal) <= 1e-12);
  CHECK(vector_norm(x) == doctest::Approx(x.standard().norm()));
  CHECK(std::abs(inner(x, x).infinitesimal) <= 1e-12);
}

TEST_CASE("random kind names") {
  CHECK(parse_random_kind("psd") == RandomKind::Psd);
  CHECK(to_string(RandomKind::Unitary) == "unitary");
  CHECK_THROWS_AS(parse_random_kind("banana"), Error);
}
