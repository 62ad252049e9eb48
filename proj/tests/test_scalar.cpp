#include <doctest.h>

#include <random>

#include "dcla/dual_complex.hpp"
#include "dcla/error.hpp"
#include "oracles.hpp"

using dcla::DualComplex;
using cd = std::complex<double>;

namespace {

double dist(const DualComplex& p, const DualComplex& q) {
  return std::max(std::abs(p.standard - q.standard), std::abs(p.infinitesimal - q.infinitesimal));
}

}  // namespace

TEST_CASE("product matches the regular representation") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 500; ++t) {
    const auto p = oracle::random_scalar(rng), q = oracle::random_scalar(rng);
    CHECK(dist(p * q, oracle::mul(p, q)) <= 1e-13);
    CHECK(dist(conj(p), oracle::conj(p)) == 0.0);
    CHECK(dist(dcla::inverse(p), oracle::inverse(p)) <= 1e-12 * (1 + dcla::abs(dcla::inverse(p)) * 10));
  }
}

TEST_CASE("units multiply like quaternions with a nilpotent ej") {
  const DualComplex i{cd(0, 1)}, ej{cd(0), cd(1)}, ek{cd(0), cd(0, 1)};
  CHECK(i * ej == ek);
  CHECK(ej * i == -ek);
  CHECK(ej * ej == DualComplex{});
  CHECK(ek * ek == DualComplex{});
  CHECK(i * i == DualComplex(-1.0));
}

TEST_CASE("conjugate reverses products and magnitude is multiplicative") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 200; ++t) {
    const auto p = oracle::random_scalar(rng), q = oracle::random_scalar(rng);
    CHECK(dist(conj(p * q), conj(q) * conj(p)) <= 1e-13);
    CHECK(std::abs(abs(p * q) - abs(p) * abs(q)) <= 1e-12 * (1 + abs(p) * abs(q)));
  }
}

TEST_CASE("inverse of a non-appreciable scalar throws") {
  CHECK_THROWS_AS(dcla::inverse(DualComplex(cd(0), cd(1, 2))), dcla::Error);
  try {
    dcla::inverse(DualComplex(cd(1e-14), cd(1)), 1e-12);
    FAIL("expected throw");
  } catch (const dcla::Error& e) {
    CHECK(e.code() == dcla::ErrorCode::NotAppreciable);
  }
}

TEST_CASE("similarity witness") {
  // 1 + ej and 1 - i ej are similar; 1 and 2 are not.
  const DualComplex p{cd(1), cd(1)}, q{cd(1), cd(0, -1)};
  const auto u = dcla::find_similarity(p, q);
  REQUIRE(u.has_value());
  CHECK(u->is_appreciable(1e-12));
  CHECK(dist(p * *u, *u * q) <= 1e-12);
  CHECK_FALSE(dcla::find_similarity(DualComplex(1.0), DualComplex(2.0)).has_value());

  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto a = oracle::random_scalar(rng), w = oracle::random_scalar(rng);
    const auto b = dcla::inverse(w) * a * w;
    const auto v = dcla::find_similarity(a, b);
    REQUIRE(v.has_value());
    CHECK(dist(a * *v, *v * b) <= 1e-10);
  }
}

TEST_CASE("tolerances must be finite and nonnegative") {
  dcla::Tolerances t;
  CHECK_NOTHROW(t.validate());
  t.resid_tol = -1;
  CHECK_THROWS_AS(t.validate(), dcla::Error);
  t.resid_tol = std::nan("");
  CHECK_THROWS_AS(t.validate(), dcla::Error);
}
