#include <doctest.h>

#include <random>
#include <vector>

#include "dcla/error.hpp"
#include "dcla/kernels.hpp"

using namespace dcla::kernels;

namespace {

std::vector<cdouble> random_vec(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  std::vector<cdouble> v(n);
  for (auto& z : v) z = {d(rng), d(rng)};
  return v;
}

struct Problem {
  std::size_t m, n, k;
  std::vector<cdouble> ast, ainf, bst, binf;
};

Problem make(std::size_t m, std::size_t n, std::size_t k, std::mt19937_64& rng) {
  return {m, n, k, random_vec(m * k, rng), random_vec(m * k, rng), random_vec(k * n, rng), random_vec(k * n, rng)};
}

std::pair<std::vector<cdouble>, std::vector<cdouble>> run(const Problem& p, void (*fn)(const GemmOperands&) noexcept) {
  std::vector<cdouble> cst(p.m * p.n, cdouble(9, 9)), cinf(p.m * p.n, cdouble(9, 9));
  fn({p.m, p.n, p.k, p.ast, p.ainf, p.bst, p.binf, cst, cinf});
  return {cst, cinf};
}

}  // namespace

TEST_CASE("scalar gemm matches the defining formula") {
  std::mt19937_64 rng(4);
  const auto p = make(3, 2, 4, rng);
  const auto [cst, cinf] = run(p, scalar::dc_gemm);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      cdouble s{}, t{};
      for (std::size_t l = 0; l < 4; ++l) {
        s += p.ast[i + l * 3] * p.bst[l + j * 4];
        t += p.ast[i + l * 3] * p.binf[l + j * 4] + p.ainf[i + l * 3] * std::conj(p.bst[l + j * 4]);
      }
      CHECK(std::abs(cst[i + j * 3] - s) <= 1e-13);
      CHECK(std::abs(cinf[i + j * 3] - t) <= 1e-13);
    }
  }
}

#if defined(DCLA_HAVE_AVX2)
TEST_CASE("avx2 gemm agrees with scalar on odd and even shapes") {
  if (detected_isa() != Isa::Avx2) return;
  std::mt19937_64 rng(5);
  for (std::size_t m : {1u, 2u, 3u, 7u, 8u, 13u}) {
    for (std::size_t n : {1u, 4u, 5u}) {
      for (std::size_t k : {1u, 6u, 9u}) {
        const auto p = make(m, n, k, rng);
        const auto ref = run(p, scalar::dc_gemm);
        const auto got = run(p, avx2::dc_gemm);
        for (std::size_t i = 0; i < m * n; ++i) {
          CHECK(std::abs(ref.first[i] - got.first[i]) <= 1e-12);
          CHECK(std::abs(ref.second[i] - got.second[i]) <= 1e-12);
        }
      }
    }
  }
}

TEST_CASE("avx2 sum_abs2 agrees with scalar") {
  if (detected_isa() != Isa::Avx2) return;
  std::mt19937_64 rng(6);
  for (std::size_t n : {0u, 1u, 2u, 3u, 5u, 8u, 17u, 100u}) {
    const auto v = random_vec(n, rng);
    CHECK(avx2::sum_abs2(v) == doctest::Approx(scalar::sum_abs2(v)).epsilon(1e-14));
  }
}
#endif

TEST_CASE("dispatch honours the selected variant") {
  const Isa before = active_isa();
  set_active_isa(Isa::Scalar);
  CHECK(active_isa() == Isa::Scalar);
  if (detected_isa() == Isa::Avx2) {
    set_active_isa(Isa::Avx2);
    CHECK(active_isa() == Isa::Avx2);
  } else {
    CHECK_THROWS_AS(set_active_isa(Isa::Avx2), dcla::Error);
  }
  set_active_isa(before);
  CHECK(to_string(Isa::Scalar) == "scalar");
}

TEST_CASE("dispatch checks operand sizes") {
  std::vector<cdouble> a(4), b(1), c(2);
  CHECK_THROWS_AS(dc_gemm({2, 1, 2, a, a, b, b, c, c}), dcla::Error);
}
