#include "dcla/kernels.hpp"

namespace dcla::kernels::scalar {

void dc_gemm(const GemmOperands& ops) noexcept {
  const std::size_t m = ops.m, n = ops.n, k = ops.k;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      cdouble acc_st{}, acc_inf{};
      for (std::size_t p = 0; p < k; ++p) {
        const cdouble bs = ops.b_st[p + j * k];
        const cdouble bi = ops.b_inf[p + j * k];
        const cdouble as = ops.a_st[i + p * m];
        const cdouble ai = ops.a_inf[i + p * m];
        acc_st += as * bs;
        acc_inf += as * bi + ai * std::conj(bs);
      }
      ops.c_st[i + j * m] = acc_st;
      ops.c_inf[i + j * m] = acc_inf;
    }
  }
}

double sum_abs2(std::span<const cdouble> z) noexcept {
  double acc = 0.0;
  for (const cdouble& v : z) acc += v.real() * v.real() + v.imag() * v.imag();
  return acc;
}

}  // namespace dcla::kernels::scalar
