// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include <immintrin.h>

#include "dcla/kernels.hpp"

namespace dcla::kernels::avx2 {

namespace {

// Two complex doubles per register: (re0, im0, re1, im1).
inline __m256d load2(const cdouble* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }

inline void store2(cdouble* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

// acc + a * (br + i bi), with br and bi broadcast.
inline __m256d cmul_acc(__m256d acc, __m256d a, __m256d br, __m256d bi) {
  const __m256d swapped = _mm256_permute_pd(a, 0b0101);
  const __m256d cross = _mm256_mul_pd(swapped, bi);
  return _mm256_add_pd(acc, _mm256_fmaddsub_pd(a, br, cross));
}

}  // namespace

void dc_gemm(const GemmOperands& ops) noexcept {
  const std::size_t m = ops.m, n = ops.n, k = ops.k;
  const std::size_t m_vec = m & ~std::size_t{1};
  for (std::size_t j = 0; j < n; ++j) {
    const cdouble* bs_col = ops.b_st.data() + j * k;
    const cdouble* bi_col = ops.b_inf.data() + j * k;
    for (std::size_t i = 0; i < m_vec; i += 2) {
      __m256d acc_st = _mm256_setzero_pd();
      __m256d acc_inf = _mm256_setzero_pd();
      for (std::size_t p = 0; p < k; ++p) {
        const __m256d as = load2(ops.a_st.data() + i + p * m);
        const __m256d ai = load2(ops.a_inf.data() + i + p * m);
        const __m256d bs_re = _mm256_set1_pd(bs_col[p].real());
        const __m256d bs_im = _mm256_set1_pd(bs_col[p].imag());
        const __m256d bs_im_neg = _mm256_set1_pd(-bs_col[p].imag());
        const __m256d bi_re = _mm256_set1_pd(bi_col[p].real());
        const __m256d bi_im = _mm256_set1_pd(bi_col[p].imag());
        acc_st = cmul_acc(acc_st, as, bs_re, bs_im);
        acc_inf = cmul_acc(acc_inf, as, bi_re, bi_im);
        acc_inf = cmul_acc(acc_inf, ai, bs_re, bs_im_neg);
      }
      store2(ops.c_st.data() + i + j * m, acc_st);
      store2(ops.c_inf.data() + i + j * m, acc_inf);
    }
    // odd row count: last row done with scalar arithmetic
    for (std::size_t i = m_vec; i < m; ++i) {
      cdouble acc_st{}, acc_inf{};
      for (std::size_t p = 0; p < k; ++p) {
        const cdouble as = ops.a_st[i + p * m];
        const cdouble ai = ops.a_inf[i + p * m];
        acc_st += as * bs_col[p];
        acc_inf += as * bi_col[p] + ai * std::conj(bs_col[p]);
      }
      ops.c_st[i + j * m] = acc_st;
      ops.c_inf[i + j * m] = acc_inf;
    }
  }
}

double sum_abs2(std::span<const cdouble> z) noexcept {
  const double* d = reinterpret_cast<const double*>(z.data());
  const std::size_t len = 2 * z.size();
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    const __m256d x0 = _mm256_loadu_pd(d + i);
    const __m256d x1 = _mm256_loadu_pd(d + i + 4);
    acc0 = _mm256_fmadd_pd(x0, x0, acc0);
    acc1 = _mm256_fmadd_pd(x1, x1, acc1);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
  double acc = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < len; ++i) acc += d[i] * d[i];
  return acc;
}

}  // namespace dcla::kernels::avx2
