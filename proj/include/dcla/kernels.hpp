#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace dcla::kernels {

using cdouble = std::complex<double>;

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa) noexcept;

/// Best variant the running CPU supports and this build was compiled with.
Isa detected_isa() noexcept;

/// Variant used by the dispatching entry points. Initialised from the
/// DCLA_ISA environment variable ("scalar" or "avx2") when set, otherwise
/// from detected_isa().
Isa active_isa() noexcept;

/// Throws InvalidArgument when the requested variant is unavailable.
void set_active_isa(Isa isa);

/// Column-major dual complex product C = A B with A m x k and B k x n:
///   C_st = A_st B_st
///   C_I  = A_st B_I + A_I conj(B_st)
/// Output spans are overwritten.
struct GemmOperands {
  std::size_t m = 0, n = 0, k = 0;
  std::span<const cdouble> a_st, a_inf, b_st, b_inf;
  std::span<cdouble> c_st, c_inf;
};

void dc_gemm(const GemmOperands& ops);

/// Sum of |z|^2 over the span.
double sum_abs2(std::span<const cdouble> z) noexcept;

namespace scalar {
void dc_gemm(const GemmOperands& ops) noexcept;
double sum_abs2(std::span<const cdouble> z) noexcept;
}  // namespace scalar

#if defined(DCLA_HAVE_AVX2)
namespace avx2 {
void dc_gemm(const GemmOperands& ops) noexcept;
double sum_abs2(std::span<const cdouble> z) noexcept;
}  // namespace avx2
#endif

}  // namespace dcla::kernels
