#include <atomic>
#include <cstdlib>
#include <string>

#include "dcla/error.hpp"
#include "dcla/kernels.hpp"

namespace dcla::kernels {

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

Isa detected_isa() noexcept {
#if defined(DCLA_HAVE_AVX2)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Isa::Avx2;
#endif
  return Isa::Scalar;
}

namespace {

bool available(Isa isa) noexcept { return isa == Isa::Scalar || detected_isa() == Isa::Avx2; }

Isa initial_isa() noexcept {
  if (const char* env = std::getenv("DCLA_ISA")) {
    const std::string want(env);
    if (want == "scalar") return Isa::Scalar;
    if (want == "avx2" && available(Isa::Avx2)) return Isa::Avx2;
  }
  return detected_isa();
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

Isa active_isa() noexcept { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!available(isa)) {
    throw Error(ErrorCode::InvalidArgument, std::string("kernel variant not available: ") +
                                                std::string(to_string(isa)));
  }
  active().store(isa, std::memory_order_relaxed);
}

void dc_gemm(const GemmOperands& ops) {
  if (ops.a_st.size() < ops.m * ops.k || ops.a_inf.size() < ops.m * ops.k ||
      ops.b_st.size() < ops.k * ops.n || ops.b_inf.size() < ops.k * ops.n ||
      ops.c_st.size() < ops.m * ops.n || ops.c_inf.size() < ops.m * ops.n) {
    throw Error(ErrorCode::ShapeMismatch, "dc_gemm operand spans too short");
  }
#if defined(DCLA_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) return avx2::dc_gemm(ops);
#endif
  scalar::dc_gemm(ops);
}

double sum_abs2(std::span<const cdouble> z) noexcept {
#if defined(DCLA_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) return avx2::sum_abs2(z);
#endif
  return scalar::sum_abs2(z);
}

}  // namespace dcla::kernels
