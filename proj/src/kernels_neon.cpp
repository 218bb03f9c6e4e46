#include "fano/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace fano::kernels {

// Same 32-bit partial-product synthesis as the AVX2 variant, two lanes wide.
void axpy_i64_neon(std::int64_t* out, const std::int64_t* in, std::size_t len,
                   std::int64_t a) {
  const std::uint64_t ua = static_cast<std::uint64_t>(a);
  const uint32x2_t a_lo = vdup_n_u32(static_cast<std::uint32_t>(ua & 0xffffffffull));
  const uint32x2_t a_hi = vdup_n_u32(static_cast<std::uint32_t>(ua >> 32));
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    const uint64x2_t x = vld1q_u64(reinterpret_cast<const std::uint64_t*>(in + i));
    const uint32x2_t x_lo = vmovn_u64(x);
    const uint32x2_t x_hi = vshrn_n_u64(x, 32);
    const uint64x2_t lo = vmull_u32(a_lo, x_lo);
    const uint64x2_t mid = vmlal_u32(vmull_u32(a_hi, x_lo), a_lo, x_hi);
    const uint64x2_t prod = vaddq_u64(lo, vshlq_n_u64(mid, 32));
    const uint64x2_t acc = vld1q_u64(reinterpret_cast<std::uint64_t*>(out + i));
    vst1q_u64(reinterpret_cast<std::uint64_t*>(out + i), vaddq_u64(acc, prod));
  }
  for (; i < len; ++i) {
    out[i] = static_cast<std::int64_t>(static_cast<std::uint64_t>(out[i]) +
                                       ua * static_cast<std::uint64_t>(in[i]));
  }
}

}  // namespace fano::kernels

#endif  // aarch64
