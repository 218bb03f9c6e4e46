#include "fano/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace fano::kernels {

// 64-bit low product synthesized from 32-bit partials:
//   a*x mod 2^64 = a_lo*x_lo + ((a_lo*x_hi + a_hi*x_lo) << 32)
// which is sign-agnostic in two's complement, so any int64 scale works.
__attribute__((target("avx2"))) void axpy_i64_avx2(std::int64_t* out, const std::int64_t* in,
                                                   std::size_t len, std::int64_t a) {
  const std::uint64_t ua = static_cast<std::uint64_t>(a);
  const __m256i a_lo = _mm256_set1_epi64x(static_cast<long long>(ua & 0xffffffffull));
  const __m256i a_hi = _mm256_set1_epi64x(static_cast<long long>(ua >> 32));
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i));
    const __m256i x_hi = _mm256_srli_epi64(x, 32);
    // _mm256_mul_epu32 multiplies the low 32 bits of each 64-bit lane.
    const __m256i lo = _mm256_mul_epu32(a_lo, x);
    const __m256i mid = _mm256_add_epi64(_mm256_mul_epu32(a_lo, x_hi),
                                         _mm256_mul_epu32(a_hi, x));
    const __m256i prod = _mm256_add_epi64(lo, _mm256_slli_epi64(mid, 32));
    const __m256i acc = _mm256_loadu_si256(reinterpret_cast<__m256i*>(out + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_add_epi64(acc, prod));
  }
  for (; i < len; ++i) {
    out[i] = static_cast<std::int64_t>(static_cast<std::uint64_t>(out[i]) +
                                       ua * static_cast<std::uint64_t>(in[i]));
  }
}

}  // namespace fano::kernels

#endif  // x86
