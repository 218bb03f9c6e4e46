#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace fano::kernels {

// Inner loops of the dense truncated-product fold:
//
//   out[i] += a * in[i]   for i in [0, len)
//
// The fixed-width variants compute in two's-complement arithmetic; callers
// guarantee (via an a-priori coefficient bound) that the true values fit the
// element type, so the wrap-free result is exact. All variants produce
// bit-identical outputs on the same inputs.

enum class Backend { scalar, avx2, neon };

const char* backend_name(Backend b);
std::vector<Backend> available_backends();  // scalar is always present
Backend active_backend();
void set_backend(Backend b);  // throws std::invalid_argument if unavailable
void reset_backend();         // restore the auto-detected default

void axpy_i64(std::int64_t* out, const std::int64_t* in, std::size_t len, std::int64_t a);
void axpy_i64_scalar(std::int64_t* out, const std::int64_t* in, std::size_t len, std::int64_t a);
#if defined(__x86_64__) || defined(__i386__)
void axpy_i64_avx2(std::int64_t* out, const std::int64_t* in, std::size_t len, std::int64_t a);
#endif
#if defined(__aarch64__)
void axpy_i64_neon(std::int64_t* out, const std::int64_t* in, std::size_t len, std::int64_t a);
#endif

using int128 = __int128;
void axpy_i128(int128* out, const int128* in, std::size_t len, std::int64_t a);

// Arbitrary-precision lane. Scalar only: variable-length carry chains do not
// map onto fixed-width SIMD lanes.
void axpy_mpz(mpz_class* out, const mpz_class* in, std::size_t len, std::int64_t a);

}  // namespace fano::kernels
