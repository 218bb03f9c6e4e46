#include "fano/kernels.hpp"

#include <algorithm>
#include <stdexcept>

namespace fano::kernels {

namespace {

Backend detect() {
#if defined(__x86_64__) || defined(__i386__)
  if (__builtin_cpu_supports("avx2")) return Backend::avx2;
#elif defined(__aarch64__)
  return Backend::neon;
#endif
  return Backend::scalar;
}

Backend& slot() {
  static Backend b = detect();
  return b;
}

}  // namespace

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
  }
  return "unknown";
}

std::vector<Backend> available_backends() {
  std::vector<Backend> v{Backend::scalar};
#if defined(__x86_64__) || defined(__i386__)
  if (__builtin_cpu_supports("avx2")) v.push_back(Backend::avx2);
#elif defined(__aarch64__)
  v.push_back(Backend::neon);
#endif
  return v;
}

Backend active_backend() { return slot(); }

void set_backend(Backend b) {
  const auto avail = available_backends();
  if (std::find(avail.begin(), avail.end(), b) == avail.end()) {
    throw std::invalid_argument(std::string("backend not available on this host: ") +
                                backend_name(b));
  }
  slot() = b;
}

void reset_backend() { slot() = detect(); }

void axpy_i64_scalar(std::int64_t* out, const std::int64_t* in, std::size_t len,
                     std::int64_t a) {
  // Unsigned arithmetic keeps the modular wraparound well defined; the caller
  // guarantees the mathematical values fit, making the result exact.
  const std::uint64_t ua = static_cast<std::uint64_t>(a);
  for (std::size_t i = 0; i < len; ++i) {
    out[i] = static_cast<std::int64_t>(static_cast<std::uint64_t>(out[i]) +
                                       ua * static_cast<std::uint64_t>(in[i]));
  }
}

void axpy_i64(std::int64_t* out, const std::int64_t* in, std::size_t len, std::int64_t a) {
  switch (slot()) {
#if defined(__x86_64__) || defined(__i386__)
    case Backend::avx2:
      axpy_i64_avx2(out, in, len, a);
      return;
#endif
#if defined(__aarch64__)
    case Backend::neon:
      axpy_i64_neon(out, in, len, a);
      return;
#endif
    default:
      axpy_i64_scalar(out, in, len, a);
      return;
  }
}

void axpy_i128(int128* out, const int128* in, std::size_t len, std::int64_t a) {
  const unsigned __int128 ua = static_cast<unsigned __int128>(static_cast<int128>(a));
  for (std::size_t i = 0; i < len; ++i) {
    out[i] = static_cast<int128>(static_cast<unsigned __int128>(out[i]) +
                                 ua * static_cast<unsigned __int128>(in[i]));
  }
}

void axpy_mpz(mpz_class* out, const mpz_class* in, std::size_t len, std::int64_t a) {
  if (a == 0) return;
  // Modular negation of the unsigned cast yields the magnitude even for
  // INT64_MIN.
  const unsigned long mag =
      a < 0 ? 0ul - static_cast<unsigned long>(a) : static_cast<unsigned long>(a);
  if (a > 0) {
    for (std::size_t i = 0; i < len; ++i) {
      if (mpz_sgn(in[i].get_mpz_t()) != 0)
        mpz_addmul_ui(out[i].get_mpz_t(), in[i].get_mpz_t(), mag);
    }
  } else {
    for (std::size_t i = 0; i < len; ++i) {
      if (mpz_sgn(in[i].get_mpz_t()) != 0)
        mpz_submul_ui(out[i].get_mpz_t(), in[i].get_mpz_t(), mag);
    }
  }
}

}  // namespace fano::kernels
