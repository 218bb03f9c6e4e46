#include "fano/trunc_poly.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "fano/kernels.hpp"

namespace fano {

namespace {

// Dense storage is (cap+1)^num_vars cells of exact integers; refuse rings
// that cannot possibly be materialized.
constexpr std::size_t kMaxCells = std::size_t{1} << 28;

[[noreturn]] void throw_ring_mismatch(const Layout& a, const Layout& b) {
  throw std::invalid_argument("ring mismatch: " + std::to_string(a.num_vars()) +
                              " vars cap " + std::to_string(a.cap()) + " vs " +
                              std::to_string(b.num_vars()) + " vars cap " +
                              std::to_string(b.cap()));
}

}  // namespace

long long total_degree(const ExponentVector& e) {
  long long t = 0;
  for (int x : e) t += x;
  return t;
}

Layout::Layout(int num_vars, int cap) : num_vars_(num_vars), cap_(cap) {
  if (num_vars < 1) throw std::invalid_argument("layout needs at least one variable");
  if (cap < 0) throw std::invalid_argument("exponent cap must be nonnegative");
  const std::size_t radix = static_cast<std::size_t>(cap) + 1;
  strides_.resize(static_cast<std::size_t>(num_vars));
  size_ = 1;
  for (int j = 0; j < num_vars; ++j) {
    strides_[static_cast<std::size_t>(j)] = size_;
    if (size_ > kMaxCells / radix) throw std::invalid_argument("ring too large to materialize");
    size_ *= radix;
  }
}

std::size_t Layout::index(const ExponentVector& e) const {
  if (static_cast<int>(e.size()) != num_vars_)
    throw std::invalid_argument("exponent vector has " + std::to_string(e.size()) +
                                " entries, ring has " + std::to_string(num_vars_) +
                                " variables");
  std::size_t idx = 0;
  for (int j = 0; j < num_vars_; ++j) {
    const int ej = e[static_cast<std::size_t>(j)];
    if (ej < 0 || ej > cap_)
      throw std::out_of_range("exponent " + std::to_string(ej) + " outside [0, " +
                              std::to_string(cap_) + "]");
    idx += static_cast<std::size_t>(ej) * strides_[static_cast<std::size_t>(j)];
  }
  return idx;
}

ExponentVector Layout::exponents(std::size_t index) const {
  if (index >= size_) throw std::out_of_range("cell index outside the ring");
  ExponentVector e(static_cast<std::size_t>(num_vars_));
  const std::size_t radix = static_cast<std::size_t>(cap_) + 1;
  for (int j = 0; j < num_vars_; ++j) {
    e[static_cast<std::size_t>(j)] = static_cast<int>(index % radix);
    index /= radix;
  }
  return e;
}

LinearForm LinearForm::unit_sum(int num_vars) {
  return LinearForm(std::vector<std::int64_t>(static_cast<std::size_t>(num_vars), 1));
}

LinearForm LinearForm::difference(int num_vars, int i, int j) {
  LinearForm f(std::vector<std::int64_t>(static_cast<std::size_t>(num_vars), 0));
  f.coeffs.at(static_cast<std::size_t>(i)) = 1;
  f.coeffs.at(static_cast<std::size_t>(j)) = -1;
  return f;
}

std::int64_t LinearForm::l1_norm() const {
  std::int64_t s = 0;
  for (std::int64_t a : coeffs) s += a < 0 ? -a : a;
  return s;
}

TruncPoly::TruncPoly(int num_vars, int cap)
    : layout_(num_vars, cap), coeffs_(layout_.size()) {}

TruncPoly TruncPoly::one(int num_vars, int cap) {
  TruncPoly p(num_vars, cap);
  p.coeffs_[0] = 1;
  return p;
}

bool TruncPoly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const mpz_class& c) { return mpz_sgn(c.get_mpz_t()) == 0; });
}

const mpz_class& TruncPoly::coefficient(const ExponentVector& e) const {
  return coeffs_[layout_.index(e)];
}

void TruncPoly::set_coefficient(const ExponentVector& e, mpz_class value) {
  coeffs_[layout_.index(e)] = std::move(value);
}

std::map<ExponentVector, mpz_class> TruncPoly::terms() const {
  std::map<ExponentVector, mpz_class> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (mpz_sgn(coeffs_[i].get_mpz_t()) != 0) out.emplace(layout_.exponents(i), coeffs_[i]);
  }
  return out;
}

TruncPoly add(const TruncPoly& p, const TruncPoly& q) {
  if (p.layout_ != q.layout_) throw_ring_mismatch(p.layout_, q.layout_);
  TruncPoly out = p;
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += q.coeffs_[i];
  return out;
}

TruncPoly mul(const TruncPoly& p, const TruncPoly& q) {
  if (p.layout_ != q.layout_) throw_ring_mismatch(p.layout_, q.layout_);
  const Layout& L = p.layout_;
  const int nv = L.num_vars();
  const int cap = L.cap();
  TruncPoly out(nv, cap);
  for (std::size_t iq = 0; iq < q.coeffs_.size(); ++iq) {
    const mpz_class& qc = q.coeffs_[iq];
    if (mpz_sgn(qc.get_mpz_t()) == 0) continue;
    const ExponentVector eq = L.exponents(iq);
    // Walk the box of p-exponents that stay within the cap after adding eq.
    // Digitwise sums never exceed cap, so flat indices add without carries.
    ExponentVector e(static_cast<std::size_t>(nv), 0);
    std::size_t off = 0;
    for (;;) {
      out.coeffs_[off + iq] += p.coeffs_[off] * qc;
      int d = 0;
      while (d < nv && e[static_cast<std::size_t>(d)] == cap - eq[static_cast<std::size_t>(d)]) {
        off -= static_cast<std::size_t>(e[static_cast<std::size_t>(d)]) * L.stride(d);
        e[static_cast<std::size_t>(d)] = 0;
        ++d;
      }
      if (d == nv) break;
      ++e[static_cast<std::size_t>(d)];
      off += L.stride(d);
    }
  }
  return out;
}

TruncPoly mul_linear(const TruncPoly& p, const LinearForm& f) {
  const Layout& L = p.layout_;
  if (f.num_vars() != L.num_vars())
    throw std::invalid_argument("linear form has " + std::to_string(f.num_vars()) +
                                " coefficients, ring has " + std::to_string(L.num_vars()) +
                                " variables");
  TruncPoly out(L.num_vars(), L.cap());
  const std::size_t radix = static_cast<std::size_t>(L.cap()) + 1;
  for (int j = 0; j < L.num_vars(); ++j) {
    const std::int64_t a = f.coeffs[static_cast<std::size_t>(j)];
    if (a == 0) continue;
    // Cells whose j-th digit is below the cap form contiguous runs of length
    // stride(j)*cap inside each block of stride(j)*(cap+1); shifting by one
    // stride realizes the multiplication by x_j.
    const std::size_t s = L.stride(j);
    const std::size_t block = s * radix;
    const std::size_t run = s * static_cast<std::size_t>(L.cap());
    for (std::size_t base = 0; base < L.size(); base += block)
      kernels::axpy_mpz(out.coeffs_.data() + base + s, p.coeffs_.data() + base, run, a);
  }
  return out;
}

TruncPoly pow(const TruncPoly& p, unsigned long e) {
  TruncPoly result = TruncPoly::one(p.num_vars(), p.cap());
  if (e == 0) return result;
  TruncPoly base = p;
  for (;;) {
    if (e & 1ul) result = mul(result, base);
    e >>= 1;
    if (e == 0) break;
    base = mul(base, base);
  }
  return result;
}

mpz_class coefficient_bound(std::span<const LinearForm> factors) {
  mpz_class bound = 1;
  for (const LinearForm& f : factors) bound *= f.l1_norm();
  return bound;
}

CoeffWidth select_width(const mpz_class& bound) {
  static const mpz_class max64 = mpz_class(std::numeric_limits<std::int64_t>::max());
  static const mpz_class max128 = (mpz_class(1) << 127) - 1;
  if (bound <= max64) return CoeffWidth::w64;
  if (bound <= max128) return CoeffWidth::w128;
  return CoeffWidth::arbitrary;
}

namespace {

mpz_class mpz_from_i128(kernels::int128 v) {
  const bool neg = v < 0;
  unsigned __int128 mag =
      neg ? 0 - static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  mpz_class out = static_cast<unsigned long>(mag >> 64);
  out <<= 64;
  out += static_cast<unsigned long>(mag);
  if (neg) out = -out;
  return out;
}

// One multiply-by-linear-form step on flat storage: out must be zeroed by the
// caller; axpy accumulates the j-th shifted copy scaled by a_j.
template <typename T, typename Axpy>
void fold_step(const Layout& L, const LinearForm& f, const std::vector<T>& in,
               std::vector<T>& out, Axpy&& axpy) {
  const std::size_t radix = static_cast<std::size_t>(L.cap()) + 1;
  for (int j = 0; j < L.num_vars(); ++j) {
    const std::int64_t a = f.coeffs[static_cast<std::size_t>(j)];
    if (a == 0) continue;
    const std::size_t s = L.stride(j);
    const std::size_t block = s * radix;
    const std::size_t run = s * static_cast<std::size_t>(L.cap());
    for (std::size_t base = 0; base < L.size(); base += block)
      axpy(out.data() + base + s, in.data() + base, run, a);
  }
}

template <typename T, typename Axpy>
std::vector<T> run_fold(const Layout& L, std::span<const LinearForm> factors, Axpy&& axpy) {
  std::vector<T> cur(L.size(), T(0));
  std::vector<T> next(L.size(), T(0));
  cur[0] = T(1);
  for (const LinearForm& f : factors) {
    if (f.num_vars() != L.num_vars())
      throw std::invalid_argument("linear form has " + std::to_string(f.num_vars()) +
                                  " coefficients, ring has " +
                                  std::to_string(L.num_vars()) + " variables");
    std::fill(next.begin(), next.end(), T(0));
    fold_step(L, f, cur, next, axpy);
    std::swap(cur, next);
  }
  return cur;
}

}  // namespace

TruncPoly linear_form_product(int num_vars, int cap, std::span<const LinearForm> factors,
                              CoeffWidth width) {
  TruncPoly out(num_vars, cap);
  const Layout& L = out.layout_;
  switch (width) {
    case CoeffWidth::w64: {
      const auto flat = run_fold<std::int64_t>(L, factors, kernels::axpy_i64);
      for (std::size_t i = 0; i < flat.size(); ++i)
        if (flat[i] != 0) out.coeffs_[i] = static_cast<long>(flat[i]);
      break;
    }
    case CoeffWidth::w128: {
      const auto flat = run_fold<kernels::int128>(L, factors, kernels::axpy_i128);
      for (std::size_t i = 0; i < flat.size(); ++i)
        if (flat[i] != 0) out.coeffs_[i] = mpz_from_i128(flat[i]);
      break;
    }
    case CoeffWidth::arbitrary: {
      auto flat = run_fold<mpz_class>(L, factors, kernels::axpy_mpz);
      out.coeffs_ = std::move(flat);
      break;
    }
  }
  return out;
}

TruncPoly linear_form_product(int num_vars, int cap, std::span<const LinearForm> factors) {
  return linear_form_product(num_vars, cap, factors,
                             select_width(coefficient_bound(factors)));
}

}  // namespace fano
