#pragma once

#include <cstddef>
#include <map>

#include <gmpxx.h>

#include "fano/exponent.hpp"
#include "fano/linear_form.hpp"

namespace fano {

// Untruncated sparse polynomial with unbounded exponents, used by the
// brute-force cross-checks. Deliberately independent of the dense TruncPoly
// machinery: it shares no storage, no kernels and no truncation logic.
class SparsePoly {
 public:
  explicit SparsePoly(int num_vars);
  static SparsePoly one(int num_vars);

  int num_vars() const { return num_vars_; }
  std::size_t term_count() const { return terms_.size(); }

  // Accumulates into the term, erasing it when the sum cancels to zero.
  void add_term(const ExponentVector& e, const mpz_class& c);
  mpz_class coefficient(const ExponentVector& e) const;  // 0 when absent

  const std::map<ExponentVector, mpz_class>& terms() const { return terms_; }

  bool operator==(const SparsePoly&) const = default;

 private:
  int num_vars_;
  std::map<ExponentVector, mpz_class> terms_;
};

SparsePoly mul_linear(const SparsePoly& p, const LinearForm& f);

}  // namespace fano
