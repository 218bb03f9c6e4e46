#pragma once

#include <map>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "fano/exponent.hpp"
#include "fano/linear_form.hpp"

namespace fano {

// Element width of the fixed-precision fast lanes used by
// linear_form_product. w64/w128 run flat machine-word kernels; `arbitrary`
// runs GMP integers.
enum class CoeffWidth { w64, w128, arbitrary };

// Dense multivariate polynomial over exact integers with a fixed per-variable
// exponent cap. Multiplication discards any term whose exponent would exceed
// the cap in some coordinate; discarded coefficients are never computed into
// the result. The cap is set at construction and never coerced: operations on
// mismatched rings throw rather than re-cap.
class TruncPoly {
 public:
  TruncPoly(int num_vars, int cap);  // the zero polynomial
  static TruncPoly one(int num_vars, int cap);

  int num_vars() const { return layout_.num_vars(); }
  int cap() const { return layout_.cap(); }
  const Layout& layout() const { return layout_; }

  bool is_zero() const;
  const mpz_class& coefficient(const ExponentVector& e) const;
  void set_coefficient(const ExponentVector& e, mpz_class value);

  // Nonzero terms keyed by exponent vector; empty iff the zero polynomial.
  std::map<ExponentVector, mpz_class> terms() const;

  std::span<const mpz_class> coefficients() const { return coeffs_; }

  bool operator==(const TruncPoly&) const = default;

  friend TruncPoly add(const TruncPoly& p, const TruncPoly& q);
  friend TruncPoly mul(const TruncPoly& p, const TruncPoly& q);
  friend TruncPoly mul_linear(const TruncPoly& p, const LinearForm& f);
  friend TruncPoly linear_form_product(int num_vars, int cap,
                                       std::span<const LinearForm> factors, CoeffWidth width);

 private:
  Layout layout_;
  std::vector<mpz_class> coeffs_;
};

TruncPoly add(const TruncPoly& p, const TruncPoly& q);
TruncPoly mul(const TruncPoly& p, const TruncPoly& q);
TruncPoly mul_linear(const TruncPoly& p, const LinearForm& f);
TruncPoly pow(const TruncPoly& p, unsigned long e);

// prod over factors of (sum_j |a_j|): bounds the absolute value of every
// coefficient of every intermediate truncated product.
mpz_class coefficient_bound(std::span<const LinearForm> factors);
CoeffWidth select_width(const mpz_class& bound);

// Left fold of mul_linear over `factors` starting from 1, computed in the
// narrowest lane the coefficient bound allows. Bit-identical to the mpz fold.
TruncPoly linear_form_product(int num_vars, int cap, std::span<const LinearForm> factors);
TruncPoly linear_form_product(int num_vars, int cap, std::span<const LinearForm> factors,
                              CoeffWidth width);

}  // namespace fano
