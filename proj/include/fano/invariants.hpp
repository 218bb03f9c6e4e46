#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "fano/exponent.hpp"
#include "fano/linear_form.hpp"
#include "fano/problem.hpp"

namespace fano {

mpz_class binomial(unsigned long n, long k);  // 0 when k < 0 or k > n
mpz_class factorial(unsigned long n);

struct HypothesisCheck {
  bool ok = false;
  std::string reason;
};

struct InvariantsReport {
  int n = 0;
  std::vector<int> degrees;
  int k = 0;
  long long delta = 0;
  bool hypothesis_ok = false;
  std::string hypothesis_reason;
  mpz_class degree;
  std::optional<mpz_class> genus;  // present iff delta == 1
  long long canonical_coefficient = 0;
  bool oracle_checked = false;
  double elapsed_ms = 0.0;

  bool operator==(const InvariantsReport&) const = default;
};

// (k+1)(n-k) - sum_i binom(d_i+k, k), the expected dimension of the family.
mpz_class expected_dimension(const FanoProblem& p);

// Dimension inequality, plus n >= 2k+r in the all-quadrics case. A failed
// check does not block computation; callers decide what a formal value means.
HypothesisCheck check_hypotheses(const FanoProblem& p);

// All tuples of `parts` nonnegative integers summing to d, ordered by
// descending lexicographic comparison: (d,0,...,0) first, (0,...,0,d) last.
std::vector<ExponentVector> compositions(int d, int parts);

// One linear form per composition of d into k+1 parts; these are the Chern
// roots of the d-th symmetric power of a rank-(k+1) bundle written in the
// roots x_0..x_k of the bundle itself.
std::vector<LinearForm> symmetric_power_forms(int d, int k);

mpz_class sym_power_rank(int m, int k);       // binom(m+k, k)
mpz_class sym_power_c1_factor(int m, int k);  // binom(m+k, k+1)

// sum_i binom(d_i+k, k+1) - n - 1; twice the genus slope in
// g = 1 + canonical_coefficient * degree / 2.
mpz_class canonical_coefficient(const FanoProblem& p);

// Symmetric-power forms for every d_i (input order, compositions in
// descending lex order) followed by delta copies of x_0+...+x_k.
// Throws invalid_problem when the expected dimension is negative.
std::vector<LinearForm> chern_root_factors(const FanoProblem& p);

// chern_root_factors plus the difference forms x_i - x_j over all ordered
// pairs i != j in lexicographic (i, j) order.
std::vector<LinearForm> degree_integrand(const FanoProblem& p);

// Degree of the family under the Pluecker embedding: the coefficient of
// x_0^n...x_k^n in the degree_integrand product, divided by (k+1)!.
// Divisibility is a hard assertion (consistency_error), never a rounding.
mpz_class plucker_degree(const FanoProblem& p);

// 1 + canonical_coefficient * degree / 2, defined when delta == 1. Parity of
// the numerator is a hard assertion.
mpz_class genus_from_degree(const FanoProblem& p, const mpz_class& degree);

// Full pipeline: delta, hypothesis flags, degree, genus when delta == 1, and
// optionally the independent staircase-formula cross-check (disagreement is a
// consistency_error naming both values).
InvariantsReport compute_report(const FanoProblem& p, bool check_oracle = false);

}  // namespace fano
