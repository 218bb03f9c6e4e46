#include "fano/invariants.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "fano/oracle.hpp"
#include "fano/trunc_poly.hpp"

namespace fano {

mpz_class binomial(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, static_cast<unsigned long>(k));
  return out;
}

mpz_class factorial(unsigned long n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

FanoProblem::FanoProblem(int n_, std::vector<int> degrees_, int k_)
    : n(n_), degrees(std::move(degrees_)), k(k_) {
  if (k < 1) throw invalid_problem("k must be at least 1, got " + std::to_string(k));
  if (n < k + 1)
    throw invalid_problem("n must be at least k+1 = " + std::to_string(k + 1) + ", got " +
                          std::to_string(n));
  if (degrees.empty()) throw invalid_problem("at least one degree is required");
  for (int d : degrees) {
    if (d < 2)
      throw invalid_problem("every degree must be at least 2, got " + std::to_string(d));
  }
}

bool FanoProblem::all_quadrics() const {
  return std::all_of(degrees.begin(), degrees.end(), [](int d) { return d == 2; });
}

mpz_class expected_dimension(const FanoProblem& p) {
  mpz_class delta = mpz_class(p.k + 1) * (p.n - p.k);
  for (int d : p.degrees)
    delta -= binomial(static_cast<unsigned long>(d) + static_cast<unsigned long>(p.k), p.k);
  return delta;
}

HypothesisCheck check_hypotheses(const FanoProblem& p) {
  const mpz_class lhs = mpz_class(p.k + 1) * (p.n - p.k);
  mpz_class rhs = 0;
  for (int d : p.degrees)
    rhs += binomial(static_cast<unsigned long>(d) + static_cast<unsigned long>(p.k), p.k);
  if (lhs < rhs) {
    return {false, "dimension count fails: (k+1)(n-k) = " + lhs.get_str() + " < " +
                       rhs.get_str() + " = sum_i binom(d_i+k, k)"};
  }
  if (p.all_quadrics()) {
    const long long needed = 2ll * p.k + p.r();
    if (p.n < needed) {
      return {false, "all-quadrics case requires n >= 2k + r: n = " + std::to_string(p.n) +
                         " < " + std::to_string(needed)};
    }
  }
  return {true, "hypotheses hold"};
}

std::vector<ExponentVector> compositions(int d, int parts) {
  std::vector<ExponentVector> out;
  ExponentVector cur(static_cast<std::size_t>(parts), 0);
  // Descending choice at each position yields descending lex order overall.
  const auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == parts - 1) {
      cur[static_cast<std::size_t>(pos)] = remaining;
      out.push_back(cur);
      return;
    }
    for (int a = remaining; a >= 0; --a) {
      cur[static_cast<std::size_t>(pos)] = a;
      self(self, pos + 1, remaining - a);
    }
  };
  rec(rec, 0, d);
  return out;
}

std::vector<LinearForm> symmetric_power_forms(int d, int k) {
  std::vector<LinearForm> out;
  for (const ExponentVector& a : compositions(d, k + 1)) {
    std::vector<std::int64_t> coeffs(a.begin(), a.end());
    out.emplace_back(std::move(coeffs));
  }
  return out;
}

mpz_class sym_power_rank(int m, int k) {
  return binomial(static_cast<unsigned long>(m) + static_cast<unsigned long>(k), k);
}

mpz_class sym_power_c1_factor(int m, int k) {
  return binomial(static_cast<unsigned long>(m) + static_cast<unsigned long>(k), k + 1);
}

mpz_class canonical_coefficient(const FanoProblem& p) {
  mpz_class sum = 0;
  for (int d : p.degrees) sum += sym_power_c1_factor(d, p.k);
  return sum - p.n - 1;
}

std::vector<LinearForm> chern_root_factors(const FanoProblem& p) {
  const mpz_class delta = expected_dimension(p);
  if (delta < 0)
    throw invalid_problem("expected dimension is negative: delta = " + delta.get_str());
  std::vector<LinearForm> factors;
  for (int d : p.degrees) {
    for (LinearForm& f : symmetric_power_forms(d, p.k)) factors.push_back(std::move(f));
  }
  const unsigned long hyperplane_power = delta.get_ui();  // delta <= (k+1)(n-k)
  for (unsigned long i = 0; i < hyperplane_power; ++i)
    factors.push_back(LinearForm::unit_sum(p.k + 1));
  return factors;
}

std::vector<LinearForm> degree_integrand(const FanoProblem& p) {
  std::vector<LinearForm> factors = chern_root_factors(p);
  for (int i = 0; i <= p.k; ++i) {
    for (int j = 0; j <= p.k; ++j) {
      if (i != j) factors.push_back(LinearForm::difference(p.k + 1, i, j));
    }
  }
  return factors;
}

mpz_class plucker_degree(const FanoProblem& p) {
  const std::vector<LinearForm> factors = degree_integrand(p);
  // Every factor is homogeneous of degree one, so the integrand's total degree
  // is the factor count; it must match the target monomial's total degree.
  const unsigned long long target_degree =
      static_cast<unsigned long long>(p.k + 1) * static_cast<unsigned long long>(p.n);
  if (factors.size() != target_degree)
    throw consistency_error("integrand has total degree " + std::to_string(factors.size()) +
                            ", target monomial has " + std::to_string(target_degree));
  const TruncPoly product = linear_form_product(p.k + 1, p.n, factors);
  const mpz_class c =
      product.coefficient(ExponentVector(static_cast<std::size_t>(p.k + 1), p.n));
  const mpz_class divisor = factorial(static_cast<unsigned long>(p.k) + 1);
  if (!mpz_divisible_p(c.get_mpz_t(), divisor.get_mpz_t()))
    throw consistency_error("coefficient " + c.get_str() + " is not divisible by (k+1)! = " +
                            divisor.get_str());
  mpz_class degree;
  mpz_divexact(degree.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
  if (check_hypotheses(p).ok && degree <= 0)
    throw consistency_error("degree " + degree.get_str() +
                            " is nonpositive although the hypotheses hold");
  return degree;
}

mpz_class genus_from_degree(const FanoProblem& p, const mpz_class& degree) {
  const mpz_class delta = expected_dimension(p);
  if (delta != 1)
    throw invalid_problem("genus is defined only when delta = 1, got delta = " +
                          delta.get_str());
  const mpz_class numerator = canonical_coefficient(p) * degree;
  if (mpz_odd_p(numerator.get_mpz_t()))
    throw consistency_error("genus numerator " + numerator.get_str() + " is odd");
  return 1 + numerator / 2;
}

namespace {

long long to_longlong(const mpz_class& v, const char* what) {
  if (!v.fits_slong_p())
    throw invalid_problem(std::string(what) + " exceeds the reportable integer range: " +
                          v.get_str());
  return v.get_si();
}

}  // namespace

InvariantsReport compute_report(const FanoProblem& p, bool check_oracle) {
  InvariantsReport report;
  report.n = p.n;
  report.degrees = p.degrees;
  report.k = p.k;

  const mpz_class delta = expected_dimension(p);
  if (delta < 0)
    throw invalid_problem("expected dimension is negative: delta = " + delta.get_str());
  report.delta = to_longlong(delta, "delta");

  const HypothesisCheck hyp = check_hypotheses(p);
  report.hypothesis_ok = hyp.ok;
  report.hypothesis_reason = hyp.reason;
  report.canonical_coefficient = to_longlong(canonical_coefficient(p), "canonical coefficient");

  const auto t0 = std::chrono::steady_clock::now();
  report.degree = plucker_degree(p);
  if (delta == 1) report.genus = genus_from_degree(p, report.degree);
  if (check_oracle) {
    const mpz_class alt = plucker_degree_staircase(p);
    if (alt != report.degree)
      throw consistency_error("degree formulas disagree: coefficient route = " +
                              report.degree.get_str() + ", staircase route = " +
                              alt.get_str());
    report.oracle_checked = true;
  }
  const auto t1 = std::chrono::steady_clock::now();
  report.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return report;
}

}  // namespace fano
