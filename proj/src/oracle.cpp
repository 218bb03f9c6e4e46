#include "fano/oracle.hpp"

#include <stdexcept>
#include <string>

#include "fano/invariants.hpp"
#include "fano/sparse_poly.hpp"
#include "fano/trunc_poly.hpp"

namespace fano {

std::vector<LinearForm> staircase_integrand(const FanoProblem& p) {
  std::vector<LinearForm> factors = chern_root_factors(p);
  for (int i = 0; i <= p.k; ++i) {
    for (int j = i + 1; j <= p.k; ++j) factors.push_back(LinearForm::difference(p.k + 1, i, j));
  }
  return factors;
}

ExponentVector staircase_target(const FanoProblem& p) {
  ExponentVector target(static_cast<std::size_t>(p.k + 1));
  for (int i = 0; i <= p.k; ++i) target[static_cast<std::size_t>(i)] = p.n - i;
  return target;
}

mpz_class plucker_degree_staircase(const FanoProblem& p) {
  const std::vector<LinearForm> factors = staircase_integrand(p);
  const ExponentVector target = staircase_target(p);
  if (static_cast<long long>(factors.size()) != total_degree(target))
    throw consistency_error("staircase integrand has total degree " +
                            std::to_string(factors.size()) + ", target monomial has " +
                            std::to_string(total_degree(target)));
  // The target's largest exponent is n, so truncation at cap n loses nothing:
  // multiplying by linear forms only ever raises exponents.
  const TruncPoly product = linear_form_product(p.k + 1, p.n, factors);
  return product.coefficient(target);
}

mpz_class naive_coefficient(std::span<const LinearForm> factors, const LinearForm& extra,
                            unsigned long extra_power, const ExponentVector& target) {
  const long long product_degree =
      static_cast<long long>(factors.size()) + static_cast<long long>(extra_power);
  if (product_degree != total_degree(target))
    throw std::invalid_argument("product of " + std::to_string(product_degree) +
                                " linear factors cannot hit a degree-" +
                                std::to_string(total_degree(target)) + " monomial");
  const int num_vars = static_cast<int>(target.size());
  SparsePoly acc = SparsePoly::one(num_vars);
  for (const LinearForm& f : factors) acc = mul_linear(acc, f);
  for (unsigned long i = 0; i < extra_power; ++i) acc = mul_linear(acc, extra);
  return acc.coefficient(target);
}

}  // namespace fano
