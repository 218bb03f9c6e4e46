#pragma once

#include <span>
#include <vector>

#include <gmpxx.h>

#include "fano/exponent.hpp"
#include "fano/linear_form.hpp"
#include "fano/problem.hpp"

namespace fano {

// Alternative degree route: chern_root_factors times the difference forms
// x_i - x_j over pairs i < j only, read off at the staircase monomial
// x_0^n x_1^{n-1} ... x_k^{n-k}, with no factorial division. Structurally
// different from plucker_degree (different factor set, different target, no
// division), so agreement is a meaningful cross-check.
std::vector<LinearForm> staircase_integrand(const FanoProblem& p);
ExponentVector staircase_target(const FanoProblem& p);
mpz_class plucker_degree_staircase(const FanoProblem& p);

// Ground truth at desk scale: expands factors * extra^extra_power with no
// truncation in SparsePoly arithmetic and reads off the target coefficient.
// Throws std::invalid_argument when the product degree cannot match the
// target degree (a caller bug, since the product is homogeneous).
mpz_class naive_coefficient(std::span<const LinearForm> factors, const LinearForm& extra,
                            unsigned long extra_power, const ExponentVector& target);

}  // namespace fano
