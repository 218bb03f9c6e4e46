#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace fano {

// Integer-coefficient linear form a_0 x_0 + ... + a_k x_k. Always homogeneous
// of degree one; there is no constant term. Forms coming from compositions
// have nonnegative entries summing to the composition's weight; difference
// forms x_i - x_j carry entries in {-1, 0, 1}.
struct LinearForm {
  std::vector<std::int64_t> coeffs;

  LinearForm() = default;
  explicit LinearForm(std::vector<std::int64_t> c) : coeffs(std::move(c)) {}
  LinearForm(std::initializer_list<std::int64_t> c) : coeffs(c) {}

  static LinearForm unit_sum(int num_vars);                  // x_0 + ... + x_{v-1}
  static LinearForm difference(int num_vars, int i, int j);  // x_i - x_j

  int num_vars() const { return static_cast<int>(coeffs.size()); }
  std::int64_t l1_norm() const;

  bool operator==(const LinearForm&) const = default;
};

}  // namespace fano
