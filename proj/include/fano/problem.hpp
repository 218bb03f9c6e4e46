#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fano {

// A problem the caller posed that cannot be computed: structural defects
// (k < 1, d_i < 2, n <= k) or a negative expected dimension.
class invalid_problem : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exact-arithmetic postcondition failed: divisibility, parity, positivity
// or cross-formula agreement. Always an implementation bug, never a
// legitimate answer.
class consistency_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// k-planes on a general complete intersection of multidegree `degrees` in
// projective n-space.
struct FanoProblem {
  int n = 0;
  std::vector<int> degrees;
  int k = 0;

  // Validates n > k >= 1, r >= 1 and every d_i >= 2; throws invalid_problem.
  FanoProblem(int n_, std::vector<int> degrees_, int k_);

  int r() const { return static_cast<int>(degrees.size()); }
  bool all_quadrics() const;

  bool operator==(const FanoProblem&) const = default;
};

}  // namespace fano
