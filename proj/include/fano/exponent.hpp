#pragma once

#include <cstddef>
#include <vector>

namespace fano {

// Exponent tuple (e_0, ..., e_k) addressing the monomial x_0^{e_0}...x_k^{e_k}.
using ExponentVector = std::vector<int>;

long long total_degree(const ExponentVector& e);

// Mixed-radix addressing for dense coefficient storage: with per-variable cap
// c, the exponent vector e maps to sum_j e_j * (c+1)^j. A valid address keeps
// every entry in [0, c].
class Layout {
 public:
  Layout(int num_vars, int cap);

  int num_vars() const { return num_vars_; }
  int cap() const { return cap_; }
  std::size_t size() const { return size_; }
  std::size_t stride(int var) const { return strides_[static_cast<std::size_t>(var)]; }

  // Throws std::invalid_argument on length mismatch, std::out_of_range when an
  // entry is negative or exceeds the cap.
  std::size_t index(const ExponentVector& e) const;
  ExponentVector exponents(std::size_t index) const;

  bool operator==(const Layout&) const = default;

 private:
  int num_vars_;
  int cap_;
  std::vector<std::size_t> strides_;
  std::size_t size_;
};

}  // namespace fano
