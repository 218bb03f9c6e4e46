#include "fano/sparse_poly.hpp"

#include <stdexcept>
#include <string>

namespace fano {

SparsePoly::SparsePoly(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 1) throw std::invalid_argument("polynomial needs at least one variable");
}

SparsePoly SparsePoly::one(int num_vars) {
  SparsePoly p(num_vars);
  p.terms_.emplace(ExponentVector(static_cast<std::size_t>(num_vars), 0), mpz_class(1));
  return p;
}

void SparsePoly::add_term(const ExponentVector& e, const mpz_class& c) {
  if (static_cast<int>(e.size()) != num_vars_)
    throw std::invalid_argument("exponent vector length mismatch");
  if (mpz_sgn(c.get_mpz_t()) == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (mpz_sgn(it->second.get_mpz_t()) == 0) terms_.erase(it);
  }
}

mpz_class SparsePoly::coefficient(const ExponentVector& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

SparsePoly mul_linear(const SparsePoly& p, const LinearForm& f) {
  if (f.num_vars() != p.num_vars())
    throw std::invalid_argument("linear form has " + std::to_string(f.num_vars()) +
                                " coefficients, polynomial has " +
                                std::to_string(p.num_vars()) + " variables");
  SparsePoly out(p.num_vars());
  for (const auto& [e, c] : p.terms()) {
    for (int j = 0; j < f.num_vars(); ++j) {
      const std::int64_t a = f.coeffs[static_cast<std::size_t>(j)];
      if (a == 0) continue;
      ExponentVector shifted = e;
      ++shifted[static_cast<std::size_t>(j)];
      out.add_term(shifted, c * a);
    }
  }
  return out;
}

}  // namespace fano
