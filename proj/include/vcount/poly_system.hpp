#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vcount/finite_field.hpp"

namespace vcount {

/// coef * prod x_j^{exponents[j]}; exponent 0 means the variable is absent.
struct PolyTerm {
  Fq coef;
  std::vector<std::uint32_t> exponents;  // length = ambient dimension
};

struct Polynomial {
  std::vector<PolyTerm> terms;  // sum; constants are exponent-free terms
};

/// Arbitrary multivariate system over F_q; the brute-force oracle input.
struct PolySystem {
  FiniteField field;
  std::uint32_t nvars = 0;
  std::vector<Polynomial> polys;
};

/// Evaluates with the 0^0 = 1 convention (exponent 0 = absent variable).
Fq evaluate(const FiniteField& field, const Polynomial& poly, std::span<const Fq> point);

}  // namespace vcount
