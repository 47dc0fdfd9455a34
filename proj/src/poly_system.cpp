#include "vcount/poly_system.hpp"

#include "vcount/error.hpp"

namespace vcount {

Fq evaluate(const FiniteField& field, const Polynomial& poly, std::span<const Fq> point) {
  Fq acc = fq_zero;
  for (const PolyTerm& term : poly.terms) {
    if (term.exponents.size() != point.size())
      fail(Errc::dimension_mismatch, "point length does not match the term's exponent vector");
    Fq v = term.coef;
    for (std::size_t j = 0; j < point.size() && !(v == fq_zero); ++j) {
      if (term.exponents[j] == 0) continue;  // absent variable, 0^0 = 1
      v = field.mul(v, field.pow(point[j], term.exponents[j]));
    }
    acc = field.add(acc, v);
  }
  return acc;
}

}  // namespace vcount
