#include "vcount/affine_count.hpp"

#include "vcount/error.hpp"

namespace vcount {

Int hyperplane_count(unsigned k, bool rhs_is_zero, const Int& q) {
  if (k < 1) fail(Errc::bad_argument, "hyperplane needs at least one coordinate");
  if (q < 3) fail(Errc::bad_argument, "q must be >= 3");
  Int pow = int_pow(q - 1, k);
  Int sign = (k % 2 == 0) ? 1 : -1;
  Int num;
  if (rhs_is_zero)
    num = pow + sign * (q - 1);
  else
    num = pow - sign;
  return exact_div(num, q);
}

Int product_count(std::span<const unsigned> sizes, std::span<const char> rhs_is_zero,
                  const Int& q) {
  if (sizes.size() != rhs_is_zero.size() || sizes.empty())
    fail(Errc::bad_argument, "size and rhs-flag lists must be nonempty and equal length");
  Int total = 1;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    total *= hyperplane_count(sizes[i], rhs_is_zero[i] != 0, q);
  return total;
}

void for_each_hyperplane_point(const HyperplaneSpec& spec, const FiniteField& field,
                               const std::function<void(std::span<const Fq>)>& visit) {
  const std::size_t k = spec.coeffs.size();
  if (k == 0) fail(Errc::bad_argument, "hyperplane needs at least one coordinate");
  for (Fq c : spec.coeffs)
    if (c == fq_zero) fail(Errc::bad_argument, "hyperplane coefficients must be nonzero");

  const Fq last_inv = field.inv(spec.coeffs[k - 1]);
  std::vector<Fq> x(k, fq_one);

  if (k == 1) {
    Fq sole = field.mul(last_inv, spec.rhs);
    if (!(sole == fq_zero)) {
      x[0] = sole;
      visit(std::span<const Fq>(x));
    }
    return;
  }

  // Odometer over the free coordinates x_1..x_{k-1} in code order; the last
  // coordinate is solved for and kept only when nonzero.
  const std::uint64_t q = field.q();
  while (true) {
    Fq partial = fq_zero;
    for (std::size_t i = 0; i + 1 < k; ++i) partial = field.add(partial, field.mul(spec.coeffs[i], x[i]));
    Fq solved = field.mul(last_inv, field.sub(spec.rhs, partial));
    if (!(solved == fq_zero)) {
      x[k - 1] = solved;
      visit(std::span<const Fq>(x));
    }
    std::size_t i = 0;
    while (i + 1 < k) {
      if (x[i].v + 1 < q) {
        x[i] = Fq{x[i].v + 1};
        break;
      }
      x[i] = fq_one;
      ++i;
    }
    if (i + 1 == k) break;
  }
}

}  // namespace vcount
