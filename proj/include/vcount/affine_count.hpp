#pragma once

#include <functional>
#include <span>
#include <vector>

#include "vcount/finite_field.hpp"
#include "vcount/int_types.hpp"

namespace vcount {

/// Points of c_1 x_1 + ... + c_k x_k = c with all x_i and c_i nonzero:
/// ((q-1)^k + (-1)^k (q-1)) / q when c = 0, ((q-1)^k - (-1)^k) / q otherwise.
/// The division is exact; a remainder would be a bug and throws.
Int hyperplane_count(unsigned k, bool rhs_is_zero, const Int& q);

/// Product over independent hyperplane blocks of sizes[i] coordinates each.
Int product_count(std::span<const unsigned> sizes, std::span<const char> rhs_is_zero, const Int& q);

struct HyperplaneSpec {
  std::vector<Fq> coeffs;  // all nonzero
  Fq rhs;
};

/// Streams every (x_1..x_k) in (F_q^*)^k with sum c_i x_i = rhs, each exactly
/// once, in a fixed order: the first k-1 coordinates run as an odometer over
/// F_q^* and x_k is solved for.  Total yielded = hyperplane_count.
void for_each_hyperplane_point(const HyperplaneSpec& spec, const FiniteField& field,
                               const std::function<void(std::span<const Fq>)>& visit);

}  // namespace vcount
