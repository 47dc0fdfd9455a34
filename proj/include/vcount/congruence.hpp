#pragma once

#include "vcount/int_types.hpp"
#include "vcount/smith.hpp"

namespace vcount {

/// System of linear congruences h * Y = b (mod modulus), modulus >= 2.
struct CongruenceSystem {
  IntMat h;
  IntVec b;
  Int modulus;
};

/// b' = u * b, computed on exact integers (no modular reduction).
IntVec transformed_rhs(const CongruenceSystem& sys, const SmithDecomposition& dec);

/// Solvable iff gcd(modulus, d_i) | b'_i for i <= rank and modulus | b'_i for
/// the remaining rows.
bool is_solvable(const CongruenceSystem& sys, const SmithDecomposition& dec);

/// Number of solutions Y with every coordinate in [0, modulus-1]:
/// modulus^(n - rank) * prod gcd(modulus, d_i) when solvable, else 0.
Int solution_count(const CongruenceSystem& sys, const SmithDecomposition& dec);

}  // namespace vcount
