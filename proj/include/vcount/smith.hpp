#pragma once

#include <vector>

#include "vcount/int_types.hpp"

namespace vcount {

/// Smith normal form data for an m x n integer matrix E:
/// u * E * v = diag(d_1..d_s) padded with zeros, u and v unimodular,
/// d_i positive with d_i | d_{i+1}.
struct SmithDecomposition {
  IntMat u;
  IntMat v;
  std::vector<Int> factors;

  Eigen::Index rank() const { return static_cast<Eigen::Index>(factors.size()); }

  /// diag(d_1..d_s) padded to rows x cols.
  IntMat form(Eigen::Index rows, Eigen::Index cols) const;
};

/// Classical row/column reduction with minimal-|entry| pivoting (ties: lowest
/// row, then lowest column) and divisibility fix-up.  Deterministic.  A zero
/// matrix yields rank 0 with identity transforms.
SmithDecomposition snf(const IntMat& e);

/// Checks every decomposition invariant against e: shapes, u*e*v = form,
/// |det u| = |det v| = 1, positive factors, divisibility chain.
bool verify_decomposition(const IntMat& e, const SmithDecomposition& dec);

/// Exact determinant (fraction-free Bareiss elimination).
Int determinant(const IntMat& m);

}  // namespace vcount
