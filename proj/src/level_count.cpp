#include "vcount/level_count.hpp"

#include <cassert>
#include <cstdint>
#include <vector>

#include "vcount/affine_count.hpp"
#include "vcount/congruence.hpp"
#include "vcount/error.hpp"

namespace vcount {

LevelInstance build_level_instance(const StaircaseSystem& sys, const StaircaseShape& shape,
                                   int level) {
  LevelInstance inst;
  inst.level = level;
  inst.cutoff = level_cutoff(shape, level);
  inst.deletion = deletion_matrix(sys, shape, level);
  inst.dec = snf(inst.deletion);

  auto surviving = [&](const std::vector<Fq>& coeffs, int low_rows, int total_rows,
                       int high_width) {
    std::vector<Fq> kept(coeffs.begin(), coeffs.begin() + low_rows);
    if (high_width <= inst.cutoff)
      kept.insert(kept.end(), coeffs.begin() + low_rows, coeffs.begin() + total_rows);
    return kept;
  };

  // Equation 1's low block is supported on n1 <= every cutoff, so it always
  // contributes an affine constraint.
  inst.equations.push_back({surviving(sys.coeffs1, shape.r1, shape.r2, shape.n2), sys.b1});
  if (shape.n3 <= inst.cutoff) {
    inst.equations.push_back({surviving(sys.coeffs2, shape.r3, shape.r4, shape.n4), sys.b2});
  } else {
    inst.requires_b2_zero = true;  // equation 2 fully deleted: stranded "b2 = 0"
  }
  inst.consistent = !inst.requires_b2_zero || sys.b2 == fq_zero;

  std::size_t total = 0;
  for (const auto& eq : inst.equations) total += eq.coeffs.size();
  assert(static_cast<Eigen::Index>(total) == inst.deletion.rows());
  return inst;
}

namespace {

// Per-equation lists of U-transformed index vectors.  Streaming the Cartesian
// product then reduces to adding two precomputed contribution vectors and
// checking per-row divisibility.
template <typename Scalar>
Int count_accepted(const std::vector<std::vector<Scalar>>& contributions_eq1,
                   const std::vector<std::vector<Scalar>>& contributions_eq2,
                   const std::vector<Scalar>& row_modulus) {
  const std::size_t rows = row_modulus.size();
  Int accepted = 0;
  for (const auto& c1 : contributions_eq1) {
    for (const auto& c2 : contributions_eq2) {
      bool ok = true;
      for (std::size_t i = 0; i < rows && ok; ++i) {
        Scalar sum = c1[i] + c2[i];
        ok = sum % row_modulus[i] == 0;
      }
      if (ok) accepted += 1;
    }
  }
  return accepted;
}

template <typename Scalar, typename Matrix>
std::vector<std::vector<Scalar>> equation_contributions(const LevelEquation& eq,
                                                        const FiniteField& field,
                                                        const Matrix& u, std::size_t col_offset) {
  std::vector<std::vector<Scalar>> out;
  HyperplaneSpec spec{eq.coeffs, eq.rhs};
  const std::size_t rows = static_cast<std::size_t>(u.rows());
  for_each_hyperplane_point(spec, field, [&](std::span<const Fq> x) {
    std::vector<Scalar> c(rows, Scalar(0));
    for (std::size_t j = 0; j < x.size(); ++j) {
      Scalar ind = Scalar(static_cast<long>(field.index_of(x[j])));
      for (std::size_t i = 0; i < rows; ++i)
        c[i] += u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(col_offset + j)) * ind;
    }
    out.push_back(std::move(c));
  });
  return out;
}

}  // namespace

Int compute_h(const LevelInstance& inst, const FiniteField& field) {
  if (!inst.consistent) return 0;

  const Eigen::Index rows = inst.deletion.rows();
  const Int m = Int(static_cast<unsigned long>(field.q() - 1));
  const Eigen::Index rank = inst.dec.rank();

  // The divisibility filter of the congruence criterion, row by row:
  // gcd(q-1, d_i) for i < rank, q-1 afterwards.
  std::vector<Int> moduli(static_cast<std::size_t>(rows));
  for (Eigen::Index i = 0; i < rows; ++i)
    moduli[static_cast<std::size_t>(i)] =
        i < rank ? int_gcd(m, inst.dec.factors[static_cast<std::size_t>(i)]) : m;

  // int64 arithmetic is exact here whenever the transform entries are small,
  // which holds for every desk-scale system; otherwise fall back to bigints.
  Int max_abs = 0;
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < rows; ++j)
      if (abs(inst.dec.u(i, j)) > max_abs) max_abs = abs(inst.dec.u(i, j));
  const bool small = max_abs * (field.q() - 1) * static_cast<unsigned long>(rows == 0 ? 1 : rows) <
                     Int("4611686018427387904");  // 2^62

  std::size_t offset1 = 0;
  std::size_t offset2 = inst.equations[0].coeffs.size();

  if (small) {
    using S = std::int64_t;
    Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> u(rows, rows);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < rows; ++j) u(i, j) = static_cast<S>(inst.dec.u(i, j).get_si());
    std::vector<S> mods(static_cast<std::size_t>(rows));
    for (std::size_t i = 0; i < mods.size(); ++i) mods[i] = static_cast<S>(moduli[i].get_si());

    auto c1 = equation_contributions<S>(inst.equations[0], field, u, offset1);
    std::vector<std::vector<S>> c2;
    if (inst.equations.size() > 1)
      c2 = equation_contributions<S>(inst.equations[1], field, u, offset2);
    else
      c2.push_back(std::vector<S>(static_cast<std::size_t>(rows), 0));
    return count_accepted<S>(c1, c2, mods);
  }

  auto c1 = equation_contributions<Int>(inst.equations[0], field, inst.dec.u, offset1);
  std::vector<std::vector<Int>> c2;
  if (inst.equations.size() > 1)
    c2 = equation_contributions<Int>(inst.equations[1], field, inst.dec.u, offset2);
  else
    c2.push_back(std::vector<Int>(static_cast<std::size_t>(rows), Int(0)));
  return count_accepted<Int>(c1, c2, moduli);
}

Int level_enumeration_cost(const StaircaseShape& shape, int level, const Int& q) {
  const int cutoff = level_cutoff(shape, level);
  Int cost = 1;
  int k1 = shape.r1 + (shape.n2 <= cutoff ? shape.r2 - shape.r1 : 0);
  cost *= int_pow(q - 1, static_cast<unsigned long>(k1 - 1));
  if (shape.n3 <= cutoff) {
    int k2 = shape.r3 + (shape.n4 <= cutoff ? shape.r4 - shape.r3 : 0);
    cost *= int_pow(q - 1, static_cast<unsigned long>(k2 - 1));
  }
  return cost;
}

Int compute_l(const LevelInstance& inst, const Int& h, const FiniteField& field) {
  const Int m = Int(static_cast<unsigned long>(field.q() - 1));
  const Eigen::Index rank = inst.dec.rank();
  if (rank > inst.cutoff)
    fail(Errc::invalid_system, "rank exceeds the level cutoff (broken decomposition)");
  Int l = h * int_pow(m, static_cast<unsigned long>(inst.cutoff - rank));
  for (const Int& d : inst.dec.factors) l *= int_gcd(m, d);
  return l;
}

}  // namespace vcount
