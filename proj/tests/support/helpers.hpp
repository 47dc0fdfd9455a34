#pragma once

// Shared test fixtures and independent reference oracles.  Everything here
// deliberately avoids the code paths it is used to check: determinants are
// cofactor expansions, counts are plain enumerations.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "vcount/affine_count.hpp"
#include "vcount/congruence.hpp"
#include "vcount/finite_field.hpp"
#include "vcount/int_types.hpp"
#include "vcount/level_count.hpp"
#include "vcount/point_count.hpp"
#include "vcount/staircase.hpp"

namespace vcount::testsupport {

/// Runs fn and reports the Errc it threw; fails loudly when nothing threw.
template <typename F>
Errc thrown_code(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return static_cast<Errc>(-1);
}

inline IntMat make_mat(std::initializer_list<std::initializer_list<long>> rows) {
  const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index c = static_cast<Eigen::Index>(rows.begin()->size());
  IntMat m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

/// The worked F_7 system: x1*x2^4 + x1*x2^5 + x1^2*x2^3*x3*x4^4 = 2 and
/// x1*x2^5*x3^3 + x1*x2^3*x3^2 + x1^2*x2^4*x3^3*x4^5*x5*x6 = 4.
inline StaircaseSystem example41() {
  StaircaseSystem sys;
  sys.field = FiniteField::make(7, 1);
  sys.coeffs1 = {fq_one, fq_one, fq_one};
  sys.coeffs2 = {fq_one, fq_one, fq_one};
  sys.exps1 = make_mat({{1, 4, 0, 0, 0, 0}, {1, 5, 0, 0, 0, 0}, {2, 3, 1, 4, 0, 0}});
  sys.exps2 = make_mat({{1, 5, 3, 0, 0, 0}, {1, 3, 2, 0, 0, 0}, {2, 4, 3, 5, 1, 1}});
  sys.b1 = sys.field.from_integer(2);
  sys.b2 = sys.field.from_integer(4);
  return sys;
}

/// Cofactor-expansion determinant, independent of the Bareiss routine.
inline Int cofactor_det(const IntMat& m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int total = 0;
  for (Eigen::Index c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    IntMat sub(n - 1, n - 1);
    for (Eigen::Index i = 1; i < n; ++i) {
      Eigen::Index jj = 0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == c) continue;
        sub(i - 1, jj++) = m(i, j);
      }
    }
    Int term = m(0, c) * cofactor_det(sub);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

/// Invariant factors through the gcd of all k x k minors (dims <= 4ish).
inline std::vector<Int> minor_gcd_invariant_factors(const IntMat& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  std::vector<Int> gcds;  // gcds[k-1] = gcd of all k x k minors
  for (Eigen::Index k = 1; k <= std::min(rows, cols); ++k) {
    Int g = 0;
    std::vector<Eigen::Index> ri(static_cast<std::size_t>(k)), ci(static_cast<std::size_t>(k));
    // iterate k-subsets of rows and columns via odometer
    auto next_subset = [](std::vector<Eigen::Index>& s, Eigen::Index limit) {
      int i = static_cast<int>(s.size()) - 1;
      while (i >= 0) {
        if (++s[static_cast<std::size_t>(i)] <=
            limit - (static_cast<Eigen::Index>(s.size()) - i)) {
          for (std::size_t j = static_cast<std::size_t>(i) + 1; j < s.size(); ++j)
            s[j] = s[j - 1] + 1;
          return true;
        }
        --i;
      }
      return false;
    };
    for (Eigen::Index i = 0; i < k; ++i) ri[static_cast<std::size_t>(i)] = i;
    do {
      for (Eigen::Index i = 0; i < k; ++i) ci[static_cast<std::size_t>(i)] = i;
      do {
        IntMat sub(k, k);
        for (Eigen::Index a = 0; a < k; ++a)
          for (Eigen::Index b = 0; b < k; ++b)
            sub(a, b) = m(ri[static_cast<std::size_t>(a)], ci[static_cast<std::size_t>(b)]);
        g = int_gcd(g, cofactor_det(sub));
      } while (next_subset(ci, cols));
    } while (next_subset(ri, rows));
    gcds.push_back(g);
  }
  std::vector<Int> factors;
  Int prev = 1;
  for (const Int& g : gcds) {
    if (g == 0) break;
    factors.push_back(exact_div(g, prev));
    prev = g;
  }
  return factors;
}

/// Residue enumeration of H*Y = B (mod m) over [0, m)^n.
inline Int enumerate_congruence_count(const IntMat& h, const IntVec& b, long m) {
  const Eigen::Index rows = h.rows(), n = h.cols();
  std::vector<long> y(static_cast<std::size_t>(n), 0);
  Int count = 0;
  while (true) {
    bool ok = true;
    for (Eigen::Index i = 0; i < rows && ok; ++i) {
      Int acc = 0;
      for (Eigen::Index j = 0; j < n; ++j) acc += h(i, j) * y[static_cast<std::size_t>(j)];
      acc -= b(i);
      Int r = acc % m;
      ok = r == 0;
    }
    if (ok) count += 1;
    Eigen::Index j = 0;
    while (j < n) {
      if (++y[static_cast<std::size_t>(j)] < m) break;
      y[static_cast<std::size_t>(j)] = 0;
      ++j;
    }
    if (j == n) break;
  }
  return count;
}

/// The literal filter route for H: stream the affine tuples per equation and
/// keep those whose index vector makes the congruence system solvable.
inline Int reference_h(const LevelInstance& inst, const FiniteField& field) {
  if (!inst.consistent) return 0;
  std::vector<std::vector<std::vector<Fq>>> per_eq;
  for (const LevelEquation& eq : inst.equations) {
    std::vector<std::vector<Fq>> sols;
    for_each_hyperplane_point({eq.coeffs, eq.rhs}, field, [&](std::span<const Fq> x) {
      sols.emplace_back(x.begin(), x.end());
    });
    per_eq.push_back(std::move(sols));
  }
  for (const auto& sols : per_eq)
    if (sols.empty()) return 0;  // no tuples to filter at all
  const Int m = Int(static_cast<unsigned long>(field.q() - 1));
  Int h = 0;
  std::vector<std::size_t> pick(per_eq.size(), 0);
  while (true) {
    IntVec b(inst.deletion.rows());
    Eigen::Index at = 0;
    for (std::size_t e = 0; e < per_eq.size(); ++e)
      for (Fq u : per_eq[e][pick[e]])
        b(at++) = Int(static_cast<unsigned long>(field.index_of(u)));
    if (is_solvable({inst.deletion, b, m}, inst.dec)) h += 1;
    std::size_t e = 0;
    while (e < per_eq.size()) {
      if (++pick[e] < per_eq[e].size()) break;
      pick[e] = 0;
      ++e;
    }
    if (e == per_eq.size()) break;
  }
  return h;
}

inline std::uint64_t rnd(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return lo + rng() % (hi - lo + 1);
}

struct BPattern {
  bool b1_zero;
  bool b2_zero;
};

/// Random valid staircase system whose shape lands in the requested case.
inline StaircaseSystem random_staircase(std::mt19937_64& rng, const FiniteField& field,
                                        CaseLabel target, BPattern bp, int max_exp = 6,
                                        int max_block = 2) {
  int n1 = 0, n2 = 0, n3 = 0, n4 = 0;
  switch (target) {
    case CaseLabel::n1_n3_n2_n4:
      n3 = static_cast<int>(rnd(rng, 2, 4));
      n1 = static_cast<int>(rnd(rng, 1, static_cast<std::uint64_t>(n3 - 1)));
      n2 = static_cast<int>(rnd(rng, static_cast<std::uint64_t>(n3 + 1), 5));
      n4 = static_cast<int>(rnd(rng, static_cast<std::uint64_t>(n2 + 1), 6));
      break;
    case CaseLabel::n2_eq_n3:
      n2 = static_cast<int>(rnd(rng, 2, 5));
      n3 = n2;
      n1 = static_cast<int>(rnd(rng, 1, static_cast<std::uint64_t>(n2 - 1)));
      n4 = static_cast<int>(rnd(rng, static_cast<std::uint64_t>(n3 + 1), 6));
      break;
    case CaseLabel::n1_eq_n3_n2_lt:
      n1 = static_cast<int>(rnd(rng, 1, 4));
      n3 = n1;
      n2 = static_cast<int>(rnd(rng, static_cast<std::uint64_t>(n1 + 1), 5));
      n4 = static_cast<int>(rnd(rng, static_cast<std::uint64_t>(n2 + 1), 6));
      break;
    case CaseLabel::n2_eq_n4:
      n3 = static_cast<int>(rnd(rng, 2, 5));
      n1 = static_cast<int>(rnd(rng, 1, static_cast<std::uint64_t>(n3 - 1)));
      n4 = static_cast<int>(rnd(rng, static_cast<std::uint64_t>(n3 + 1), 6));
      n2 = n4;
      break;
    case CaseLabel::n1n3_n2n4_eq:
      n1 = static_cast<int>(rnd(rng, 1, 5));
      n3 = n1;
      n2 = static_cast<int>(rnd(rng, static_cast<std::uint64_t>(n1 + 1), 6));
      n4 = n2;
      break;
    case CaseLabel::n2_gt_n4:
      n3 = static_cast<int>(rnd(rng, 2, 4));
      n1 = static_cast<int>(rnd(rng, 1, static_cast<std::uint64_t>(n3 - 1)));
      n4 = static_cast<int>(rnd(rng, static_cast<std::uint64_t>(n3 + 1), 5));
      n2 = static_cast<int>(rnd(rng, static_cast<std::uint64_t>(n4 + 1), 6));
      break;
    case CaseLabel::n1_eq_n3_n2_gt:
      n1 = static_cast<int>(rnd(rng, 1, 3));
      n3 = n1;
      n4 = static_cast<int>(rnd(rng, static_cast<std::uint64_t>(n3 + 1), 5));
      n2 = static_cast<int>(rnd(rng, static_cast<std::uint64_t>(n4 + 1), 6));
      break;
    case CaseLabel::n3_gt_n2:
      n1 = static_cast<int>(rnd(rng, 1, 3));
      n2 = static_cast<int>(rnd(rng, static_cast<std::uint64_t>(n1 + 1), 4));
      n3 = static_cast<int>(rnd(rng, static_cast<std::uint64_t>(n2 + 1), 5));
      n4 = static_cast<int>(rnd(rng, static_cast<std::uint64_t>(n3 + 1), 6));
      break;
  }

  const int ambient = std::max(n2, n4);
  auto nonzero = [&] {
    return Fq{static_cast<std::uint32_t>(rnd(rng, 1, field.q() - 1))};
  };
  auto fill_eq = [&](int low, int high, std::vector<Fq>& coeffs, IntMat& exps) {
    int low_rows = static_cast<int>(rnd(rng, 1, static_cast<std::uint64_t>(max_block)));
    int high_rows = static_cast<int>(rnd(rng, 1, static_cast<std::uint64_t>(max_block)));
    exps = IntMat::Zero(low_rows + high_rows, ambient);
    for (int r = 0; r < low_rows + high_rows; ++r) {
      int width = r < low_rows ? low : high;
      for (int j = 0; j < width; ++j)
        exps(r, j) = static_cast<long>(rnd(rng, 1, static_cast<std::uint64_t>(max_exp)));
      coeffs.push_back(nonzero());
    }
  };

  StaircaseSystem sys;
  sys.field = field;
  fill_eq(n1, n2, sys.coeffs1, sys.exps1);
  fill_eq(n3, n4, sys.coeffs2, sys.exps2);
  sys.b1 = bp.b1_zero ? fq_zero : nonzero();
  sys.b2 = bp.b2_zero ? fq_zero : nonzero();
  return sys;
}

inline IntMat random_int_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols,
                                long lo, long hi) {
  IntMat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j)
      m(i, j) = lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  return m;
}

}  // namespace vcount::testsupport
