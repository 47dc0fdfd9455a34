#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "vcount/level_count.hpp"
#include "vcount/staircase.hpp"

namespace vcount {

/// The eight mutually exclusive orderings of (n1, n2, n3, n4) that select
/// which terms contribute to the final count.
enum class CaseLabel {
  n1_n3_n2_n4,      // n1 < n3 < n2 < n4
  n2_eq_n3,         // n2 = n3
  n1_eq_n3_n2_lt,   // n1 = n3, n2 < n4
  n2_eq_n4,         // n1 < n3, n2 = n4
  n1n3_n2n4_eq,     // n1 = n3, n2 = n4
  n2_gt_n4,         // n1 < n3, n2 > n4
  n1_eq_n3_n2_gt,   // n1 = n3, n2 > n4
  n3_gt_n2,         // n3 > n2
};

std::string_view case_label_text(CaseLabel label);

/// Resolves the case from the shape; asserts the eight conditions are
/// exhaustive for any valid shape.
CaseLabel resolve_case(const StaircaseShape& shape);

/// Indices i of the terms summed for this case.
const std::vector<int>& selected_terms(CaseLabel label);

/// Lazily builds and caches per-level instances with their H and L values,
/// so only the levels a case actually touches are computed.
class LevelCache {
 public:
  LevelCache(const StaircaseSystem& sys, const StaircaseShape& shape);

  struct Data {
    LevelInstance instance;
    Int h;
    Int l;
  };

  const Data& level(int l);
  bool computed(int l) const { return levels_[l - 1].has_value(); }

 private:
  const StaircaseSystem& sys_;
  StaircaseShape shape_;
  std::array<std::optional<Data>, 4> levels_;
};

/// Value of one term N_i (0..6), including its applicability guards: a term
/// whose side conditions fail evaluates to 0.
Int compute_term(int i, const StaircaseSystem& sys, const StaircaseShape& shape,
                 LevelCache& levels);

struct LevelSummary {
  int level = 0;
  int cutoff = 0;
  std::vector<Int> invariant_factors;
  Eigen::Index rank = 0;
  Int h;
  Int l;
};

struct TermValue {
  bool applicable = false;  // selected by the case label
  Int value;                // meaningful only when applicable
};

struct CountBreakdown {
  StaircaseShape shape;
  CaseLabel case_label{};
  std::array<std::optional<LevelSummary>, 4> levels;  // only computed levels
  std::array<TermValue, 7> terms;
  Int total;  // N = sum of applicable terms
};

/// The full pipeline: validate, resolve the case, compute the needed levels
/// and terms, and assemble N with its breakdown.
CountBreakdown count_points(const StaircaseSystem& sys);

/// Closed form for the single-equation system with a square exponent matrix
/// whose determinant is coprime to q-1; an independent cross-check path.
/// Throws hypothesis_violated when gcd(|det|, q-1) != 1.
Int sun_special_count(unsigned nvars, const Int& q, const Int& exponent_det, bool rhs_is_zero);

}  // namespace vcount
