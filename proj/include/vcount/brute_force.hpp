#pragma once

#include <cstdint>

#include "vcount/int_types.hpp"
#include "vcount/poly_system.hpp"

namespace vcount {

struct OracleConfig {
  std::uint64_t max_points = 100'000'000;  // evaluation budget
  unsigned partitions = 1;                 // parallel sweep width
};

/// Exact number of points of F_q^n where every polynomial vanishes, by
/// exhaustive evaluation.  Throws budget_exceeded when q^n > max_points.
Int brute_force_count(const PolySystem& ps, const OracleConfig& cfg = {});

}  // namespace vcount
