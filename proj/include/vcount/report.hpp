#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>

#include "vcount/input.hpp"
#include "vcount/point_count.hpp"

namespace vcount {

struct OracleRun {
  Int value;
  std::uint64_t points = 0;
  double millis = 0.0;
};

/// Everything the CLI prints for `count`; the text and JSON renderings are
/// both derived from this single struct so their numbers cannot diverge.
struct CountReport {
  std::string input_echo;  // canonical document text
  std::uint64_t p = 0;
  unsigned degree = 1;
  std::uint64_t q = 0;
  std::string method;  // formula | bruteforce | both
  std::optional<CountBreakdown> formula;
  double formula_millis = 0.0;
  std::optional<OracleRun> oracle;
  bool agreement = true;  // false when both paths ran and disagreed
  Int n_value;            // the reported N
};

std::string render_text(const CountReport& report);
nlohmann::json render_json(const CountReport& report);

}  // namespace vcount
