#include "vcount/error.hpp"

namespace vcount {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::not_prime: return "NotPrime";
    case Errc::even_characteristic: return "EvenCharacteristic";
    case Errc::reducible_modulus: return "ReducibleModulus";
    case Errc::degree_mismatch: return "DegreeMismatch";
    case Errc::zero_has_no_index: return "ZeroHasNoIndex";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::hypothesis_violated: return "HypothesisViolated";
    case Errc::invalid_system: return "InvalidSystem";
    case Errc::parse_error: return "ParseError";
    case Errc::bad_argument: return "BadArgument";
  }
  return "UnknownError";
}

}  // namespace vcount
