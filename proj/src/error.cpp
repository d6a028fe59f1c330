#include "coxflag/error.hpp"

namespace coxflag {

  std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::parse_error: return "ParseError";
      case ErrorCode::invalid_letter: return "InvalidLetter";
      case ErrorCode::singleton_letter: return "SingletonLetter";
      case ErrorCode::not_reduced: return "NotReduced";
      case ErrorCode::not_reduced_concat: return "NotReducedConcat";
      case ErrorCode::not_divisible: return "NotDivisible";
      case ErrorCode::unsupported_shape: return "UnsupportedShape";
      case ErrorCode::not_a_reduct: return "NotAReduct";
      case ErrorCode::unknown_chamber: return "UnknownChamber";
      case ErrorCode::size_cap_exceeded: return "SizeCapExceeded";
      case ErrorCode::not_quasi_building: return "NotQuasiBuilding";
      case ErrorCode::empty_seed: return "EmptySeed";
      case ErrorCode::bad_schedule: return "BadSchedule";
      case ErrorCode::disconnected: return "Disconnected";
      case ErrorCode::not_a_gamma_space: return "NotAGammaSpace";
      case ErrorCode::not_equivalent: return "NotEquivalent";
      case ErrorCode::no_path: return "NoPath";
      case ErrorCode::not_a_permutation: return "NotAPermutation";
      case ErrorCode::budget_exceeded: return "BudgetExceeded";
      case ErrorCode::not_a_flag: return "NotAFlag";
      case ErrorCode::not_simply_connected: return "NotSimplyConnected";
      case ErrorCode::not_nice: return "NotNice";
      case ErrorCode::no_edges: return "NoEdges";
    }
    return "Unknown";
  }

  Error::Error(ErrorCode code, std::string const& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        _code(code) {}

}  // namespace coxflag
