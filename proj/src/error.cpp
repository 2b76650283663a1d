#include "prm/error.hpp"

namespace prm {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::NotPrimePower: return "NotPrimePower";
    case Errc::OrderTooLarge: return "OrderTooLarge";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::ZeroSpan: return "ZeroSpan";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::AlreadyHyperplane: return "AlreadyHyperplane";
    case Errc::NotHyperplane: return "NotHyperplane";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::NuOutOfRange: return "NuOutOfRange";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::TooManyPoints: return "TooManyPoints";
    case Errc::TooFewPoints: return "TooFewPoints";
    case Errc::DuplicatePoints: return "DuplicatePoints";
    case Errc::NonvanishingSetMismatch: return "NonvanishingSetMismatch";
    case Errc::WrongRegime: return "WrongRegime";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

BudgetExceeded::BudgetExceeded(std::uint64_t required, std::uint64_t budget)
    : Error(Errc::BudgetExceeded,
            "exhaustive search needs " +
                (required == UINT64_MAX ? std::string("more than 2^64") :
                                        std::to_string(required)) +
                " codewords, budget is " + std::to_string(budget)),
      required_(required),
      budget_(budget) {}

}  // namespace prm
