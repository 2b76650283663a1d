#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace prm {

enum class Errc {
  NotPrime,
  NotPrimePower,
  OrderTooLarge,
  DivisionByZero,
  ZeroVector,
  ZeroSpan,
  DimensionMismatch,
  AlreadyHyperplane,
  NotHyperplane,
  ArityMismatch,
  DegreeMismatch,
  NuOutOfRange,
  BudgetExceeded,
  TooManyPoints,
  TooFewPoints,
  DuplicatePoints,
  NonvanishingSetMismatch,
  WrongRegime,
  InvalidArgument,
  ParseError,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Thrown when an exhaustive search would enumerate more than the allowed
// number of codewords. `required` is the count that would have been needed.
class BudgetExceeded : public Error {
 public:
  // required == UINT64_MAX means "at least that many".
  BudgetExceeded(std::uint64_t required, std::uint64_t budget);

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

}  // namespace prm
