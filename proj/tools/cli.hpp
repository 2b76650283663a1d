#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace prm::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 2,
  kBudget = 3,
  kMismatch = 4,
  kInfeasible = 5,
};

// One line of the `sweep` table.
struct SweepRow {
  std::uint32_t q = 0;
  int m = 0;
  std::uint32_t nu = 0;
  std::uint64_t n = 0;
  std::uint64_t k_formula = 0;
  std::uint64_t k_rank = 0;
  std::uint64_t d_formula = 0;
  std::optional<std::uint64_t> d_search;  // empty when over budget
  std::string status;                     // MATCH, MISMATCH or SKIPPED

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

nlohmann::json to_json(const SweepRow& row);
SweepRow sweep_row_from_json(const nlohmann::json& j);

/// Runs one CLI invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace prm::cli
