#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mexcrank/bigint.hpp"
#include "mexcrank/oracle.hpp"

namespace mexcrank::verify {

enum class Relation {
  Equal,    // lhs == rhs
  Greater,  // lhs > rhs
};

std::string_view to_string(Relation r) noexcept;

/// One evaluated grid point of an identity.
struct Record {
  std::vector<std::pair<std::string, std::int64_t>> params;
  std::string variant;
  Relation relation = Relation::Equal;
  BigInt lhs;
  BigInt rhs;
  /// Known disagreement kept on record rather than trimmed from the grid:
  /// combinatorial crank counts at n = 1. Excluded from pass/fail.
  bool expected_exception = false;
  bool pass = false;

  std::optional<std::int64_t> param(std::string_view name) const;
};

struct Summary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t expected_exceptions = 0;
};

struct VerificationReport {
  std::string check_id;
  std::vector<Record> records;  // grid order
  Summary summary;

  bool all_passed() const noexcept { return summary.failed == 0; }
  const Record* first_counterexample() const noexcept;
};

/// Adds `delta` to the rhs of every record of `check_id` whose n equals `n`.
/// Only used to prove the harness can fail.
struct Perturbation {
  std::string check_id;
  std::int64_t n = 0;
  BigInt delta = 1;
};

struct RunConfig {
  /// Overrides the upper end of each check's main range (n, k, or series
  /// order). Enumeration-backed variants additionally stop at `budget`.
  std::optional<std::int64_t> n_max;
  std::int64_t budget = oracle::kDefaultBudget;
  unsigned workers = 1;
  std::optional<Perturbation> perturbation;
};

/// A claimed identity: two independently computed sides over a grid.
struct IdentityCheck {
  std::string id;
  std::string anchor;  // the statement being verified
  std::string lhs;
  std::string rhs;
  std::string grid;
  /// Produces raw records (lhs, rhs, relation); pass flags are set by
  /// run_check.
  std::function<std::vector<Record>(const RunConfig&)> evaluate;
};

const std::vector<IdentityCheck>& registry();

/// nullptr if no check has that id.
const IdentityCheck* find_check(std::string_view id);

/// Evaluates every grid point and grades it. Propagates
/// Error{BudgetExceeded} from the oracles.
VerificationReport run_check(const IdentityCheck& check,
                             const RunConfig& config = {});

/// Evaluates fn(0..count-1) on up to `workers` threads; results come back in
/// index order regardless of scheduling.
std::vector<Record> parallel_map(std::size_t count, unsigned workers,
                                 const std::function<Record(std::size_t)>& fn);

}  // namespace mexcrank::verify
