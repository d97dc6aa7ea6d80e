#pragma once

#include <cstdint>
#include <functional>
#include <map>

#include "mexcrank/bigint.hpp"
#include "mexcrank/partitions.hpp"

// Ground truth by exhaustive enumeration. Nothing here may call into the
// counting formulas or the series constructors.
namespace mexcrank::oracle {

inline constexpr std::int64_t kDefaultBudget = 35;

using PartitionPredicate = std::function<bool(const Partition&)>;

/// Number of partitions of n satisfying `predicate`. Throws
/// Error{BudgetExceeded} if n > budget.
BigInt oracle_count(std::int64_t n, const PartitionPredicate& predicate,
                    std::int64_t budget = kDefaultBudget);

/// crank value -> number of partitions of n with that combinatorial crank.
std::map<int, BigInt> crank_histogram(std::int64_t n,
                                      std::int64_t budget = kDefaultBudget);

/// mex value -> number of partitions of n with that mex.
std::map<int, BigInt> mex_histogram(std::int64_t n,
                                    std::int64_t budget = kDefaultBudget);

// Predicates shared by the identity checks.
PartitionPredicate mex_j_minus_j_odd(int j);
PartitionPredicate crank_at_least(int j);
PartitionPredicate crank_equals(int m);
PartitionPredicate mex_equals(int m);
PartitionPredicate mex_mod(int residue, int modulus);
PartitionPredicate frobenius_has_no_zero();
PartitionPredicate frobenius_top_lacks(int j);
PartitionPredicate distinct_parts();

}  // namespace mexcrank::oracle
