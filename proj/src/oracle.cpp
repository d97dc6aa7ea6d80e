#include "mexcrank/oracle.hpp"

#include <algorithm>
#include <string>

#include "mexcrank/error.hpp"

namespace mexcrank::oracle {

namespace {

void check_budget(std::int64_t n, std::int64_t budget) {
  if (n > budget)
    throw Error(ErrorCode::BudgetExceeded,
                "enumeration of n = " + std::to_string(n) +
                    " exceeds budget " + std::to_string(budget));
}

template <typename Stat>
std::map<int, BigInt> histogram(std::int64_t n, std::int64_t budget,
                                Stat stat) {
  check_budget(n, budget);
  std::map<int, BigInt> counts;
  for (const Partition& lambda : enumerate(static_cast<int>(n)))
    ++counts[stat(lambda)];
  return counts;
}

bool contains_value(const std::vector<int>& row, int value) {
  return std::find(row.begin(), row.end(), value) != row.end();
}

}  // namespace

BigInt oracle_count(std::int64_t n, const PartitionPredicate& predicate,
                    std::int64_t budget) {
  check_budget(n, budget);
  BigInt count = 0;
  if (n < 0) return count;
  for (const Partition& lambda : enumerate(static_cast<int>(n)))
    if (predicate(lambda)) ++count;
  return count;
}

std::map<int, BigInt> crank_histogram(std::int64_t n, std::int64_t budget) {
  return histogram(n, budget, [](const Partition& l) { return crank(l); });
}

std::map<int, BigInt> mex_histogram(std::int64_t n, std::int64_t budget) {
  return histogram(n, budget, [](const Partition& l) { return mex(l); });
}

PartitionPredicate mex_j_minus_j_odd(int j) {
  return [j](const Partition& l) {
    if (j > 0 && !l.contains(j)) return false;
    return (mex_j(l, j) - j) % 2 == 1;
  };
}

PartitionPredicate crank_at_least(int j) {
  return [j](const Partition& l) { return crank(l) >= j; };
}

PartitionPredicate crank_equals(int m) {
  return [m](const Partition& l) { return crank(l) == m; };
}

PartitionPredicate mex_equals(int m) {
  return [m](const Partition& l) { return mex(l) == m; };
}

PartitionPredicate mex_mod(int residue, int modulus) {
  return [=](const Partition& l) { return mex(l) % modulus == residue; };
}

PartitionPredicate frobenius_has_no_zero() {
  return [](const Partition& l) {
    const FrobeniusSymbol f = to_frobenius(l);
    return !contains_value(f.top, 0) && !contains_value(f.bottom, 0);
  };
}

PartitionPredicate frobenius_top_lacks(int j) {
  return [j](const Partition& l) {
    return !contains_value(to_frobenius(l).top, j);
  };
}

PartitionPredicate distinct_parts() {
  return [](const Partition& l) {
    const auto parts = l.parts();
    return std::adjacent_find(parts.begin(), parts.end()) == parts.end();
  };
}

}  // namespace mexcrank::oracle
