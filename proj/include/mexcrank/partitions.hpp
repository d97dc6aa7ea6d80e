#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <utility>
#include <vector>

#include "mexcrank/bigint.hpp"

namespace mexcrank {

/// A partition: parts in nonincreasing order, all positive. The empty
/// partition is the unique partition of 0.
class Partition {
 public:
  Partition() = default;

  /// Throws Error{InvalidPartition} unless `parts` is nonincreasing and
  /// strictly positive.
  explicit Partition(std::vector<int> parts);

  /// Sorts `parts` first; still rejects nonpositive entries.
  static Partition from_unsorted(std::vector<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  std::int64_t weight() const noexcept { return weight_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  bool contains(int part) const noexcept;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }

 private:
  friend class PartitionIterator;
  struct Unchecked {};
  Partition(Unchecked, std::vector<int> parts, std::int64_t weight)
      : parts_(std::move(parts)), weight_(weight) {}

  std::vector<int> parts_;
  std::int64_t weight_ = 0;
};

/// Two strictly decreasing rows of nonnegative integers of equal length d.
/// Row i of the top is lambda_i - i, of the bottom lambda'_i - i, i = 1..d.
struct FrobeniusSymbol {
  std::vector<int> top;
  std::vector<int> bottom;

  std::size_t rank() const noexcept { return top.size(); }
  bool valid() const noexcept;
  /// d + sum(top) + sum(bottom).
  std::int64_t weight() const noexcept;

  friend bool operator==(const FrobeniusSymbol&,
                         const FrobeniusSymbol&) = default;
};

/// Input iterator over the partitions of n in reverse lexicographic order:
/// (n), (n-1,1), (n-2,2), (n-2,1,1), ..., (1,...,1).
class PartitionIterator {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = Partition;
  using difference_type = std::ptrdiff_t;
  using pointer = const Partition*;
  using reference = const Partition&;

  PartitionIterator() = default;  // end sentinel
  explicit PartitionIterator(int n);

  reference operator*() const noexcept { return current_; }
  pointer operator->() const noexcept { return &current_; }
  PartitionIterator& operator++();
  void operator++(int) { ++*this; }

  friend bool operator==(const PartitionIterator& a,
                         const PartitionIterator& b) noexcept {
    return a.done_ == b.done_;
  }

 private:
  Partition current_;
  bool done_ = true;
};

class PartitionRange {
 public:
  explicit PartitionRange(int n) : n_(n) {}
  PartitionIterator begin() const { return PartitionIterator(n_); }
  PartitionIterator end() const { return {}; }

 private:
  int n_;
};

/// Every partition of n exactly once, lazily, in reverse lexicographic
/// order. n = 0 yields the empty partition; n < 0 yields nothing.
inline PartitionRange enumerate(int n) { return PartitionRange(n); }

/// p(n) by Euler's pentagonal recurrence; 0 for n < 0.
///
/// The memo table is process-wide and grows on demand under a
/// reader/writer lock, so concurrent callers are safe. Call once with the
/// largest n before fanning out to avoid writer contention.
BigInt p_of(std::int64_t n);

/// Number of partitions of n into distinct parts; 0 for n < 0.
/// Uses (q^2;q^2)_inf / (q;q)_inf, i.e. sum_j (-1)^j p(n - j(3j-1)).
BigInt q_distinct(std::int64_t n);

/// Least positive integer that is not a part; mex of the empty partition is 1.
int mex(const Partition& lambda);

/// Least integer greater than j that is not a part. Defined for j = 0
/// (where it equals mex) and for j a part of lambda; any other j throws
/// Error{UndefinedMexJ}.
int mex_j(const Partition& lambda, int j);

/// Andrews-Garvan crank: the largest part when there are no 1s, otherwise
/// (number of parts larger than the number of 1s) - (number of 1s).
/// crank of the empty partition is 0.
int crank(const Partition& lambda);

/// Side of the Durfee square: largest d with lambda_d >= d.
int durfee_size(const Partition& lambda);

Partition conjugate(const Partition& lambda);

FrobeniusSymbol to_frobenius(const Partition& lambda);

/// Inverse of to_frobenius. Throws Error{MalformedSymbol} if rows differ in
/// length, contain negatives, or are not strictly decreasing.
Partition from_frobenius(const FrobeniusSymbol& symbol);

}  // namespace mexcrank
