#include <mutex>
#include <shared_mutex>
#include <vector>

#include "mexcrank/partitions.hpp"

namespace mexcrank {

namespace {

class PartitionNumberTable {
 public:
  BigInt get(std::int64_t n) {
    const auto idx = static_cast<std::size_t>(n);
    {
      std::shared_lock lock(mutex_);
      if (idx < table_.size()) return table_[idx];
    }
    std::unique_lock lock(mutex_);
    extend_to(idx);
    return table_[idx];
  }

 private:
  void extend_to(std::size_t n) {
    if (table_.empty()) table_.push_back(1);
    table_.reserve(n + 1);
    for (std::size_t k = table_.size(); k <= n; ++k) {
      BigInt value = 0;
      for (std::size_t j = 1;; ++j) {
        const std::size_t g1 = j * (3 * j - 1) / 2;
        if (g1 > k) break;
        const std::size_t g2 = j * (3 * j + 1) / 2;
        BigInt term = table_[k - g1];
        if (g2 <= k) term += table_[k - g2];
        if (j % 2 == 1)
          value += term;
        else
          value -= term;
      }
      table_.push_back(std::move(value));
    }
  }

  std::shared_mutex mutex_;
  std::vector<BigInt> table_;
};

PartitionNumberTable& table() {
  static PartitionNumberTable instance;
  return instance;
}

}  // namespace

BigInt p_of(std::int64_t n) {
  if (n < 0) return 0;
  return table().get(n);
}

BigInt q_distinct(std::int64_t n) {
  if (n < 0) return 0;
  BigInt total = p_of(n);
  for (std::int64_t j = 1;; ++j) {
    const std::int64_t g1 = j * (3 * j - 1);
    if (g1 > n) break;
    const std::int64_t g2 = j * (3 * j + 1);
    BigInt term = p_of(n - g1) + p_of(n - g2);
    if (j % 2 == 1)
      total -= term;
    else
      total += term;
  }
  return total;
}

}  // namespace mexcrank
