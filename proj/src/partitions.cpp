#include "mexcrank/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "mexcrank/error.hpp"

namespace mexcrank {

namespace {

bool strictly_decreasing_nonnegative(const std::vector<int>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] < 0) return false;
    if (i > 0 && row[i - 1] <= row[i]) return false;
  }
  return true;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw Error(ErrorCode::InvalidPartition,
                  "part " + std::to_string(parts_[i]) + " is not positive");
    if (i > 0 && parts_[i - 1] < parts_[i])
      throw Error(ErrorCode::InvalidPartition, "parts are not nonincreasing");
    weight_ += parts_[i];
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

bool Partition::contains(int part) const noexcept {
  // parts_ is sorted descending
  return std::binary_search(parts_.begin(), parts_.end(), part,
                            std::greater<>());
}

bool FrobeniusSymbol::valid() const noexcept {
  return top.size() == bottom.size() && strictly_decreasing_nonnegative(top) &&
         strictly_decreasing_nonnegative(bottom);
}

std::int64_t FrobeniusSymbol::weight() const noexcept {
  return static_cast<std::int64_t>(rank()) +
         std::accumulate(top.begin(), top.end(), std::int64_t{0}) +
         std::accumulate(bottom.begin(), bottom.end(), std::int64_t{0});
}

PartitionIterator::PartitionIterator(int n) {
  if (n < 0) return;
  done_ = false;
  std::vector<int> first;
  if (n > 0) first.push_back(n);
  current_ = Partition(Partition::Unchecked{}, std::move(first), n);
}

PartitionIterator& PartitionIterator::operator++() {
  auto& parts = current_.parts_;
  // Rightmost part larger than 1; everything after it is a 1.
  auto it = std::find_if(parts.rbegin(), parts.rend(),
                         [](int p) { return p > 1; });
  if (it == parts.rend()) {
    done_ = true;
    return *this;
  }
  const auto pos = static_cast<std::size_t>(parts.rend() - it) - 1;
  int remaining = static_cast<int>(parts.size() - pos - 1) + 1;
  const int cap = --parts[pos];
  parts.resize(pos + 1);
  while (remaining > 0) {
    const int next = std::min(cap, remaining);
    parts.push_back(next);
    remaining -= next;
  }
  return *this;
}

int mex(const Partition& lambda) { return mex_j(lambda, 0); }

int mex_j(const Partition& lambda, int j) {
  if (j < 0 || (j > 0 && !lambda.contains(j)))
    throw Error(ErrorCode::UndefinedMexJ,
                "mex_j undefined: " + std::to_string(j) + " is not a part");
  int candidate = j + 1;
  const auto parts = lambda.parts();
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    if (*it < candidate) continue;
    if (*it > candidate) break;
    ++candidate;
  }
  return candidate;
}

int crank(const Partition& lambda) {
  const auto parts = lambda.parts();
  const auto ones = static_cast<int>(std::count(parts.begin(), parts.end(), 1));
  if (ones == 0) return lambda.largest();
  const auto larger = static_cast<int>(std::count_if(
      parts.begin(), parts.end(), [ones](int p) { return p > ones; }));
  return larger - ones;
}

int durfee_size(const Partition& lambda) {
  const auto parts = lambda.parts();
  int d = 0;
  while (d < static_cast<int>(parts.size()) && parts[d] >= d + 1) ++d;
  return d;
}

Partition conjugate(const Partition& lambda) {
  const auto parts = lambda.parts();
  std::vector<int> out(static_cast<std::size_t>(lambda.largest()), 0);
  for (int p : parts)
    for (int i = 0; i < p; ++i) ++out[i];
  return Partition(std::move(out));
}

FrobeniusSymbol to_frobenius(const Partition& lambda) {
  const int d = durfee_size(lambda);
  const Partition conj = conjugate(lambda);
  FrobeniusSymbol f;
  f.top.reserve(d);
  f.bottom.reserve(d);
  for (int i = 0; i < d; ++i) {
    f.top.push_back(lambda.parts()[i] - (i + 1));
    f.bottom.push_back(conj.parts()[i] - (i + 1));
  }
  return f;
}

Partition from_frobenius(const FrobeniusSymbol& symbol) {
  if (!symbol.valid())
    throw Error(ErrorCode::MalformedSymbol,
                "Frobenius rows must have equal length and strictly "
                "decreasing nonnegative entries");
  const int d = static_cast<int>(symbol.rank());
  std::vector<int> parts;
  for (int i = 0; i < d; ++i) parts.push_back(symbol.top[i] + i + 1);
  if (d > 0) {
    // Rows below the Durfee square: row r has one cell per column i with
    // conjugate length bottom_i + i + 1 >= r.
    const int rows = symbol.bottom[0] + 1;
    for (int r = d + 1; r <= rows; ++r) {
      int len = 0;
      while (len < d && symbol.bottom[len] + len + 1 >= r) ++len;
      parts.push_back(len);
    }
  }
  return Partition(std::move(parts));
}

}  // namespace mexcrank
