#pragma once

#include <cstdint>

#include "mexcrank/bigint.hpp"

// Closed-form partition counts, all reduced to finite signed sums of p(n)
// and q(n). Every sum runs until its p-argument goes negative.
namespace mexcrank::counting {

/// t_k = 1 + 2 + ... + k.
struct TriangularIndex {
  std::int64_t k = 0;

  constexpr std::int64_t value() const noexcept { return k * (k + 1) / 2; }
};

constexpr std::int64_t triangular(std::int64_t k) noexcept {
  return TriangularIndex{k}.value();
}

/// Number of partitions of n with crank m, as the crank generating function
/// defines it (so M(0,1) = -1, M(+-1,1) = 1). Negative m uses M(m,n) = M(-m,n).
BigInt M(std::int64_t m, std::int64_t n);

/// Generating-function count of partitions of n with crank >= j:
/// sum_{k>=1} (-1)^{k+1} p(n - k(k-1)/2 - kj). Requires j >= 0.
BigInt crank_geq(std::int64_t j, std::int64_t n);

/// Crank-0 count through the triangular expansion
/// p(n) + 2 sum_{k>=1} (-1)^k p(n - t_k).
BigInt crank_zero_triangular(std::int64_t n);

/// Partitions of n with mex m: p(n - t_{m-1}) - p(n - t_m). Requires m >= 1.
BigInt x_mex(std::int64_t m, std::int64_t n);

/// Partitions of n whose mex is odd / even / 1 mod 4 / 3 mod 4.
BigInt o_of(std::int64_t n);
BigInt e_of(std::int64_t n);
BigInt o1_of(std::int64_t n);
BigInt o3_of(std::int64_t n);

/// sum_j (-1)^{t_j} p(2k - t_j); Ewell's identity says this is q(k).
BigInt ewell_even(std::int64_t k);
/// sum_j (-1)^{t_j} p(2k + 1 - t_j); Ewell's identity says this is 0.
BigInt ewell_odd(std::int64_t k);

/// True iff n = j(3j+1) or n = j(3j-1) for some j >= 1. Exact integer test.
bool is_double_pentagonal(std::int64_t n);

}  // namespace mexcrank::counting
