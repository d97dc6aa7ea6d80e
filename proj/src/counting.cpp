#include "mexcrank/counting.hpp"

#include <cstdint>
#include <string>

#include "mexcrank/error.hpp"
#include "mexcrank/partitions.hpp"

namespace mexcrank::counting {

namespace {

// sum_{m >= 1, m = residue mod modulus} x(m, n)
BigInt mex_class_count(std::int64_t n, std::int64_t residue,
                       std::int64_t modulus) {
  BigInt total = 0;
  for (std::int64_t m = residue; triangular(m - 1) <= n; m += modulus)
    total += x_mex(m, n);
  return total;
}

BigInt ewell_sum(std::int64_t target) {
  BigInt total = 0;
  for (std::int64_t j = 0; triangular(j) <= target; ++j) {
    const std::int64_t t = triangular(j);
    if (t % 2 == 0)
      total += p_of(target - t);
    else
      total -= p_of(target - t);
  }
  return total;
}

std::uint64_t isqrt(std::uint64_t x) {
  std::uint64_t lo = 0;
  std::uint64_t hi = std::uint64_t{1} << 32;
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (mid <= x / mid)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace

BigInt M(std::int64_t m, std::int64_t n) {
  const std::int64_t a = m < 0 ? -m : m;
  BigInt total = 0;
  for (std::int64_t k = 1;; ++k) {
    const std::int64_t lead = n - k * (k + 2 * a - 1) / 2;
    if (lead < 0) break;
    BigInt term = p_of(lead) - p_of(n - k * (k + 2 * a + 1) / 2);
    if (k % 2 == 1)
      total += term;
    else
      total -= term;
  }
  return total;
}

BigInt crank_geq(std::int64_t j, std::int64_t n) {
  if (j < 0)
    throw Error(ErrorCode::InvalidParams,
                "crank_geq needs j >= 0, got " + std::to_string(j));
  BigInt total = 0;
  for (std::int64_t k = 1;; ++k) {
    const std::int64_t arg = n - k * (k - 1) / 2 - k * j;
    if (arg < 0) break;
    if (k % 2 == 1)
      total += p_of(arg);
    else
      total -= p_of(arg);
  }
  return total;
}

BigInt crank_zero_triangular(std::int64_t n) {
  BigInt total = p_of(n);
  for (std::int64_t k = 1; triangular(k) <= n; ++k) {
    const BigInt term = 2 * p_of(n - triangular(k));
    if (k % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

BigInt x_mex(std::int64_t m, std::int64_t n) {
  if (m < 1)
    throw Error(ErrorCode::InvalidParams,
                "mex is a positive integer, got " + std::to_string(m));
  return p_of(n - triangular(m - 1)) - p_of(n - triangular(m));
}

BigInt o_of(std::int64_t n) { return mex_class_count(n, 1, 2); }
BigInt e_of(std::int64_t n) { return mex_class_count(n, 2, 2); }
BigInt o1_of(std::int64_t n) { return mex_class_count(n, 1, 4); }
BigInt o3_of(std::int64_t n) { return mex_class_count(n, 3, 4); }

BigInt ewell_even(std::int64_t k) { return ewell_sum(2 * k); }
BigInt ewell_odd(std::int64_t k) { return ewell_sum(2 * k + 1); }

bool is_double_pentagonal(std::int64_t n) {
  if (n < 1) return false;
  // j(3j +- 1) = n  <=>  36 j^2 +- 12 j + 1 = 12 n + 1 = r^2, r = 6j +- 1.
  const auto disc = static_cast<std::uint64_t>(n) * 12 + 1;
  const std::uint64_t r = isqrt(disc);
  if (r * r != disc) return false;
  return (r % 6 == 1 || r % 6 == 5) && r >= 5;
}

}  // namespace mexcrank::counting
