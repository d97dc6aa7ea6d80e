#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "mexcrank/bigint.hpp"

namespace mexcrank::qseries {

/// Exact prefix c_0 + c_1 q + ... + c_N q^N of a formal power series.
///
/// Values are immutable once built. Binary operations on series of
/// different orders silently truncate to the smaller order, so a result
/// never claims coefficients that an operand did not know.
class TruncatedSeries {
 public:
  /// The zero series of the given order.
  explicit TruncatedSeries(std::size_t order);

  /// Takes ownership of c_0..c_N; `coeffs` must be nonempty.
  explicit TruncatedSeries(std::vector<BigInt> coeffs);

  static TruncatedSeries one(std::size_t order);
  /// coeff * q^exponent, or zero if exponent > order.
  static TruncatedSeries monomial(std::size_t exponent, std::size_t order,
                                  const BigInt& coeff = 1);
  /// Builds from small integer literals; order = size - 1.
  static TruncatedSeries from_ints(std::initializer_list<long long> coeffs);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const BigInt> coeffs() const noexcept { return coeffs_; }

  /// Coefficient of q^k; throws std::out_of_range if k > order().
  const BigInt& operator[](std::size_t k) const;

  /// Coefficient of q^k, treating negative k as 0. k must not exceed order().
  BigInt coeff_or_zero(std::int64_t k) const;

  TruncatedSeries truncated(std::size_t order) const;

  friend bool operator==(const TruncatedSeries&,
                         const TruncatedSeries&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries negate(const TruncatedSeries& a);
/// Truncated Cauchy product.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
/// Reciprocal of a series with constant term +1 or -1. Throws
/// Error{NonUnit} otherwise.
TruncatedSeries invert(const TruncatedSeries& a);
/// Multiplication by q^k at the same order.
TruncatedSeries shift(const TruncatedSeries& a, std::size_t k);

inline TruncatedSeries operator+(const TruncatedSeries& a,
                                 const TruncatedSeries& b) {
  return add(a, b);
}
inline TruncatedSeries operator-(const TruncatedSeries& a,
                                 const TruncatedSeries& b) {
  return sub(a, b);
}
inline TruncatedSeries operator-(const TruncatedSeries& a) { return negate(a); }
inline TruncatedSeries operator*(const TruncatedSeries& a,
                                 const TruncatedSeries& b) {
  return mul(a, b);
}

/// (q;q)_k = (1-q)(1-q^2)...(1-q^k), truncated to `order`.
TruncatedSeries pochhammer_finite(std::size_t k, std::size_t order);

enum class GfTag {
  EulerInv,    // 1/(q)_inf, coefficients p(n)
  PochQInf,    // (q)_inf as the pentagonal series
  Distinct,    // (-q;q)_inf, coefficients q(n)
  CrankM,      // crank-m generating function, any integer m
  CrankGeqJ,   // crank >= j, j >= 0
  FrobNo0,     // Frobenius symbols with no 0 in either row
  Crank0Alt,   // (q)_inf * sum q^{2k}/(q)_k^2
  FrobNoJTop,  // Frobenius symbols with no j in the top row, j >= 0
  DurfeeRectB, // sum over s x (s+b) Durfee rectangles, b >= 0
};

struct GfKind {
  GfTag tag = GfTag::EulerInv;
  std::int64_t param = 0;  // m, j or b depending on tag; unused otherwise

  static constexpr GfKind euler_inv() { return {GfTag::EulerInv, 0}; }
  static constexpr GfKind poch_q_inf() { return {GfTag::PochQInf, 0}; }
  static constexpr GfKind distinct() { return {GfTag::Distinct, 0}; }
  static constexpr GfKind crank_m(std::int64_t m) { return {GfTag::CrankM, m}; }
  static constexpr GfKind crank_geq_j(std::int64_t j) {
    return {GfTag::CrankGeqJ, j};
  }
  static constexpr GfKind frob_no0() { return {GfTag::FrobNo0, 0}; }
  static constexpr GfKind crank0_alt() { return {GfTag::Crank0Alt, 0}; }
  static constexpr GfKind frob_noj_top(std::int64_t j) {
    return {GfTag::FrobNoJTop, j};
  }
  static constexpr GfKind durfee_rect(std::int64_t b) {
    return {GfTag::DurfeeRectB, b};
  }
};

std::string_view to_string(GfTag tag) noexcept;

/// Builds the named generating function to order N. Every infinite sum is
/// cut at the first index whose lowest exponent exceeds N, which is exact
/// since those exponents grow quadratically.
///
/// Throws Error{InvalidParams} when j or b is negative.
TruncatedSeries gf(const GfKind& kind, std::size_t order);

}  // namespace mexcrank::qseries
