#include "mexcrank/qseries.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "mexcrank/error.hpp"

namespace mexcrank::qseries {

namespace {

using Coeffs = std::vector<BigInt>;

// Sparse polynomial: (exponent, coefficient) pairs.
using SparseTerms = std::vector<std::pair<std::size_t, long long>>;

std::size_t common_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  return std::min(a.order(), b.order());
}

// dense * sparse, truncated to `order`.
TruncatedSeries mul_sparse(const TruncatedSeries& dense,
                           const SparseTerms& terms, std::size_t order) {
  order = std::min(order, dense.order());
  Coeffs out(order + 1);
  const auto d = dense.coeffs();
  for (const auto& [exp, c] : terms) {
    if (exp > order) continue;
    for (std::size_t k = exp; k <= order; ++k) {
      const BigInt& x = d[k - exp];
      if (x.is_zero()) continue;
      out[k] += c * x;
    }
  }
  return TruncatedSeries(std::move(out));
}

// 1/(q)_k to the given order, via the partition-into-parts-<=k recurrence.
Coeffs reciprocal_pochhammer(std::size_t k, std::size_t order) {
  Coeffs c(order + 1);
  c[0] = 1;
  for (std::size_t i = 1; i <= std::min(k, order); ++i)
    for (std::size_t e = i; e <= order; ++e) c[e] += c[e - i];
  return c;
}

// acc += q^offset * term; term only needs order acc.size() - 1 - offset.
void accumulate_shifted(Coeffs& acc, std::size_t offset, const Coeffs& term) {
  for (std::size_t k = 0; k < term.size() && offset + k < acc.size(); ++k)
    acc[offset + k] += term[k];
}

Coeffs product(const Coeffs& a, const Coeffs& b) {
  const auto s = mul(TruncatedSeries(a), TruncatedSeries(b));
  return Coeffs(s.coeffs().begin(), s.coeffs().end());
}

Coeffs square(const Coeffs& a) { return product(a, a); }

TruncatedSeries euler_inv(std::size_t order) {
  return TruncatedSeries(reciprocal_pochhammer(order, order));
}

TruncatedSeries poch_q_inf(std::size_t order) {
  // sum over all integers j of (-1)^j q^{j(3j-1)/2}
  Coeffs c(order + 1);
  c[0] = 1;
  for (std::size_t j = 1;; ++j) {
    const std::size_t lo = j * (3 * j - 1) / 2;
    if (lo > order) break;
    const int sign = (j % 2 == 0) ? 1 : -1;
    c[lo] += sign;
    const std::size_t hi = j * (3 * j + 1) / 2;
    if (hi <= order) c[hi] += sign;
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries distinct(std::size_t order) {
  Coeffs c(order + 1);
  c[0] = 1;
  for (std::size_t i = 1; i <= order; ++i)
    for (std::size_t e = order; e >= i; --e) c[e] += c[e - i];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries crank_m(std::int64_t m, std::size_t order) {
  const auto a = static_cast<std::size_t>(m < 0 ? -m : m);
  SparseTerms num;
  for (std::size_t n = 1;; ++n) {
    const std::size_t e = n * (n - 1) / 2 + n * a;
    if (e > order) break;
    const long long sign = (n % 2 == 1) ? 1 : -1;
    num.emplace_back(e, sign);
    num.emplace_back(e + n, -sign);
  }
  return mul_sparse(euler_inv(order), num, order);
}

TruncatedSeries crank_geq_j(std::size_t j, std::size_t order) {
  SparseTerms num;
  for (std::size_t k = 0;; ++k) {
    const std::size_t e = j * (2 * k + 1) + k * (2 * k + 1);
    if (e > order) break;
    num.emplace_back(e, 1);
    num.emplace_back(e + 2 * k + j + 1, -1);
  }
  return mul_sparse(euler_inv(order), num, order);
}

TruncatedSeries frob_no0(std::size_t order) {
  // sum_s q^{s^2+2s} / (q)_s^2
  Coeffs acc(order + 1);
  for (std::size_t s = 0;; ++s) {
    const std::size_t e = s * s + 2 * s;
    if (e > order) break;
    const std::size_t rest = order - e;
    accumulate_shifted(acc, e, square(reciprocal_pochhammer(s, rest)));
  }
  return TruncatedSeries(std::move(acc));
}

TruncatedSeries crank0_alt(std::size_t order) {
  // (q)_inf * sum_k q^{2k} / (q)_k^2
  Coeffs acc(order + 1);
  for (std::size_t k = 0; 2 * k <= order; ++k) {
    const std::size_t rest = order - 2 * k;
    accumulate_shifted(acc, 2 * k, square(reciprocal_pochhammer(k, rest)));
  }
  return mul(poch_q_inf(order), TruncatedSeries(std::move(acc)));
}

TruncatedSeries frob_noj_top(std::size_t j, std::size_t order) {
  // (1/(q)_inf) sum_b (-1)^b q^{b(b+1)/2 + jb}
  SparseTerms num;
  for (std::size_t b = 0;; ++b) {
    const std::size_t e = b * (b + 1) / 2 + j * b;
    if (e > order) break;
    num.emplace_back(e, b % 2 == 0 ? 1 : -1);
  }
  return mul_sparse(euler_inv(order), num, order);
}

TruncatedSeries durfee_rect(std::size_t b, std::size_t order) {
  // sum_s q^{s^2+bs} / ((q)_s (q)_{s+b})
  Coeffs acc(order + 1);
  for (std::size_t s = 0;; ++s) {
    const std::size_t e = s * s + b * s;
    if (e > order) break;
    const std::size_t rest = order - e;
    accumulate_shifted(acc, e,
                       product(reciprocal_pochhammer(s, rest),
                               reciprocal_pochhammer(s + b, rest)));
  }
  return TruncatedSeries(std::move(acc));
}

std::size_t nonnegative_param(const GfKind& kind) {
  if (kind.param < 0)
    throw Error(ErrorCode::InvalidParams,
                std::string(to_string(kind.tag)) +
                    " requires a nonnegative parameter, got " +
                    std::to_string(kind.param));
  return static_cast<std::size_t>(kind.param);
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw std::invalid_argument("TruncatedSeries needs at least c_0");
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
  return monomial(0, order);
}

TruncatedSeries TruncatedSeries::monomial(std::size_t exponent,
                                          std::size_t order,
                                          const BigInt& coeff) {
  Coeffs c(order + 1);
  if (exponent <= order) c[exponent] = coeff;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::from_ints(
    std::initializer_list<long long> coeffs) {
  return TruncatedSeries(Coeffs(coeffs.begin(), coeffs.end()));
}

const BigInt& TruncatedSeries::operator[](std::size_t k) const {
  if (k > order())
    throw std::out_of_range("coefficient q^" + std::to_string(k) +
                            " beyond series order " +
                            std::to_string(order()));
  return coeffs_[k];
}

BigInt TruncatedSeries::coeff_or_zero(std::int64_t k) const {
  if (k < 0) return 0;
  return (*this)[static_cast<std::size_t>(k)];
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  order = std::min(order, this->order());
  return TruncatedSeries(Coeffs(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = common_order(a, b);
  Coeffs out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out[k] = a[k] + b[k];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = common_order(a, b);
  Coeffs out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out[k] = a[k] - b[k];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries negate(const TruncatedSeries& a) {
  Coeffs out(a.coeffs().begin(), a.coeffs().end());
  for (auto& c : out) c = -c;
  return TruncatedSeries(std::move(out));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = common_order(a, b);
  Coeffs out(n + 1);
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  for (std::size_t i = 0; i <= n; ++i) {
    if (ac[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (bc[j].is_zero()) continue;
      out[i + j] += ac[i] * bc[j];
    }
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries invert(const TruncatedSeries& a) {
  const BigInt& c0 = a[0];
  if (c0 != 1 && c0 != -1)
    throw Error(ErrorCode::NonUnit,
                "constant term " + c0.str() + " has no integer reciprocal");
  const std::size_t n = a.order();
  const auto ac = a.coeffs();
  // c0 is its own inverse, so b_k = -c0 * sum_{i=1..k} a_i b_{k-i}.
  Coeffs b(n + 1);
  b[0] = c0;
  for (std::size_t k = 1; k <= n; ++k) {
    BigInt acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      if (ac[i].is_zero()) continue;
      acc += ac[i] * b[k - i];
    }
    b[k] = c0 == 1 ? BigInt(-acc) : acc;
  }
  return TruncatedSeries(std::move(b));
}

TruncatedSeries shift(const TruncatedSeries& a, std::size_t k) {
  const std::size_t n = a.order();
  Coeffs out(n + 1);
  for (std::size_t i = k; i <= n; ++i) out[i] = a[i - k];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries pochhammer_finite(std::size_t k, std::size_t order) {
  Coeffs c(order + 1);
  c[0] = 1;
  for (std::size_t i = 1; i <= std::min(k, order); ++i)
    for (std::size_t e = order; e >= i; --e) c[e] -= c[e - i];
  return TruncatedSeries(std::move(c));
}

std::string_view to_string(GfTag tag) noexcept {
  switch (tag) {
    case GfTag::EulerInv: return "EULER_INV";
    case GfTag::PochQInf: return "POCH_Q_INF";
    case GfTag::Distinct: return "DISTINCT";
    case GfTag::CrankM: return "CRANK_M";
    case GfTag::CrankGeqJ: return "CRANK_GEQ_J";
    case GfTag::FrobNo0: return "FROB_NO0";
    case GfTag::Crank0Alt: return "CRANK0_ALT";
    case GfTag::FrobNoJTop: return "FROB_NOJ_TOP";
    case GfTag::DurfeeRectB: return "DURFEE_RECT_B";
  }
  return "UNKNOWN";
}

TruncatedSeries gf(const GfKind& kind, std::size_t order) {
  switch (kind.tag) {
    case GfTag::EulerInv: return euler_inv(order);
    case GfTag::PochQInf: return poch_q_inf(order);
    case GfTag::Distinct: return distinct(order);
    case GfTag::CrankM: return crank_m(kind.param, order);
    case GfTag::CrankGeqJ: return crank_geq_j(nonnegative_param(kind), order);
    case GfTag::FrobNo0: return frob_no0(order);
    case GfTag::Crank0Alt: return crank0_alt(order);
    case GfTag::FrobNoJTop: return frob_noj_top(nonnegative_param(kind), order);
    case GfTag::DurfeeRectB: return durfee_rect(nonnegative_param(kind), order);
  }
  throw Error(ErrorCode::InvalidParams, "unknown generating function");
}

}  // namespace mexcrank::qseries
