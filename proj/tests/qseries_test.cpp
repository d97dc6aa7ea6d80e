#include "mexcrank/qseries.hpp"

#include <random>

#include "brute_force.hpp"
#include "doctest.h"
#include "mexcrank/error.hpp"

using mexcrank::BigInt;
using mexcrank::Error;
using mexcrank::ErrorCode;
using namespace mexcrank::qseries;

namespace {

TruncatedSeries ints(std::initializer_list<long long> c) {
  return TruncatedSeries::from_ints(c);
}

TruncatedSeries random_series(std::mt19937_64& rng, std::size_t order,
                              bool unit = false) {
  std::uniform_int_distribution<long long> coeff(-50, 50);
  std::vector<BigInt> c(order + 1);
  for (auto& x : c) x = coeff(rng);
  if (unit) c[0] = (rng() & 1) ? 1 : -1;
  return TruncatedSeries(std::move(c));
}

// Coefficients 0..order of a brute-force count over partitions of n.
std::vector<BigInt> brute_coeffs(
    std::size_t order, const std::function<bool(const brute::Parts&)>& pred) {
  std::vector<BigInt> c;
  for (std::size_t n = 0; n <= order; ++n)
    c.push_back(brute::count(static_cast<int>(n), pred));
  return c;
}

}  // namespace

TEST_CASE("add") {
  CHECK(ints({1, 1}) + ints({1, -1}) == ints({2, 0}));
  const auto s = ints({3, -1, 4, 1, -5});
  CHECK(s + TruncatedSeries(4) == s);
  const auto e = gf(GfKind::euler_inv(), 30);
  CHECK(e + (-e) == TruncatedSeries(30));
}

TEST_CASE("mixed orders truncate to the smaller") {
  const auto r = ints({1, 2, 3}) + ints({1, 1, 1, 1, 1});
  CHECK(r.order() == 2);
  CHECK(r == ints({2, 3, 4}));
  CHECK((ints({1, 1}) * ints({1, 1, 1, 1})).order() == 1);
}

TEST_CASE("mul") {
  CHECK(ints({1, 1, 0}) * ints({1, 1, 0}) == ints({1, 2, 1}));
  const auto s = ints({3, -1, 4, 1, -5});
  CHECK(s * TruncatedSeries::one(4) == s);
  for (std::size_t n : {0u, 1u, 7u, 60u, 250u}) {
    const auto prod = gf(GfKind::poch_q_inf(), n) * gf(GfKind::euler_inv(), n);
    CHECK(prod == TruncatedSeries::one(n));
  }
}

TEST_CASE("invert") {
  CHECK(invert(TruncatedSeries::one(5)) == TruncatedSeries::one(5));
  CHECK(invert(ints({1, -1, 0, 0, 0, 0})) == ints({1, 1, 1, 1, 1, 1}));
  CHECK(invert(ints({-1, 0, 0})) == ints({-1, 0, 0}));

  const auto p = invert(gf(GfKind::poch_q_inf(), 25));
  CHECK(std::vector<BigInt>(p.coeffs().begin(), p.coeffs().end()) ==
        brute_coeffs(25, [](const brute::Parts&) { return true; }));

  SUBCASE("non-unit constant term") {
    for (auto bad : {ints({2, 1}), ints({0, 1}), ints({-3})}) {
      try {
        (void)invert(bad);
        FAIL("expected NON_UNIT");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonUnit);
      }
    }
  }
}

TEST_CASE("shift") {
  CHECK(shift(TruncatedSeries::one(2), 2) == ints({0, 0, 1}));
  CHECK(shift(ints({1, 1, 0}), 1) == ints({0, 1, 1}));
  CHECK(shift(ints({1, 1}), 5) == ints({0, 0}));
  // F(3) = 1 partition of 3 with no 0 in its Frobenius symbol: (2,1).
  const auto f = shift(gf(GfKind::frob_no0(), 6), 1);
  CHECK(f[4] == 1);
  CHECK(f[0] == 0);
}

TEST_CASE("pochhammer_finite") {
  CHECK(pochhammer_finite(0, 4) == TruncatedSeries::one(4));
  CHECK(pochhammer_finite(1, 3) == ints({1, -1, 0, 0}));
  CHECK(pochhammer_finite(2, 4) == ints({1, -1, -1, 1, 0}));
  // (q)_k agrees with (q)_inf below q^{k+1}
  const auto full = gf(GfKind::poch_q_inf(), 40);
  CHECK(pochhammer_finite(12, 12) == full.truncated(12));
}

TEST_CASE("gf examples") {
  const auto m0 = gf(GfKind::crank_m(0), 5);
  CHECK(m0 == ints({1, -1, 0, 1, 1, 1}));
  CHECK(gf(GfKind::crank_geq_j(1), 4)[4] == 2);
  CHECK(gf(GfKind::frob_no0(), 4) == ints({1, 0, 0, 1, 2}));
  CHECK(gf(GfKind::frob_noj_top(0), 4) == ints({1, 0, 1, 2, 3}));
  CHECK(gf(GfKind::distinct(), 6) == ints({1, 1, 1, 2, 2, 3, 4}));
  CHECK(gf(GfKind::durfee_rect(3), 50) == gf(GfKind::euler_inv(), 50));
  CHECK(gf(GfKind::crank_m(-3), 40) == gf(GfKind::crank_m(3), 40));
}

TEST_CASE("gf against brute-force enumeration") {
  constexpr std::size_t N = 22;
  auto same = [](const TruncatedSeries& s, const std::vector<BigInt>& c) {
    return std::vector<BigInt>(s.coeffs().begin(), s.coeffs().end()) == c;
  };
  CHECK(same(gf(GfKind::euler_inv(), N),
             brute_coeffs(N, [](const brute::Parts&) { return true; })));
  CHECK(same(gf(GfKind::distinct(), N), brute_coeffs(N, [](const brute::Parts& p) {
               return std::adjacent_find(p.begin(), p.end()) == p.end();
             })));
  CHECK(same(gf(GfKind::frob_no0(), N), brute_coeffs(N, [](const brute::Parts& p) {
               const auto [t, b] = brute::frobenius(p);
               return !brute::has(t, 0) && !brute::has(b, 0);
             })));
  for (int j = 0; j <= 4; ++j) {
    CAPTURE(j);
    CHECK(same(gf(GfKind::frob_noj_top(j), N),
               brute_coeffs(N, [j](const brute::Parts& p) {
                 return !brute::has(brute::frobenius(p).first, j);
               })));
  }
  // The combinatorial crank matches the series from n = 2 on.
  for (int m = -5; m <= 5; ++m) {
    CAPTURE(m);
    const auto s = gf(GfKind::crank_m(m), N);
    for (std::size_t n = 2; n <= N; ++n)
      CHECK(s[n] == brute::count(static_cast<int>(n), [m](const brute::Parts& p) {
              return brute::crank(p) == m;
            }));
  }
  for (int j = 0; j <= 5; ++j) {
    const auto s = gf(GfKind::crank_geq_j(j), N);
    for (std::size_t n = 2; n <= N; ++n)
      CHECK(s[n] == brute::count(static_cast<int>(n), [j](const brute::Parts& p) {
              return brute::crank(p) >= j;
            }));
  }
}

TEST_CASE("gf n = 1 coefficients follow the series, not the combinatorial crank") {
  CHECK(gf(GfKind::crank_m(0), 3)[1] == -1);
  CHECK(gf(GfKind::crank_m(1), 3)[1] == 1);
  CHECK(gf(GfKind::crank_m(-1), 3)[1] == 1);
}

TEST_CASE("gf rejects negative j and b") {
  for (auto kind : {GfKind::crank_geq_j(-1), GfKind::frob_noj_top(-2),
                    GfKind::durfee_rect(-1)}) {
    try {
      (void)gf(kind, 5);
      FAIL("expected INVALID_PARAMS");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidParams);
    }
  }
}

TEST_CASE("ring laws on random series") {
  std::mt19937_64 rng(0x5eed);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = rng() % 20;
    const auto a = random_series(rng, n);
    const auto b = random_series(rng, n + rng() % 3);
    const auto c = random_series(rng, n + rng() % 3);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("invert is a two-sided inverse on random units") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = rng() % 25;
    const auto a = random_series(rng, n, /*unit=*/true);
    const auto inv = invert(a);
    CHECK(a * inv == TruncatedSeries::one(n));
    CHECK(inv * a == TruncatedSeries::one(n));
    CHECK(invert(inv) == a);
  }
}

TEST_CASE("Durfee rectangles reproduce p(n) for every offset") {
  const auto euler = gf(GfKind::euler_inv(), 120);
  for (int b = 0; b <= 10; ++b) {
    CAPTURE(b);
    CHECK(gf(GfKind::durfee_rect(b), 120) == euler);
  }
}

TEST_CASE("crank-0 alternative form") {
  CHECK(gf(GfKind::crank0_alt(), 150) == gf(GfKind::crank_m(0), 150));
}

TEST_CASE("Euler coefficients positive and nondecreasing from n = 1") {
  const auto e = gf(GfKind::euler_inv(), 200);
  CHECK(e[100] == BigInt(190569292));
  for (std::size_t n = 1; n <= 200; ++n) {
    CHECK(e[n] > 0);
    if (n > 1) CHECK(e[n] >= e[n - 1]);
  }
}

TEST_CASE("coefficient access past the order throws") {
  const auto s = ints({1, 2});
  CHECK_THROWS_AS((void)s[2], std::out_of_range);
  CHECK(s.coeff_or_zero(-1) == 0);
}
