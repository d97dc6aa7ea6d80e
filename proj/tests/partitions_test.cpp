#include "mexcrank/partitions.hpp"

#include <map>
#include <random>
#include <thread>

#include "brute_force.hpp"
#include "doctest.h"
#include "mexcrank/error.hpp"

using namespace mexcrank;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

std::vector<std::vector<int>> listed(int n) {
  std::vector<std::vector<int>> out;
  for (const auto& l : enumerate(n))
    out.emplace_back(l.parts().begin(), l.parts().end());
  return out;
}

template <typename F>
ErrorCode error_code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no mexcrank::Error thrown");
  return ErrorCode::UnknownCheck;
}

}  // namespace

TEST_CASE("Partition validates its parts") {
  CHECK(P({3, 1, 1}).weight() == 5);
  CHECK(Partition().weight() == 0);
  CHECK(error_code_of([] { P({1, 2}); }) == ErrorCode::InvalidPartition);
  CHECK(error_code_of([] { P({2, 0}); }) == ErrorCode::InvalidPartition);
  CHECK(Partition::from_unsorted({1, 3, 2}) == P({3, 2, 1}));
}

TEST_CASE("enumerate") {
  CHECK(listed(0) == std::vector<std::vector<int>>{{}});
  CHECK(listed(-2).empty());
  CHECK(listed(4) == std::vector<std::vector<int>>{
                         {4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  std::size_t count = 0;
  for (const auto& l : enumerate(35)) {
    (void)l;
    ++count;
  }
  CHECK(count == 14883);
}

TEST_CASE("enumerate matches independent recursion in order, n <= 20") {
  for (int n = 0; n <= 20; ++n) {
    CAPTURE(n);
    CHECK(listed(n) == brute::all_partitions(n));
  }
}

TEST_CASE("enumeration count equals p(n), n <= 35") {
  for (int n = 0; n <= 35; ++n) {
    BigInt count = 0;
    for (const auto& l : enumerate(n)) {
      CHECK(l.weight() == n);
      ++count;
    }
    CHECK(count == p_of(n));
  }
}

TEST_CASE("p_of") {
  CHECK(p_of(-3) == 0);
  const long long expected[] = {1, 1, 2, 3, 5, 7, 11};
  for (int n = 0; n <= 6; ++n) CHECK(p_of(n) == expected[n]);
  CHECK(p_of(100) == BigInt(190569292));
  CHECK(p_of(200) == BigInt("3972999029388"));
}

TEST_CASE("q_distinct") {
  CHECK(q_distinct(-1) == 0);
  CHECK(q_distinct(0) == 1);
  CHECK(q_distinct(2) == 1);
  CHECK(q_distinct(6) == 4);
  for (int n = 0; n <= 30; ++n)
    CHECK(q_distinct(n) == brute::count(n, [](const brute::Parts& p) {
            return std::adjacent_find(p.begin(), p.end()) == p.end();
          }));
}

TEST_CASE("mex") {
  CHECK(mex(P({3, 2})) == 1);
  CHECK(mex(P({3, 1, 1})) == 2);
  CHECK(mex(P({2, 2, 1})) == 3);
  CHECK(mex(Partition()) == 1);
}

TEST_CASE("mex_j") {
  CHECK(mex_j(P({2, 1, 1}), 1) == 3);
  CHECK(mex_j(P({3, 1}), 1) == 2);
  CHECK(mex_j(P({5, 4, 3, 3}), 3) == 6);
  CHECK(error_code_of([] { mex_j(P({3, 2}), 1); }) == ErrorCode::UndefinedMexJ);
  CHECK(error_code_of([] { mex_j(Partition(), 2); }) == ErrorCode::UndefinedMexJ);
}

TEST_CASE("mex properties over all partitions, n <= 20") {
  for (int n = 0; n <= 20; ++n) {
    for (const auto& l : enumerate(n)) {
      const int m = mex(l);
      CHECK(mex_j(l, 0) == m);
      for (int i = 1; i < m; ++i) CHECK(l.contains(i));
      CHECK_FALSE(l.contains(m));
      const std::vector<int> v(l.parts().begin(), l.parts().end());
      for (int j : v) CHECK(mex_j(l, j) == brute::mex_after(v, j));
    }
  }
}

TEST_CASE("crank") {
  CHECK(crank(P({4})) == 4);
  CHECK(crank(P({3, 1})) == 0);
  CHECK(crank(P({2, 1, 1})) == -2);
  CHECK(crank(P({1})) == -1);
  CHECK(crank(Partition()) == 0);
}

TEST_CASE("combinatorial crank counts are symmetric, 2 <= n <= 35") {
  for (int n = 2; n <= 35; ++n) {
    std::map<int, long> hist;
    for (const auto& l : enumerate(n)) ++hist[crank(l)];
    for (const auto& [m, c] : hist) {
      CAPTURE(n);
      CAPTURE(m);
      CHECK(hist[-m] == c);
    }
  }
}

TEST_CASE("conjugate") {
  CHECK(conjugate(P({3, 1})) == P({2, 1, 1}));
  CHECK(conjugate(Partition()) == Partition());
  for (int n = 0; n <= 20; ++n)
    for (const auto& l : enumerate(n)) {
      const auto c = conjugate(l);
      CHECK(c.weight() == l.weight());
      CHECK(conjugate(c) == l);
    }
}

TEST_CASE("durfee_size") {
  CHECK(durfee_size(Partition()) == 0);
  CHECK(durfee_size(P({1, 1, 1})) == 1);
  CHECK(durfee_size(P({3, 3, 3, 1})) == 3);
  CHECK(durfee_size(P({4, 2, 1})) == 2);
}

TEST_CASE("Frobenius symbols") {
  CHECK(to_frobenius(P({3, 1})) == FrobeniusSymbol{{2}, {1}});
  CHECK(to_frobenius(Partition()) == FrobeniusSymbol{});
  CHECK(to_frobenius(P({2, 2})) == FrobeniusSymbol{{1, 0}, {1, 0}});
  CHECK(from_frobenius({{2}, {1}}) == P({3, 1}));
  CHECK(from_frobenius({}) == Partition());
  CHECK(from_frobenius({{1, 0}, {1, 0}}) == P({2, 2}));
  CHECK(from_frobenius({{4, 1}, {3, 0}}) == P({5, 3, 1, 1}));
}

TEST_CASE("from_frobenius rejects malformed symbols") {
  for (const FrobeniusSymbol& bad :
       {FrobeniusSymbol{{1, 1}, {2, 0}}, FrobeniusSymbol{{2, 0}, {1}},
        FrobeniusSymbol{{0, 1}, {1, 0}}, FrobeniusSymbol{{-1}, {0}}}) {
    CHECK_FALSE(bad.valid());
    CHECK(error_code_of([&] { from_frobenius(bad); }) ==
          ErrorCode::MalformedSymbol);
  }
}

TEST_CASE("Frobenius round trip and weight, n <= 35") {
  for (int n = 0; n <= 35; ++n) {
    for (const auto& l : enumerate(n)) {
      const auto f = to_frobenius(l);
      CHECK(f.valid());
      CHECK(static_cast<int>(f.rank()) == durfee_size(l));
      CHECK(f.weight() == n);
      CHECK(from_frobenius(f) == l);
    }
  }
}

TEST_CASE("every valid small symbol round-trips") {
  // All pairs of strictly decreasing rows with entries < 5, equal length.
  std::vector<std::vector<int>> rows;
  for (int mask = 0; mask < 32; ++mask) {
    std::vector<int> r;
    for (int v = 4; v >= 0; --v)
      if (mask & (1 << v)) r.push_back(v);
    rows.push_back(r);
  }
  for (const auto& top : rows)
    for (const auto& bottom : rows) {
      if (top.size() != bottom.size()) continue;
      const FrobeniusSymbol f{top, bottom};
      const auto l = from_frobenius(f);
      CHECK(l.weight() == f.weight());
      CHECK(to_frobenius(l) == f);
    }
}

TEST_CASE("enumeration is deterministic") {
  CHECK(listed(18) == listed(18));
}

TEST_CASE("p_of is safe under concurrent first use") {
  std::vector<std::jthread> pool;
  std::vector<BigInt> got(8);
  for (int t = 0; t < 8; ++t)
    pool.emplace_back([&, t] { got[t] = p_of(900 + 10 * t); });
  pool.clear();
  // Reference table from the product of geometric series.
  std::vector<BigInt> ref(971);
  ref[0] = 1;
  for (std::size_t k = 1; k < ref.size(); ++k)
    for (std::size_t e = k; e < ref.size(); ++e) ref[e] += ref[e - k];
  for (int t = 0; t < 8; ++t) CHECK(got[t] == ref[900 + 10 * t]);
  CHECK(p_of(1000) == BigInt("24061467864032622473692149727991"));
}
