#include "mexcrank/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "mexcrank/counting.hpp"
#include "mexcrank/error.hpp"
#include "mexcrank/oracle.hpp"
#include "mexcrank/partitions.hpp"
#include "mexcrank/qseries.hpp"

namespace mexcrank::verify {

namespace {

using qseries::GfKind;
using qseries::TruncatedSeries;
using Params = std::vector<std::pair<std::string, std::int64_t>>;

// A grid point before evaluation.
struct Point {
  std::string variant;
  Params params;
  bool expected_exception = false;

  std::int64_t get(std::string_view name) const {
    for (const auto& [k, v] : params)
      if (k == name) return v;
    throw std::logic_error("grid point lacks parameter " + std::string(name));
  }
};

Record make_record(const Point& pt, BigInt lhs, BigInt rhs,
                   Relation relation = Relation::Equal) {
  Record r;
  r.params = pt.params;
  r.variant = pt.variant;
  r.relation = relation;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.expected_exception = pt.expected_exception;
  return r;
}

std::vector<Record> evaluate_points(
    const std::vector<Point>& points, unsigned workers,
    const std::function<Record(const Point&)>& fn) {
  return parallel_map(points.size(), workers,
                      [&](std::size_t i) { return fn(points[i]); });
}

std::int64_t main_top(const RunConfig& cfg, std::int64_t fallback) {
  return cfg.n_max.value_or(fallback);
}

// Enumeration-backed variants never go past the budget.
std::int64_t oracle_top(const RunConfig& cfg) {
  return std::min(cfg.n_max.value_or(cfg.budget), cfg.budget);
}

std::size_t series_order(const RunConfig& cfg, std::int64_t fallback) {
  return static_cast<std::size_t>(std::max<std::int64_t>(0, main_top(cfg, fallback)));
}

// Combinatorial crank counts disagree with the generating function at n = 1.
bool combinatorial_anomaly(std::int64_t n) { return n == 1; }

std::map<std::int64_t, std::map<int, BigInt>> crank_histograms(
    std::int64_t top, const RunConfig& cfg) {
  std::map<std::int64_t, std::map<int, BigInt>> out;
  for (std::int64_t n = 0; n <= top; ++n)
    out[n] = oracle::crank_histogram(n, cfg.budget);
  return out;
}

BigInt lookup(const std::map<int, BigInt>& h, int key) {
  const auto it = h.find(key);
  return it == h.end() ? BigInt(0) : it->second;
}

// --- THM_JCRANK ----------------------------------------------------------

std::vector<Record> thm_jcrank(const RunConfig& cfg) {
  const std::int64_t top = oracle_top(cfg);
  p_of(top);
  std::vector<Point> pts;
  for (std::int64_t j = 0; j <= 10; ++j)
    for (std::int64_t n = 0; n <= top; ++n)
      pts.push_back({"mexj_oracle", {{"j", j}, {"n", n}}});
  for (std::int64_t j = 0; j <= 10; ++j)
    for (std::int64_t n = 0; n <= top; ++n)
      pts.push_back({"combinatorial_crank", {{"j", j}, {"n", n}},
                     combinatorial_anomaly(n)});
  return evaluate_points(pts, cfg.workers, [&](const Point& pt) {
    const auto j = pt.get("j");
    const auto n = pt.get("n");
    const auto pred = pt.variant == "mexj_oracle"
                          ? oracle::mex_j_minus_j_odd(static_cast<int>(j))
                          : oracle::crank_at_least(static_cast<int>(j));
    return make_record(pt, oracle::oracle_count(n, pred, cfg.budget),
                       counting::crank_geq(j, n));
  });
}

// --- COR_CRANKRECUR ------------------------------------------------------

std::vector<Record> cor_crankrecur(const RunConfig& cfg) {
  const std::int64_t otop = oracle_top(cfg);
  const std::size_t order = series_order(cfg, 200);
  p_of(static_cast<std::int64_t>(order));
  const auto hist = crank_histograms(otop, cfg);
  std::map<std::int64_t, TruncatedSeries> series;
  for (std::int64_t m = -12; m <= 12; ++m)
    series.emplace(m, qseries::gf(GfKind::crank_m(m), order));

  std::vector<Point> pts;
  for (std::int64_t m = -12; m <= 12; ++m)
    for (std::int64_t n = 0; n <= otop; ++n)
      pts.push_back({"oracle", {{"m", m}, {"n", n}}, combinatorial_anomaly(n)});
  for (std::int64_t m = -12; m <= 12; ++m)
    for (std::int64_t n = 0; n <= static_cast<std::int64_t>(order); ++n)
      pts.push_back({"series", {{"m", m}, {"n", n}}});
  return evaluate_points(pts, cfg.workers, [&](const Point& pt) {
    const auto m = pt.get("m");
    const auto n = pt.get("n");
    if (pt.variant == "oracle")
      return make_record(pt, counting::M(m, n),
                         lookup(hist.at(n), static_cast<int>(m)));
    return make_record(pt, counting::M(m, n),
                       series.at(m)[static_cast<std::size_t>(n)]);
  });
}

// --- PROP_MEXFORM --------------------------------------------------------

std::vector<Record> prop_mexform(const RunConfig& cfg) {
  const std::int64_t top = oracle_top(cfg);
  std::map<std::int64_t, std::map<int, BigInt>> hist;
  for (std::int64_t n = 0; n <= top; ++n)
    hist[n] = oracle::mex_histogram(n, cfg.budget);
  // One past the largest possible mex, so zero counts are covered too.
  std::int64_t m_top = 1;
  while (counting::triangular(m_top - 1) <= top) ++m_top;

  std::vector<Point> pts;
  for (std::int64_t m = 1; m <= m_top; ++m)
    for (std::int64_t n = 0; n <= top; ++n)
      pts.push_back({"oracle", {{"m", m}, {"n", n}}});
  return evaluate_points(pts, cfg.workers, [&](const Point& pt) {
    const auto m = pt.get("m");
    const auto n = pt.get("n");
    return make_record(pt, counting::x_mex(m, n),
                       lookup(hist.at(n), static_cast<int>(m)));
  });
}

// --- COR_0CRANK ----------------------------------------------------------

std::vector<Record> cor_0crank(const RunConfig& cfg) {
  const std::int64_t top = main_top(cfg, 300);
  const std::int64_t otop = oracle_top(cfg);
  p_of(top);
  const auto hist = crank_histograms(otop, cfg);
  std::vector<Point> pts;
  for (std::int64_t n = 0; n <= top; ++n) pts.push_back({"formula", {{"n", n}}});
  for (std::int64_t n = 0; n <= otop; ++n)
    pts.push_back({"oracle", {{"n", n}}, combinatorial_anomaly(n)});
  return evaluate_points(pts, cfg.workers, [&](const Point& pt) {
    const auto n = pt.get("n");
    if (pt.variant == "formula")
      return make_record(pt, counting::crank_zero_triangular(n),
                         counting::M(0, n));
    return make_record(pt, counting::crank_zero_triangular(n),
                       lookup(hist.at(n), 0));
  });
}

// --- PROP_NOF0 -----------------------------------------------------------

std::vector<Record> prop_nof0(const RunConfig& cfg) {
  const std::size_t order = series_order(cfg, 200);
  const std::int64_t otop =
      std::min<std::int64_t>(oracle_top(cfg), static_cast<std::int64_t>(order));
  p_of(static_cast<std::int64_t>(order));
  const TruncatedSeries frob = qseries::gf(GfKind::frob_no0(), order);
  std::vector<Point> pts;
  for (std::int64_t n = 0; n <= static_cast<std::int64_t>(order); ++n)
    pts.push_back({"series_difference", {{"n", n}}});
  for (std::int64_t n = 0; n <= otop; ++n)
    pts.push_back({"oracle_symbols", {{"n", n}}});
  return evaluate_points(pts, cfg.workers, [&](const Point& pt) {
    const auto n = pt.get("n");
    if (pt.variant == "series_difference")
      return make_record(pt, counting::M(0, n),
                         frob.coeff_or_zero(n) - frob.coeff_or_zero(n - 1));
    return make_record(
        pt, frob[static_cast<std::size_t>(n)],
        oracle::oracle_count(n, oracle::frobenius_has_no_zero(), cfg.budget));
  });
}

// --- THM_FROB_J ----------------------------------------------------------

std::vector<Record> thm_frob_j(const RunConfig& cfg) {
  const std::int64_t top = main_top(cfg, 200);
  const std::int64_t otop = oracle_top(cfg);
  const std::size_t order = static_cast<std::size_t>(std::max<std::int64_t>(top, 0));
  p_of(top);
  std::vector<TruncatedSeries> series;
  for (std::int64_t j = 0; j <= 8; ++j)
    series.push_back(qseries::gf(GfKind::frob_noj_top(j), order));

  std::vector<Point> pts;
  for (std::int64_t j = 0; j <= 8; ++j)
    for (std::int64_t n = j; n <= top; ++n)
      pts.push_back({"series", {{"j", j}, {"n", n}}});
  // The oracle enumerates partitions of n - j, so n may run to budget + j.
  for (std::int64_t j = 0; j <= 8; ++j)
    for (std::int64_t n = j; n - j <= otop && n <= top; ++n)
      pts.push_back({"oracle_symbols", {{"j", j}, {"n", n}}});
  return evaluate_points(pts, cfg.workers, [&](const Point& pt) {
    const auto j = pt.get("j");
    const auto n = pt.get("n");
    if (pt.variant == "series")
      return make_record(pt, counting::crank_geq(j, n),
                         series[j][static_cast<std::size_t>(n - j)]);
    return make_record(
        pt, counting::crank_geq(j, n),
        oracle::oracle_count(n - j,
                             oracle::frobenius_top_lacks(static_cast<int>(j)),
                             cfg.budget));
  });
}

// --- PROP_O13 ------------------------------------------------------------

std::vector<Record> prop_o13(const RunConfig& cfg) {
  const std::int64_t top = main_top(cfg, 400);
  const std::int64_t otop = oracle_top(cfg);
  p_of(top);
  std::vector<Point> pts;
  for (std::int64_t n = 1; n <= top; ++n) pts.push_back({"formula", {{"n", n}}});
  for (std::int64_t n = 1; n <= otop; ++n) pts.push_back({"oracle", {{"n", n}}});
  return evaluate_points(pts, cfg.workers, [&](const Point& pt) {
    const auto n = pt.get("n");
    if (pt.variant == "formula")
      return make_record(pt, counting::o1_of(n) - counting::o3_of(n),
                         n % 2 == 0 ? q_distinct(n / 2) : BigInt(0));
    const auto hist = oracle::mex_histogram(n, cfg.budget);
    BigInt diff = 0;
    for (const auto& [m, c] : hist) {
      if (m % 4 == 1) diff += c;
      if (m % 4 == 3) diff -= c;
    }
    BigInt distinct_half =
        n % 2 == 0
            ? oracle::oracle_count(n / 2, oracle::distinct_parts(), cfg.budget)
            : BigInt(0);
    return make_record(pt, diff, distinct_half);
  });
}

// --- EWELL_EVEN / EWELL_ODD ----------------------------------------------

std::vector<Record> ewell(const RunConfig& cfg, bool even) {
  const std::int64_t top = main_top(cfg, 300);
  p_of(2 * top + 1);
  std::vector<Point> pts;
  for (std::int64_t k = 0; k <= top; ++k)
    pts.push_back({"formula", {{"k", k}}});
  return evaluate_points(pts, cfg.workers, [&](const Point& pt) {
    const auto k = pt.get("k");
    if (even)
      return make_record(pt, counting::ewell_even(k), q_distinct(k));
    return make_record(pt, counting::ewell_odd(k), BigInt(0));
  });
}

// --- THM_AN_PARITY -------------------------------------------------------

std::vector<Record> thm_an_parity(const RunConfig& cfg) {
  const std::int64_t top = main_top(cfg, 2000);
  p_of(top);
  std::vector<Point> pts;
  for (std::int64_t n = 1; n <= top; ++n) pts.push_back({"formula", {{"n", n}}});
  return evaluate_points(pts, cfg.workers, [&](const Point& pt) {
    const auto n = pt.get("n");
    const BigInt parity = counting::o_of(n) % 2;
    return make_record(pt, parity,
                       counting::is_double_pentagonal(n) ? 1 : 0);
  });
}

// --- INEQ_OE -------------------------------------------------------------

std::vector<Record> ineq_oe(const RunConfig& cfg) {
  const std::int64_t top = main_top(cfg, 1000);
  p_of(top);
  std::vector<Point> pts;
  for (std::int64_t n = 3; n <= top; ++n) pts.push_back({"formula", {{"n", n}}});
  return evaluate_points(pts, cfg.workers, [&](const Point& pt) {
    const auto n = pt.get("n");
    return make_record(pt, counting::o_of(n), counting::e_of(n),
                       Relation::Greater);
  });
}

// --- SERIES_HEINE --------------------------------------------------------

// sum_s q^{a(s)} / (q)_s^2 using pochhammer_finite and invert only.
TruncatedSeries reciprocal_square_sum(std::size_t order,
                                      std::size_t (*exponent)(std::size_t)) {
  TruncatedSeries acc(order);
  for (std::size_t s = 0;; ++s) {
    const std::size_t e = exponent(s);
    if (e > order) break;
    const TruncatedSeries r = qseries::invert(qseries::pochhammer_finite(s, order - e));
    const TruncatedSeries sq = r * r;
    std::vector<BigInt> c(order + 1);
    for (std::size_t k = 0; k <= sq.order(); ++k) c[e + k] = sq[k];
    acc = acc + TruncatedSeries(std::move(c));
  }
  return acc;
}

std::vector<Record> series_heine(const RunConfig& cfg) {
  const std::size_t order = series_order(cfg, 200);
  const TruncatedSeries one_minus_q =
      TruncatedSeries::one(order) - TruncatedSeries::monomial(1, order);
  const TruncatedSeries lhs =
      one_minus_q * reciprocal_square_sum(order, [](std::size_t s) {
        return s * s + 2 * s;
      });
  const TruncatedSeries rhs =
      qseries::gf(GfKind::poch_q_inf(), order) *
      reciprocal_square_sum(order, [](std::size_t k) { return 2 * k; });
  const TruncatedSeries alt = qseries::gf(GfKind::crank0_alt(), order);
  const TruncatedSeries crank0 = qseries::gf(GfKind::crank_m(0), order);

  std::vector<Point> pts;
  for (std::int64_t n = 0; n <= static_cast<std::int64_t>(order); ++n)
    pts.push_back({"heine", {{"n", n}}});
  for (std::int64_t n = 0; n <= static_cast<std::int64_t>(order); ++n)
    pts.push_back({"crank0_alt", {{"n", n}}});
  return evaluate_points(pts, cfg.workers, [&](const Point& pt) {
    const auto n = static_cast<std::size_t>(pt.get("n"));
    if (pt.variant == "heine") return make_record(pt, lhs[n], rhs[n]);
    return make_record(pt, alt[n], crank0[n]);
  });
}

// --- DURFEE_RECT ---------------------------------------------------------

std::vector<Record> durfee_rect(const RunConfig& cfg) {
  const std::size_t order = series_order(cfg, 200);
  const TruncatedSeries euler = qseries::gf(GfKind::euler_inv(), order);
  std::vector<TruncatedSeries> rects;
  for (std::int64_t b = 0; b <= 10; ++b)
    rects.push_back(qseries::gf(GfKind::durfee_rect(b), order));
  std::vector<Point> pts;
  for (std::int64_t b = 0; b <= 10; ++b)
    for (std::int64_t n = 0; n <= static_cast<std::int64_t>(order); ++n)
      pts.push_back({"series", {{"b", b}, {"n", n}}});
  return evaluate_points(pts, cfg.workers, [&](const Point& pt) {
    const auto b = pt.get("b");
    const auto n = static_cast<std::size_t>(pt.get("n"));
    return make_record(pt, rects[b][n], euler[n]);
  });
}

// --- CRANK_GF_CONSISTENCY ------------------------------------------------

std::vector<Record> crank_gf_consistency(const RunConfig& cfg) {
  const std::size_t order = series_order(cfg, 300);
  p_of(static_cast<std::int64_t>(order));
  std::vector<TruncatedSeries> series;
  for (std::int64_t m = 0; m <= 12; ++m)
    series.push_back(qseries::gf(GfKind::crank_m(m), order));
  std::vector<Point> pts;
  for (std::int64_t m = 0; m <= 12; ++m)
    for (std::int64_t n = 0; n <= static_cast<std::int64_t>(order); ++n)
      pts.push_back({"series", {{"m", m}, {"n", n}}});
  return evaluate_points(pts, cfg.workers, [&](const Point& pt) {
    const auto m = pt.get("m");
    const auto n = pt.get("n");
    return make_record(pt, series[m][static_cast<std::size_t>(n)],
                       counting::M(m, n));
  });
}

bool holds(const Record& r) {
  switch (r.relation) {
    case Relation::Equal: return r.lhs == r.rhs;
    case Relation::Greater: return r.lhs > r.rhs;
  }
  return false;
}

std::vector<IdentityCheck> build_registry() {
  return {
      {"THM_JCRANK",
       "partitions of n with crank >= j are equinumerous with partitions of n "
       "for which mex_j - j is odd",
       "enumerated count of partitions with mex_j - j odd (or with "
       "combinatorial crank >= j)",
       "crank_geq(j, n) from the telescoped crank series",
       "j = 0..10, n = 0..budget", thm_jcrank},
      {"COR_CRANKRECUR",
       "M(j, n) = sum_k (-1)^{k+1} [p(n - k(k+2j-1)/2) - p(n - k(k+2j+1)/2)]",
       "M(m, n) via the p(n) recurrence",
       "enumerated crank counts (n != 1), and [q^n] of the crank series",
       "m = -12..12; oracle n = 0..budget, series n = 0..200", cor_crankrecur},
      {"PROP_MEXFORM",
       "partitions of n with mex m number p(n - t_{m-1}) - p(n - t_m)",
       "x_mex(m, n)", "enumerated mex counts",
       "m = 1..(largest mex + 1), n = 0..budget", prop_mexform},
      {"COR_0CRANK",
       "M(0, n) = p(n) + 2 sum_{k>=1} (-1)^k p(n - k(k+1)/2)",
       "triangular-number expansion",
       "M(0, n) via the crank recurrence, and enumerated crank-0 counts "
       "(n != 1)",
       "formula n = 0..300, oracle n = 0..budget", cor_0crank},
      {"PROP_NOF0",
       "crank-0 partitions of n equal Frobenius symbols of n with no 0 minus "
       "those of n - 1",
       "M(0, n), or [q^n] of the no-0 Frobenius series",
       "F(n) - F(n-1) from the no-0 Frobenius series, or enumerated symbols",
       "series n = 0..200, oracle n = 0..budget", prop_nof0},
      {"THM_FROB_J",
       "partitions of n with crank >= j equal partitions of n - j whose "
       "Frobenius symbol has no j in the top row",
       "crank_geq(j, n)",
       "[q^{n-j}] of the no-j-top series, or enumerated symbols of n - j",
       "j = 0..8, series n = j..200, oracle n - j = 0..budget", thm_frob_j},
      {"PROP_O13",
       "o1(n) - o3(n) = q(n/2) for even n and 0 for odd n",
       "o1(n) - o3(n)", "q(n/2) or 0",
       "formula n = 1..400, oracle n = 1..budget", prop_o13},
      {"EWELL_EVEN", "Ewell: sum_j (-1)^{t_j} p(2k - t_j) = q(k)",
       "ewell_even(k)", "q_distinct(k)", "k = 0..300",
       [](const RunConfig& c) { return ewell(c, true); }},
      {"EWELL_ODD", "Ewell: sum_j (-1)^{t_j} p(2k + 1 - t_j) = 0",
       "ewell_odd(k)", "0", "k = 0..300",
       [](const RunConfig& c) { return ewell(c, false); }},
      {"THM_AN_PARITY",
       "o(n) is odd exactly when n = j(3j +- 1) for some j >= 1",
       "o(n) mod 2", "1 if n is j(3j +- 1), else 0", "n = 1..2000",
       thm_an_parity},
      {"INEQ_OE", "o(n) > e(n) for every n > 2", "o(n)", "e(n)",
       "n = 3..1000", ineq_oe},
      {"SERIES_HEINE",
       "(1-q) sum_s q^{s^2+2s}/(q)_s^2 = (q)_inf sum_k q^{2k}/(q)_k^2, the "
       "crank-0 generating function",
       "(1-q) times the no-0 Frobenius sum; or the CRANK0_ALT series",
       "(q)_inf times the q^{2k}/(q)_k^2 sum; or the crank-0 series",
       "n = 0..200", series_heine},
      {"DURFEE_RECT",
       "sum_s q^{s^2+bs}/((q)_s (q)_{s+b}) = 1/(q)_inf for every b >= 0",
       "Durfee-rectangle series", "1/(q)_inf as a product of geometric series",
       "b = 0..10, n = 0..200", durfee_rect},
      {"CRANK_GF_CONSISTENCY",
       "[q^n] of the crank-m generating function equals M(m, n)",
       "[q^n] gf(CRANK_M{m})", "M(m, n) via the p(n) recurrence",
       "m = 0..12, n = 0..300", crank_gf_consistency},
  };
}

}  // namespace

std::string_view to_string(Relation r) noexcept {
  return r == Relation::Equal ? "eq" : "gt";
}

std::optional<std::int64_t> Record::param(std::string_view name) const {
  for (const auto& [k, v] : params)
    if (k == name) return v;
  return std::nullopt;
}

const Record* VerificationReport::first_counterexample() const noexcept {
  for (const auto& r : records)
    if (!r.pass) return &r;
  return nullptr;
}

std::vector<Record> parallel_map(std::size_t count, unsigned workers,
                                 const std::function<Record(std::size_t)>& fn) {
  std::vector<Record> out(count);
  workers = std::max(1u, workers);
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < std::min<std::size_t>(workers, count); ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            out[i] = fn(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = count;
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

const std::vector<IdentityCheck>& registry() {
  static const std::vector<IdentityCheck> checks = build_registry();
  return checks;
}

const IdentityCheck* find_check(std::string_view id) {
  for (const auto& c : registry())
    if (c.id == id) return &c;
  return nullptr;
}

VerificationReport run_check(const IdentityCheck& check,
                             const RunConfig& config) {
  VerificationReport report;
  report.check_id = check.id;
  report.records = check.evaluate(config);
  const auto& perturb = config.perturbation;
  for (auto& r : report.records) {
    if (perturb && perturb->check_id == check.id && r.param("n") == perturb->n)
      r.rhs += perturb->delta;
    ++report.summary.total;
    if (r.expected_exception) {
      r.pass = true;
      ++report.summary.expected_exceptions;
      continue;
    }
    r.pass = holds(r);
    ++(r.pass ? report.summary.passed : report.summary.failed);
  }
  return report;
}

}  // namespace mexcrank::verify
