#include "mexcrank/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "mexcrank/counting.hpp"
#include "mexcrank/error.hpp"
#include "mexcrank/partitions.hpp"
#include "mexcrank/qseries.hpp"
#include "mexcrank/report.hpp"
#include "mexcrank/verify.hpp"

namespace mexcrank::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { Csv, Json };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  // table
  std::string fn = "p";
  std::int64_t n_max = 100;
  std::optional<std::int64_t> m;
  std::optional<std::int64_t> j;
  // series
  std::string kind;
  std::int64_t order = 200;
  std::optional<std::int64_t> b;
  // stat
  std::vector<long long> parts;
  // verify
  bool all = false;
  std::vector<std::string> checks;
  std::optional<std::int64_t> verify_n_max;
  std::optional<std::int64_t> budget;
  unsigned workers = 1;
  bool summary_only = false;
  std::optional<std::string> tolerance;
  // shared
  Format format = Format::Csv;
  bool no_header = false;
};

// `doc` carries the identifying fields of the JSON form.
void emit_rows(std::ostream& out, const Options& opt, json doc,
               const std::string& value_name, const std::vector<BigInt>& values) {
  if (opt.format == Format::Csv) {
    if (!opt.no_header) out << "n," << value_name << '\n';
    for (std::size_t n = 0; n < values.size(); ++n)
      out << n << ',' << values[n].str() << '\n';
    return;
  }
  json rows = json::array();
  for (std::size_t n = 0; n < values.size(); ++n)
    rows.push_back({{"n", std::to_string(n)}, {value_name, values[n].str()}});
  doc["rows"] = std::move(rows);
  out << doc.dump() << '\n';
}

std::int64_t require(const std::optional<std::int64_t>& v, const char* flag,
                     const std::string& what) {
  if (!v) throw UsageError(what + " needs " + flag);
  return *v;
}

int cmd_table(const Options& opt, std::ostream& out) {
  if (opt.n_max < 0) throw UsageError("--n-max must be >= 0");
  json params = json::object();
  std::function<BigInt(std::int64_t)> f;
  if (opt.fn == "p") {
    f = [](std::int64_t n) { return p_of(n); };
  } else if (opt.fn == "q") {
    f = [](std::int64_t n) { return q_distinct(n); };
  } else if (opt.fn == "M") {
    const auto m = require(opt.m, "--m", "M");
    params["m"] = std::to_string(m);
    f = [m](std::int64_t n) { return counting::M(m, n); };
  } else if (opt.fn == "crank_geq") {
    const auto j = require(opt.j, "--j", "crank_geq");
    if (j < 0) throw UsageError("--j must be >= 0");
    params["j"] = std::to_string(j);
    f = [j](std::int64_t n) { return counting::crank_geq(j, n); };
  } else if (opt.fn == "x_mex") {
    const auto m = require(opt.m, "--m", "x_mex");
    if (m < 1) throw UsageError("--m must be >= 1 for x_mex");
    params["m"] = std::to_string(m);
    f = [m](std::int64_t n) { return counting::x_mex(m, n); };
  } else if (opt.fn == "o") {
    f = counting::o_of;
  } else if (opt.fn == "e") {
    f = counting::e_of;
  } else if (opt.fn == "o1") {
    f = counting::o1_of;
  } else if (opt.fn == "o3") {
    f = counting::o3_of;
  } else {
    throw UsageError("unknown --fn " + opt.fn);
  }
  p_of(opt.n_max);
  std::vector<BigInt> values;
  values.reserve(static_cast<std::size_t>(opt.n_max) + 1);
  for (std::int64_t n = 0; n <= opt.n_max; ++n) values.push_back(f(n));
  emit_rows(out, opt, {{"fn", opt.fn}, {"params", params}}, "value", values);
  return kExitOk;
}

int cmd_series(const Options& opt, std::ostream& out) {
  using qseries::GfKind;
  if (opt.order < 0) throw UsageError("--order must be >= 0");
  json params = json::object();
  auto with = [&](const std::optional<std::int64_t>& v, const char* flag,
                  const char* name) {
    const auto x = require(v, flag, opt.kind);
    params[name] = std::to_string(x);
    return x;
  };
  GfKind kind;
  if (opt.kind == "euler_inv") {
    kind = GfKind::euler_inv();
  } else if (opt.kind == "poch_q_inf") {
    kind = GfKind::poch_q_inf();
  } else if (opt.kind == "distinct") {
    kind = GfKind::distinct();
  } else if (opt.kind == "crank_m") {
    kind = GfKind::crank_m(with(opt.m, "--m", "m"));
  } else if (opt.kind == "crank_geq") {
    kind = GfKind::crank_geq_j(with(opt.j, "--j", "j"));
  } else if (opt.kind == "frob_no0") {
    kind = GfKind::frob_no0();
  } else if (opt.kind == "crank0_alt") {
    kind = GfKind::crank0_alt();
  } else if (opt.kind == "frob_noj_top") {
    kind = GfKind::frob_noj_top(with(opt.j, "--j", "j"));
  } else if (opt.kind == "durfee_rect") {
    kind = GfKind::durfee_rect(with(opt.b, "--b", "b"));
  } else {
    throw UsageError("unknown --kind " + opt.kind);
  }
  const auto s = qseries::gf(kind, static_cast<std::size_t>(opt.order));
  const std::vector<BigInt> coeffs(s.coeffs().begin(), s.coeffs().end());
  emit_rows(out, opt,
            {{"kind", opt.kind}, {"params", params}, {"order", std::to_string(opt.order)}},
            "coefficient", coeffs);
  return kExitOk;
}

int cmd_stat(const Options& opt, std::ostream& out) {
  std::vector<int> raw;
  for (long long p : opt.parts) {
    if (p <= 0) throw UsageError("parts must be positive, got " + std::to_string(p));
    if (p > std::numeric_limits<int>::max()) throw UsageError("part too large");
    raw.push_back(static_cast<int>(p));
  }
  const Partition lambda = Partition::from_unsorted(std::move(raw));
  const FrobeniusSymbol f = to_frobenius(lambda);
  json doc;
  doc["parts"] = std::vector<int>(lambda.parts().begin(), lambda.parts().end());
  doc["weight"] = lambda.weight();
  doc["mex"] = mex(lambda);
  doc["crank"] = crank(lambda);
  doc["durfee"] = durfee_size(lambda);
  doc["frobenius"] = {{"top", f.top}, {"bottom", f.bottom}};
  json mexj = json::object();
  std::vector<int> distinct(lambda.parts().rbegin(), lambda.parts().rend());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (int j : distinct) mexj[std::to_string(j)] = mex_j(lambda, j);
  doc["mex_j"] = std::move(mexj);
  out << doc.dump() << '\n';
  return kExitOk;
}

std::int64_t resolve_budget(const Options& opt) {
  if (opt.budget) {
    if (*opt.budget < 0) throw UsageError("--budget must be >= 0");
    return *opt.budget;
  }
  if (const char* env = std::getenv("MEXCRANK_BUDGET")) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(env, &used);
      if (used != std::string(env).size() || v < 0) throw std::invalid_argument(env);
      return v;
    } catch (const std::exception&) {
      throw UsageError(std::string("MEXCRANK_BUDGET is not a nonnegative integer: ") + env);
    }
  }
  return oracle::kDefaultBudget;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.tolerance)
    throw UsageError("identities are checked by exact equality; --tolerance is not accepted");
  if (opt.all == !opt.checks.empty())
    throw UsageError("verify needs exactly one of --all or --check");
  if (opt.verify_n_max && *opt.verify_n_max < 0)
    throw UsageError("--n-max must be >= 0");

  std::vector<const verify::IdentityCheck*> selected;
  if (opt.all) {
    for (const auto& c : verify::registry()) selected.push_back(&c);
  } else {
    for (const auto& id : opt.checks) {
      const auto* c = verify::find_check(id);
      if (!c) throw UsageError("unknown check " + id);
      selected.push_back(c);
    }
  }

  verify::RunConfig config;
  config.n_max = opt.verify_n_max;
  config.budget = resolve_budget(opt);
  config.workers = opt.workers == 0
                       ? std::max(1u, std::thread::hardware_concurrency())
                       : opt.workers;

  bool all_pass = true;
  json reports = json::array();
  for (const auto* check : selected) {
    const auto report = verify::run_check(*check, config);
    all_pass = all_pass && report.all_passed();
    err << check->id << ": " << (report.all_passed() ? "pass" : "FAIL") << " ("
        << report.summary.passed << " passed, " << report.summary.failed
        << " failed, " << report.summary.expected_exceptions
        << " expected exceptions)\n";
    reports.push_back(verify::to_json(report, *check, !opt.summary_only));
  }
  json doc;
  doc["pass"] = all_pass;
  doc["reports"] = std::move(reports);
  out << doc.dump() << '\n';
  return all_pass ? kExitOk : kExitFailure;
}

void add_format_flags(CLI::App* sub, Options& opt) {
  static const std::map<std::string, Format> formats{{"csv", Format::Csv},
                                                     {"json", Format::Json}};
  sub->add_option("--format", opt.format, "Output format: csv or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  sub->add_flag("--no-header", opt.no_header, "Omit the CSV header row");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Exact partition statistics (mex, mex_j, crank, Frobenius "
               "symbols) and truncated q-series",
               "mexcrank"};
  app.require_subcommand(1);

  auto* table = app.add_subcommand("table", "Tabulate a counting function over n = 0..n_max");
  table->add_option("--fn", opt.fn, "p, q, M, crank_geq, x_mex, o, e, o1, o3")
      ->required();
  table->add_option("--n-max", opt.n_max, "Largest n (default 100)");
  table->add_option("--m", opt.m, "Crank (M) or mex (x_mex) value");
  table->add_option("--j", opt.j, "Lower crank bound for crank_geq");
  add_format_flags(table, opt);

  auto* series = app.add_subcommand("series", "Expand a generating function to order N");
  series->add_option("--kind", opt.kind,
                     "euler_inv, poch_q_inf, distinct, crank_m, crank_geq, "
                     "frob_no0, crank0_alt, frob_noj_top, durfee_rect")
      ->required();
  series->add_option("--order", opt.order, "Highest exponent kept (default 200)");
  series->add_option("--m", opt.m, "Crank value for crank_m");
  series->add_option("--j", opt.j, "Parameter j for crank_geq / frob_noj_top");
  series->add_option("--b", opt.b, "Rectangle offset b for durfee_rect");
  add_format_flags(series, opt);

  auto* stat = app.add_subcommand("stat", "Statistics of one partition, given as its parts");
  stat->add_option("parts", opt.parts, "Parts in any order");

  auto* verify = app.add_subcommand("verify", "Run identity checks");
  verify->add_flag("--all", opt.all, "Run every registered check");
  verify->add_option("--check", opt.checks, "Check id (repeatable)");
  verify->add_option("--n-max", opt.verify_n_max, "Override each check's main range");
  verify->add_option("--budget", opt.budget,
                     "Enumeration cap (default 35, or MEXCRANK_BUDGET)");
  verify->add_option("--workers", opt.workers, "Worker threads; 0 = hardware concurrency");
  verify->add_flag("--summary", opt.summary_only, "Only list failing and exceptional records");
  verify->add_option("--tolerance", opt.tolerance)->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*table) return cmd_table(opt, out);
    if (*series) return cmd_series(opt, out);
    if (*stat) return cmd_stat(opt, out);
    if (*verify) return cmd_verify(opt, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mexcrank::cli
