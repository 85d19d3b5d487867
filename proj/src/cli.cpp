#include "primecert/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "primecert/binom.hpp"
#include "primecert/bounds.hpp"
#include "primecert/errors.hpp"
#include "primecert/theorems.hpp"

namespace primecert::cli {

namespace {

struct Options {
  long precision = kDefaultMaxPrecision;
  std::string format = "json";
  std::string out_path;
  unsigned jobs = 1;

  std::string lemma_id;
  std::optional<int> part;
  std::optional<std::uint64_t> n;
  std::string theorem_id;
  std::optional<std::uint64_t> from;
  std::optional<std::uint64_t> to;
  std::string s;
  std::string r;
  std::uint64_t k = 4;
};

ReportItem plain_item(const std::string& instance, bool ok, const std::string& witness, const std::string& note = "") {
  ReportItem i;
  i.instance = instance;
  i.verdict = ok ? Verdict::pass : Verdict::fail;
  i.witness = witness;
  i.note = note;
  return i;
}

std::vector<CheckReport> lemma_reports(const Options& o) {
  std::vector<CheckReport> out;
  if (o.lemma_id == "3.1") {
    std::vector<int> parts = o.part ? std::vector<int>{*o.part} : std::vector<int>{1, 2, 3, 4};
    for (int p : parts) out.push_back(lemma31_check(p, o.n.value_or(lemma31_threshold(p)), o.precision).to_report());
  } else if (o.lemma_id == "3.2") {
    out.push_back(lemma32_check(o.n.value_or(6818), o.precision).to_report());
  } else if (o.lemma_id == "2.3") {
    const int part = o.part.value_or(1);
    const BigRational c(static_cast<long>(o.n.value_or(10)));
    const BigRational half(1, 2);
    out.push_back(lemma23_grid_check(part, c, uniform_grid(half, part == 1 ? c : c - half, 4), o.precision));
  } else {
    throw UsageError("unknown lemma '" + o.lemma_id + "' (expected 2.3, 3.1 or 3.2)");
  }
  return out;
}

CheckReport count_report(std::uint64_t n, const Options& o) {
  if (n < 3) throw UsageError("count bound needs n >= 3");
  const PrimeTable table(5 * n, o.jobs);
  CheckReport r = count_lower_bound(n, o.precision, &table).to_report();
  r.params["precision"] = std::to_string(o.precision);
  return r;
}

CheckReport threshold_report(std::uint64_t m, const Options& o) {
  CheckReport r;
  r.check_id = "theorem-4.5";
  r.params["m"] = std::to_string(m);
  r.params["precision"] = std::to_string(o.precision);
  const std::uint64_t L = threshold_for_count(m, o.precision);
  Certificate c = certify(count_simplified_expr(L), Relation::greater_equal,
                          Expr(BigRational(static_cast<long>(m))), o.precision);
  r.add("threshold L=" + std::to_string(L), c);
  const PrimeTable table(5 * L, o.jobs);
  const std::uint64_t count = table.count_in_range(4 * L + 1, 5 * L);
  r.add(plain_item("sieve count at L", count >= m, std::to_string(count), "pi(5L) - pi(4L)"));
  return r.finalize();
}

std::pair<std::uint64_t, std::uint64_t> range_of(const Options& o, std::uint64_t lo, std::uint64_t hi) {
  if (o.n) return {*o.n, *o.n};
  return {o.from.value_or(lo), o.to.value_or(hi)};
}

std::vector<CheckReport> theorem_reports(const Options& o) {
  const std::string& id = o.theorem_id;
  if (id == "3.3") {
    if (o.n && *o.n >= 6818) return {verify_tail_certificate(*o.n, o.precision)};
    auto [lo, hi] = range_of(o, 3, 6817);
    return {verify_base_cases(lo, hi, o.jobs)};
  }
  if (id == "4.1") {
    auto [lo, hi] = range_of(o, 3, 10000);
    return {sweep_theorem41(lo, hi, o.jobs)};
  }
  if (id == "4.2") {
    auto [lo, hi] = range_of(o, 3, 10000);
    return {sweep_theorem42(lo, hi, o.jobs)};
  }
  if (id == "4.3") {
    auto [lo, hi] = range_of(o, 6, 10000);
    return {sweep_theorem43(lo, hi, o.jobs)};
  }
  if (id == "4.4") return {count_report(o.n.value_or(100000), o)};
  if (id == "4.5") return {threshold_report(o.n.value_or(1), o)};
  throw UsageError("unknown theorem '" + id + "' (expected 3.3, 4.1, 4.2, 4.3, 4.4 or 4.5)");
}

std::vector<CheckReport> verify_all(const Options& o) {
  std::vector<CheckReport> out;
  out.push_back(verify_base_cases(3, 6817, o.jobs));
  out.push_back(verify_tail_certificate(6818, o.precision));
  for (int p = 1; p <= 4; ++p) out.push_back(lemma31_check(p, lemma31_threshold(p), o.precision).to_report());
  out.push_back(lemma32_check(6818, o.precision).to_report());
  out.push_back(sweep_theorem41(3, 10000, o.jobs));
  out.push_back(sweep_theorem42(3, 10000, o.jobs));
  out.push_back(sweep_theorem43(6, 10000, o.jobs));
  out.push_back(theorem43_constants());
  out.push_back(count_report(100000, o));
  return out;
}

CheckReport decompose_report(std::uint64_t n, const Options& o) {
  if (n < 1) throw UsageError("decompose needs n >= 1");
  const PrimeTable table(5 * n, o.jobs);
  const Decomposition d = decompose(n, table);
  auto render = [](const ValuationMap& m) {
    std::ostringstream s;
    for (std::size_t i = 0; i < m.entries.size(); ++i)
      s << (i ? " " : "") << m.entries[i].first << (m.entries[i].second > 1 ? "^" + std::to_string(m.entries[i].second) : "");
    return s.str();
  };
  std::ostringstream t3;
  for (std::size_t i = 0; i < d.t3.size(); ++i) t3 << (i ? " " : "") << d.t3[i];

  CheckReport r;
  r.check_id = "decompose";
  r.params["n"] = std::to_string(n);
  r.add(plain_item("T1", true, render(d.t1), std::to_string(d.t1.entries.size()) + " primes with p^2 <= 5n"));
  r.add(plain_item("T2", d.t2.max_exponent() <= 1, render(d.t2), "exponents at most 1"));
  r.add(plain_item("T3", !d.t3.empty(), t3.str(), std::to_string(d.t3.size()) + " primes in (4n, 5n]"));
  r.add(plain_item("identity", d.t1_product() * d.t2_product() * d.t3_product() == binomial(5 * n, 4 * n),
                   "T1 T2 T3 = C(5n,4n)"));
  return r.finalize();
}

CheckReport bracket_report(const Options& o) {
  const BigRational s = BigRational::parse(o.s);
  const BigRational r = BigRational::parse(o.r);
  const BracketValue b = bracket(s, r);
  CheckReport rep;
  rep.check_id = "bracket";
  rep.params["s"] = s.str();
  rep.params["r"] = r.str();
  rep.add(plain_item("value", b.value == BigRational(BigInt(b.delta * b.floor_binomial)), b.value.str(),
                     "delta = " + b.delta.get_str() + ", C([s],[r]) = " + b.floor_binomial.get_str()));
  const bool delta_ok = b.delta >= 1 && BigRational(b.delta) <= s;
  rep.add(plain_item("delta-range", delta_ok, b.delta.get_str(), "1 <= delta <= s"));
  return rep.finalize();
}

std::string render(const std::vector<CheckReport>& reports, bool as_array, const std::string& format) {
  if (format == "csv") {
    std::string text = csv_header();
    for (const auto& r : reports) text += to_csv_rows(r);
    return text;
  }
  if (!as_array) return serialize(reports.front()) + "\n";
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr.dump(2) + "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Certified checks for primes between 4n and 5n", "primecert"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--precision", o.precision, "Maximum working precision in bits (default: $IPV_PRECISION or 512)")
      ->check(CLI::Range(kMinPrecision, kMaxPrecision));
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", o.out_path, "Write the report to this file");
  app.add_option("--jobs", o.jobs, "Worker threads for sweeps")->check(CLI::Range(1u, 1024u));

  auto* verify = app.add_subcommand("verify", "Run lemma and theorem checks");
  verify->require_subcommand(1);
  auto* all = verify->add_subcommand("all", "Full certification suite");
  auto* lemma = verify->add_subcommand("lemma", "Check one lemma");
  lemma->add_option("id", o.lemma_id, "2.3, 3.1 or 3.2")->required();
  lemma->add_option("--part", o.part)->check(CLI::Range(1, 4));
  lemma->add_option("--n", o.n);
  auto* theorem = verify->add_subcommand("theorem", "Check one theorem");
  theorem->add_option("id", o.theorem_id, "3.3, 4.1, 4.2, 4.3, 4.4 or 4.5")->required();
  auto* tn = theorem->add_option("--n", o.n);
  auto* tf = theorem->add_option("--from", o.from);
  auto* tt = theorem->add_option("--to", o.to);
  tn->excludes(tf)->excludes(tt);

  auto* dec = app.add_subcommand("decompose", "Valuation decomposition of C(5n,4n)");
  dec->add_option("--n", o.n)->required();
  auto* br = app.add_subcommand("bracket", "Evaluate the bracket {s brace r}");
  br->add_option("--s", o.s)->required();
  br->add_option("--r", o.r)->required();
  auto* cb = app.add_subcommand("count-bound", "Lower bound for the number of primes in (4n, 5n)");
  cb->add_option("--n", o.n)->required();
  auto* scan = app.add_subcommand("scan", "Look for a prime in (kn, (k+1)n)");
  scan->add_option("--k", o.k)->required();
  scan->add_option("--from", o.from)->required();
  scan->add_option("--to", o.to)->required();

  if (const char* env = std::getenv("IPV_PRECISION")) {
    const std::string_view text(env);
    long value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size() || value < kMinPrecision || value > kMaxPrecision) {
      err << "error: IPV_PRECISION must be an integer in [" << kMinPrecision << ", " << kMaxPrecision << "], got '"
          << text << "'\n";
      return kUsage;
    }
    o.precision = value;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  std::vector<CheckReport> reports;
  bool as_array = false;
  try {
    if (*all) {
      reports = verify_all(o);
      as_array = true;
    } else if (*lemma) {
      reports = lemma_reports(o);
      as_array = reports.size() > 1;
    } else if (*theorem) {
      reports = theorem_reports(o);
    } else if (*dec) {
      reports = {decompose_report(*o.n, o)};
    } else if (*br) {
      reports = {bracket_report(o)};
    } else if (*cb) {
      reports = {count_report(*o.n, o)};
    } else if (*scan) {
      reports = {scan_general(o.k, *o.from, *o.to, o.jobs)};
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const std::string text = render(reports, as_array, o.format);
  if (o.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!(file << text)) {
      err << "error: cannot write " << o.out_path << "\n";
      return kUsage;
    }
  }
  return exit_code(reports);
}

int exit_code(const std::vector<CheckReport>& reports) {
  bool undecided = false;
  for (const auto& r : reports) {
    if (r.status == ReportStatus::fail) return kFail;
    undecided = undecided || r.status == ReportStatus::undecided;
  }
  return undecided ? kUndecided : kPass;
}

}  // namespace primecert::cli
