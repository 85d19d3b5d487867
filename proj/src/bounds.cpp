#include "primecert/bounds.hpp"

#include <algorithm>

#include "primecert/binom.hpp"
#include "primecert/errors.hpp"

namespace primecert {

namespace {

BigRational frac(std::int64_t num, std::int64_t den) { return BigRational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))); }

BigRational nat(std::uint64_t n) { return BigRational(BigInt(static_cast<unsigned long>(n))); }

Expr sqrt_two_pi() { return sqrt(Expr(2) * Expr::pi()); }

Expr stirling_envelope(const BigRational& x, const BigRational& correction) {
  return sqrt_two_pi() * pow(Expr(x), x + frac(1, 2)) * exp(Expr(-x + correction));
}

}  // namespace

Expr stirling_lower(const BigRational& x) {
  if (x.sign() <= 0) throw UsageError("Stirling envelope needs x > 0");
  return stirling_envelope(x, BigRational(1) / (BigRational(12) * x + BigRational(1)));
}

Expr stirling_upper(const BigRational& x) {
  if (x.sign() <= 0) throw UsageError("Stirling envelope needs x > 0");
  return stirling_envelope(x, BigRational(1) / (BigRational(12) * x));
}

StirlingBounds stirling_exprs(const BigRational& x) { return {x, stirling_lower(x), stirling_upper(x)}; }

std::pair<Enclosure, Enclosure> stirling(const BigRational& x, long precision) {
  if (x < BigRational(1)) throw UsageError("stirling needs x >= 1, got " + x.str());
  return {eval(stirling_lower(x), precision), eval(stirling_upper(x), precision)};
}

CheckReport LemmaCheck::to_report() const {
  CheckReport r;
  r.check_id = id;
  r.params["n"] = std::to_string(n);
  r.params["in_range"] = in_range ? "true" : "false";
  r.params["precision"] = std::to_string(std::max(stated.precision_used, equivalent.precision_used));
  r.add("stated", stated);
  r.add("equivalent", equivalent);
  ReportItem agree;
  agree.instance = "forms-agree";
  agree.verdict = forms_agree() ? Verdict::pass : Verdict::fail;
  agree.witness = std::string(to_string(stated.status)) + "/" + std::string(to_string(equivalent.status));
  r.add(agree);
  r.notes = notes;
  // extras are supporting facts and reported, but do not decide the status
  for (const auto& [name, cert] : extras) {
    r.notes.push_back(name + ": " + std::string(to_string(cert.status)) + " (" + cert.claim + ", margin " +
                      cert.margin.str(8) + ")");
  }
  if (!in_range) r.notes.push_back("n = " + std::to_string(n) + " is outside the range the inequality is claimed for");
  return r.finalize();
}

std::uint64_t lemma31_threshold(int part) {
  switch (part) {
    case 1: return 6818;
    case 2: return 1;
    case 3: return 1;
    case 4: return 6815;
  }
  throw UsageError("lemma 3.1 has parts 1..4, got " + std::to_string(part));
}

BigRational lemma31_part1_rational(std::uint64_t n) {
  const BigRational N = nat(n);
  return (BigRational(252) * N + BigRational(5)) / (BigRational(2880) * N * N + BigRational(48) * N);
}

LemmaCheck lemma31_check(int part, std::uint64_t n, long precision) {
  const std::uint64_t threshold = lemma31_threshold(part);
  if (n < 1) throw UsageError("lemma 3.1 needs n >= 1");
  LemmaCheck check;
  check.id = "lemma-3.1." + std::to_string(part);
  check.n = n;
  check.in_range = n >= threshold;
  const BigRational N = nat(n);
  const BigRational one(1);

  switch (part) {
    case 1: {
      const BigRational exponent = one / (BigRational(60) * N + one) - one / (BigRational(48) * N) -
                                   one / (BigRational(12) * N);
      const BigRational rational = lemma31_part1_rational(n);
      check.stated = certify(exp(Expr(exponent)), Relation::greater_equal, Expr::literal("0.999986"), precision);
      check.equivalent =
          certify(Expr(rational), Relation::less_equal, -log(Expr::literal("0.999986")), precision);

      Certificate identity;
      identity.claim = "1/(60n+1) - 1/(48n) - 1/(12n) = -(252n+5)/(2880n^2+48n)";
      identity.margin = Enclosure(exponent + rational);
      identity.status = exponent == -rational ? CertStatus::proved : CertStatus::refuted;
      check.extras.emplace_back("exponent-identity", identity);
      check.extras.emplace_back("rational < 14/10^6",
                                certify(Expr(rational), Relation::less, Expr(frac(14, 1000000)), precision));
      check.extras.emplace_back("rational < 13/10^6",
                                certify(Expr(rational), Relation::less, Expr(frac(13, 1000000)), precision));
      check.extras.emplace_back(
          "14/10^6 < -log(0.999986)",
          certify(Expr(frac(14, 1000000)), Relation::less, -log(Expr::literal("0.999986")), precision));
      check.notes.push_back("(252n+5)/(2880n^2+48n) = " + rational.str());
      break;
    }
    case 2:
    case 3: {
      // part 2: 1/(30n) - 1/(24n+1) - 1/(6n+1) <= 0  <=>  1 <= 756n^2 + 30n
      // part 3: 1/(20n) - 1/(16n+1) - 1/(4n+1) <= 0  <=>  1 <= 336n^2 + 20n
      const long a = part == 2 ? 30 : 20, b = part == 2 ? 24 : 16, c = part == 2 ? 6 : 4;
      const long q2 = part == 2 ? 756 : 336, q1 = part == 2 ? 30 : 20;
      const BigRational exponent = one / (BigRational(a) * N) - one / (BigRational(b) * N + one) -
                                   one / (BigRational(c) * N + one);
      check.stated = certify(exp(Expr(exponent)), Relation::less_equal, Expr(1), precision);
      check.equivalent =
          certify(Expr(1), Relation::less_equal, Expr(BigRational(q2) * N * N + BigRational(q1) * N), precision);
      break;
    }
    case 4: {
      const Expr bound = Expr::literal("4.002202");
      if (n > 3) {
        check.stated = certify(Expr(BigRational(4) * N + BigRational(3)) / Expr(N - BigRational(3)),
                               Relation::less, bound, precision);
      } else {
        check.stated.claim = "(4n+3)/(n-3) < 4.002202";
        check.stated.status = CertStatus::undecided;
        check.stated.margin = Enclosure(BigRational(0));
        check.stated.notes.push_back("(4n+3)/(n-3) is not a positive quantity for n <= 3");
      }
      check.equivalent = certify(Expr(0), Relation::less,
                                 Expr(BigRational::parse("0.002202") * N - BigRational::parse("15.006606")),
                                 precision);
      break;
    }
    default:
      throw UsageError("lemma 3.1 has parts 1..4, got " + std::to_string(part));
  }
  return check;
}

Expr lemma32_lhs(std::uint64_t n) {
  const BigRational N = nat(n);
  return Expr::literal("0.054886") / (pow(Expr(2), N / BigRational(2)) * pow(Expr(N), frac(3, 2))) *
         pow(Expr(frac(3125, 256)), N / BigRational(6));
}

Expr lemma32_rhs(std::uint64_t n) { return t1_bound_expr(n); }

Expr lemma32_normalised_lhs() {
  return Expr(frac(1, 6)) * (Expr(5) * log(Expr(5)) - Expr(11) * log(Expr(2)));
}

Expr lemma32_normalised_rhs(std::uint64_t n) {
  const Expr N(nat(n));
  return Expr::literal("2.51012") * sqrt(Expr(5)) / sqrt(N) + Expr(frac(3, 2)) * (log(N) / N) -
         log(Expr::literal("0.054886")) / N;
}

LemmaCheck lemma32_check(std::uint64_t n, long precision) {
  if (n < 1) throw UsageError("lemma 3.2 needs n >= 1");
  LemmaCheck check;
  check.id = "lemma-3.2";
  check.n = n;
  check.in_range = n >= 6818;
  check.stated = certify(lemma32_lhs(n), Relation::greater, lemma32_rhs(n), precision);
  check.equivalent = certify(lemma32_normalised_lhs(), Relation::greater, lemma32_normalised_rhs(n), precision);

  Certificate lhs_vs_constant =
      certify(lemma32_normalised_lhs(), Relation::greater, Expr::literal("0.0742"), precision);
  Certificate constant_vs_rhs =
      certify(Expr::literal("0.0742"), Relation::greater, lemma32_normalised_rhs(n), precision);
  if (!lhs_vs_constant.proved()) {
    const Enclosure lhs = eval(lemma32_normalised_lhs(), 64);
    check.notes.push_back("intermediate constant 0.0742 does not separate the sides: (1/6)[5 log 5 - 11 log 2] = " +
                          lhs.mid().to_decimal(8) + " is below 0.0742 (" +
                          std::string(to_string(lhs_vs_constant.status)) +
                          "); the end-to-end inequality is certified directly instead");
  }
  check.extras.emplace_back("lhs > 0.0742", lhs_vs_constant);
  check.extras.emplace_back("0.0742 > rhs", constant_vs_rhs);
  return check;
}

Certificate pi_upper_check(const PrimeTable& table, std::uint64_t x, long precision) {
  if (x < 2) throw UsageError("pi_upper_check needs x >= 2");
  const Expr X(nat(x));
  Certificate c = certify(Expr(nat(table.prime_count(x))), Relation::less_equal,
                          Expr::literal("1.25506") * X / log(X), precision);
  c.claim = "pi(" + std::to_string(x) + ") <= 1.25506 x/log x";
  return c;
}

Certificate pi_upper_check(std::uint64_t x, long precision) {
  if (x < 2) throw UsageError("pi_upper_check needs x >= 2");
  return pi_upper_check(PrimeTable(x), x, precision);
}

Expr t1_bound_expr(std::uint64_t n) {
  const Expr five_n(nat(5 * n));
  return pow(five_n, Expr::literal("2.51012") * sqrt(five_n) / log(five_n));
}

T1Chain t1_bound(std::uint64_t n, const PrimeTable& table, long precision) {
  if (n < 2) throw UsageError("t1_bound needs n >= 2");
  T1Chain chain;
  chain.n = n;
  chain.bound = eval(t1_bound_expr(n), precision);
  chain.t1 = decompose(n, table).t1_product();
  chain.pi_sqrt = table.prime_count(isqrt_u64(5 * n));
  const Expr power = pow(Expr(nat(5 * n)), nat(chain.pi_sqrt));
  chain.exact_link = certify(Expr(BigRational(chain.t1)), Relation::less, power, precision);
  chain.exact_link.claim = "T1 < (5n)^pi(sqrt(5n)) at n = " + std::to_string(n);
  chain.analytic_link = certify(power, Relation::less_equal, t1_bound_expr(n), precision);
  chain.analytic_link.claim = "(5n)^pi(sqrt(5n)) <= (5n)^(2.51012 sqrt(5n)/log(5n)) at n = " + std::to_string(n);
  return chain;
}

T1Chain t1_bound(std::uint64_t n, long precision) {
  if (n < 2) throw UsageError("t1_bound needs n >= 2");
  return t1_bound(n, PrimeTable(5 * n), precision);
}

std::vector<BigRational> uniform_grid(const BigRational& a, const BigRational& b, long per_unit) {
  if (b < a || per_unit < 1) throw UsageError("uniform_grid needs a <= b and per_unit >= 1");
  const BigRational step = BigRational(1) / BigRational(per_unit);
  std::vector<BigRational> out;
  for (BigRational x = a; x <= b; x += step) out.push_back(x);
  if (out.back() != b) out.push_back(b);
  return out;
}

CheckReport lemma23_grid_check(int part, const BigRational& c, std::vector<BigRational> grid, long precision) {
  if (part != 1 && part != 2) throw UsageError("lemma 2.3 has parts 1 and 2");
  if (grid.size() < 2) throw UsageError("lemma 2.3 grid needs at least two points");
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  const BigRational half(1, 2);

  CheckReport r;
  r.check_id = "lemma-2.3." + std::to_string(part);
  r.params["c"] = c.str();
  r.params["grid_points"] = std::to_string(grid.size());
  r.params["precision"] = std::to_string(precision);

  if (part == 1) {
    if (c < BigRational(1, 12)) throw UsageError("lemma 2.3(1) needs c >= 1/12");
    if (grid.front() < half) throw UsageError("lemma 2.3(1) grid must satisfy x >= 1/2");
    auto g = [&](const BigRational& x) { return stirling_upper(x + c) / (stirling_lower(c) * stirling_lower(x)); };
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
      r.add("g(" + grid[i].str() + ") <= g(" + grid[i + 1].str() + ")",
            certify(g(grid[i]), Relation::less_equal, g(grid[i + 1]), precision));
    return r.finalize();
  }

  if (c.sign() <= 0) throw UsageError("lemma 2.3(2) needs c > 0");
  if (grid.front() < half || grid.back() > c - half)
    throw UsageError("lemma 2.3(2) grid must lie in [1/2, c - 1/2]");
  auto h = [&](const BigRational& x) {
    const BigRational y = c - x;
    // product in a fixed argument order so h(x) and h(c-x) are the same tree
    return stirling_upper(c) / (stirling_lower(std::min(x, y)) * stirling_lower(std::max(x, y)));
  };
  const BigRational peak = c / BigRational(2);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const BigRational &a = grid[i], &b = grid[i + 1];
    const std::string pair = "h(" + a.str() + "), h(" + b.str() + ")";
    if (b <= peak) {
      r.add("increasing " + pair, certify(h(a), Relation::less, h(b), precision));
    } else if (a >= peak) {
      r.add("decreasing " + pair, certify(h(a), Relation::greater, h(b), precision));
    } else {
      r.add("peak bounds h(" + a.str() + ")", certify(h(a), Relation::less_equal, h(peak), precision));
      r.add("peak bounds h(" + b.str() + ")", certify(h(b), Relation::less_equal, h(peak), precision));
    }
  }
  for (const auto& x : grid) {
    const BigRational y = c - x;
    if (y < half || y > c - half || y < x) continue;
    ReportItem item;
    item.instance = "symmetry h(" + x.str() + ") = h(" + y.str() + ")";
    const Enclosure hx = eval(h(x), precision);
    const Enclosure hy = eval(h(y), precision);
    item.verdict = hx == hy ? Verdict::pass : Verdict::fail;
    item.margin = interval::sub(hx, hy, precision + 32);
    r.add(item);
  }
  return r.finalize();
}

std::vector<std::pair<std::string, Certificate>> chain_constants_check(long precision) {
  const Expr pi = Expr::pi();
  std::vector<std::pair<std::string, Certificate>> out;
  out.emplace_back("binomial-constant",
                   certify(Expr::literal("0.446024"), Relation::less_equal,
                           sqrt(Expr(5) / (Expr(8) * pi)) * Expr::literal("0.999986"), precision));
  out.emplace_back("a-constant", certify(Expr::literal("1.576958"), Relation::greater_equal,
                                         Expr(frac(5, 4)) * sqrt(Expr(5) / pi), precision));
  out.emplace_back("b-constant",
                   certify(Expr::literal("5.153158"), Relation::greater_equal,
                           sqrt(Expr(125) / (Expr(24) * pi)) * Expr::literal("4.002202"), precision));
  out.emplace_back("final-constant",
                   certify(Expr::literal("0.054886"), Relation::less_equal,
                           Expr::literal("0.446024") / (Expr::literal("1.576958") * Expr::literal("5.153158")),
                           precision));
  return out;
}

}  // namespace primecert
