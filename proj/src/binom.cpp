#include "primecert/binom.hpp"

#include <algorithm>
#include <stdexcept>

#include "primecert/errors.hpp"

namespace primecert {

namespace {

unsigned legendre(std::uint64_t p, std::uint64_t top, std::uint64_t bottom) {
  const std::uint64_t rest = top - bottom;
  unsigned beta = 0;
  for (std::uint64_t q = p;; q *= p) {
    beta += static_cast<unsigned>(top / q - bottom / q - rest / q);
    if (q > top / p) break;
  }
  return beta;
}

BigInt range_product(std::uint64_t from, std::uint64_t to) {
  if (from > to) return 1;
  if (to - from < 16) {
    BigInt r = 1;
    for (std::uint64_t k = from; k <= to; ++k) r *= static_cast<unsigned long>(k);
    return r;
  }
  std::uint64_t mid = from + (to - from) / 2;
  return range_product(from, mid) * range_product(mid + 1, to);
}

std::uint64_t to_u64(const BigInt& v) {
  if (v < 0 || !v.fits_ulong_p()) throw UsageError("value out of 64-bit range: " + v.get_str());
  return v.get_ui();
}

}  // namespace

unsigned valuation(std::uint64_t p, std::uint64_t top, std::uint64_t bottom) {
  if (!is_prime_trial(p)) throw UsageError("valuation needs a prime, got " + std::to_string(p));
  if (bottom > top) throw UsageError("valuation needs bottom <= top");
  return legendre(p, top, bottom);
}

unsigned valuation_kummer(std::uint64_t p, std::uint64_t top, std::uint64_t bottom) {
  if (!is_prime_trial(p)) throw UsageError("valuation needs a prime, got " + std::to_string(p));
  if (bottom > top) throw UsageError("valuation needs bottom <= top");
  std::uint64_t a = bottom, b = top - bottom, carry = 0;
  unsigned carries = 0;
  while (a > 0 || b > 0 || carry > 0) {
    std::uint64_t digit = a % p + b % p + carry;
    carry = digit >= p ? 1 : 0;
    carries += static_cast<unsigned>(carry);
    a /= p;
    b /= p;
  }
  return carries;
}

std::uint64_t factorial_valuation(std::uint64_t p, std::uint64_t m) {
  std::uint64_t v = 0;
  while (m > 0) {
    m /= p;
    v += m;
  }
  return v;
}

unsigned ValuationMap::exponent(std::uint64_t p) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), p,
                             [](const auto& e, std::uint64_t q) { return e.first < q; });
  return it != entries.end() && it->first == p ? it->second : 0;
}

BigInt ValuationMap::product() const {
  BigInt r = 1;
  for (const auto& [p, e] : entries) {
    BigInt pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), p, e);
    r *= pe;
  }
  return r;
}

unsigned ValuationMap::max_exponent() const {
  unsigned m = 0;
  for (const auto& [p, e] : entries) m = std::max(m, e);
  return m;
}

BigInt Decomposition::t3_product() const {
  BigInt r = 1;
  for (auto p : t3) r *= static_cast<unsigned long>(p);
  return r;
}

bool in_t1(std::uint64_t p, std::uint64_t n) { return p * p <= 5 * n; }

Decomposition decompose(std::uint64_t n, const PrimeTable& table) {
  if (n < 1) throw UsageError("decompose needs n >= 1");
  const std::uint64_t top = 5 * n, bottom = 4 * n;
  Decomposition d;
  d.n = n;
  d.t1.n = d.t2.n = n;
  table.for_each_prime(2, top, [&](std::uint64_t p) {
    if (p > bottom) {
      d.t3.push_back(p);
      return;
    }
    unsigned beta = legendre(p, top, bottom);
    if (beta == 0) return;
    (in_t1(p, n) ? d.t1 : d.t2).entries.emplace_back(p, beta);
  });
  return d;
}

Decomposition decompose(std::uint64_t n) {
  if (n < 1) throw UsageError("decompose needs n >= 1");
  return decompose(n, PrimeTable(5 * n));
}

BigInt binomial(std::uint64_t top, std::uint64_t bottom) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), top, bottom);
  return r;
}

BracketValue bracket(const BigRational& s, const BigRational& r) {
  if (!(r >= BigRational(1)) || !(s > r))
    throw UsageError("bracket needs s > r >= 1, got s = " + s.str() + ", r = " + r.str());
  BracketValue b;
  b.s = s;
  b.r = r;
  b.numerator_from = (s - r).floor() + 1;
  b.numerator_to = s.floor();
  const std::uint64_t from = to_u64(b.numerator_from);
  const std::uint64_t to = to_u64(b.numerator_to);
  const std::uint64_t rf = to_u64(r.floor());

  BigInt den;
  mpz_fac_ui(den.get_mpz_t(), rf);
  b.value = BigRational(range_product(from, to), den);
  b.floor_binomial = binomial(to, rf);
  b.delta = s.frac() >= r.frac() ? BigInt(1) : BigInt((s - r).floor() + 1);
  if (b.value != BigRational(BigInt(b.delta * b.floor_binomial)))
    throw std::logic_error("bracket decomposition failed for s = " + s.str() + ", r = " + r.str());
  return b;
}

BracketValue bracket_a(std::uint64_t n) {
  return bracket(BigRational(BigInt(5 * n), BigInt(2)), BigRational(2 * n));
}

BracketValue bracket_b(std::uint64_t n) {
  return bracket(BigRational(BigInt(5 * n), BigInt(3)), BigRational(BigInt(4 * n), BigInt(3)));
}

std::uint64_t bracket_valuation(std::uint64_t p, const BracketValue& b) {
  const std::uint64_t from = to_u64(b.numerator_from);
  const std::uint64_t to = to_u64(b.numerator_to);
  const std::uint64_t rf = to_u64(b.r.floor());
  return factorial_valuation(p, to) - factorial_valuation(p, from - 1) - factorial_valuation(p, rf);
}

std::string_view to_string(CaseClaim c) {
  switch (c) {
    case CaseClaim::beta_zero: return "beta=0";
    case CaseClaim::divides_a: return "divides A";
    case CaseClaim::divides_b: return "divides B";
    case CaseClaim::primorial_tail: return "product <= 4^(n/4)";
  }
  return "?";
}

namespace {

std::string frac_label(std::uint64_t num, std::uint64_t den) {
  std::string s = (num == 1 ? std::string() : std::to_string(num)) + "n";
  return den == 1 ? s : s + "/" + std::to_string(den);
}

}  // namespace

std::string CaseInterval::label() const {
  if (claim == CaseClaim::primorial_tail) return "(sqrt(5n), n/4]";
  return "(" + frac_label(lo_num, lo_den) + ", " + frac_label(hi_num, hi_den) + "]";
}

bool CaseInterval::contains(std::uint64_t p, std::uint64_t n) const {
  if (claim == CaseClaim::primorial_tail) return p * p > 5 * n && 4 * p <= n;
  return p * lo_den > lo_num * n && p * hi_den <= hi_num * n;
}

const std::vector<CaseInterval>& case_intervals() {
  using C = CaseClaim;
  static const std::vector<CaseInterval> cases = {
      {1, 4, 5, 18, C::divides_a},  {5, 18, 2, 7, C::beta_zero},  {2, 7, 5, 16, C::divides_a},
      {5, 16, 1, 3, C::beta_zero},  {1, 3, 5, 12, C::divides_b},  {5, 12, 4, 9, C::beta_zero},
      {4, 9, 5, 11, C::divides_b},  {5, 11, 1, 2, C::beta_zero},  {1, 2, 5, 8, C::divides_a},
      {5, 8, 2, 3, C::beta_zero},   {2, 3, 5, 6, C::divides_b},   {5, 6, 1, 1, C::beta_zero},
      {1, 1, 5, 4, C::divides_a},   {5, 4, 4, 3, C::beta_zero},   {4, 3, 5, 3, C::divides_b},
      {5, 3, 2, 1, C::beta_zero},   {2, 1, 5, 2, C::divides_a},   {5, 2, 4, 1, C::beta_zero},
      {0, 1, 1, 4, C::primorial_tail},
  };
  return cases;
}

bool CaseReport::passed() const {
  if (!t2_exponent_violations.empty()) return false;
  return std::all_of(cases.begin(), cases.end(), [](const CaseOutcome& c) { return c.violations.empty(); });
}

std::size_t CaseReport::vacuous_cases() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const CaseOutcome& c) { return c.primes_checked == 0; }));
}

CaseReport case_check(std::uint64_t n, const PrimeTable& table) {
  if (n < 3) throw UsageError("case_check needs n >= 3");
  const BracketValue a = bracket_a(n);
  const BracketValue b = bracket_b(n);
  const std::uint64_t top = 5 * n, bottom = 4 * n;

  CaseReport report;
  report.n = n;
  for (const auto& ci : case_intervals()) report.cases.push_back({ci, 0, {}});

  BigInt tail_product = 1;
  table.for_each_prime(2, bottom, [&](std::uint64_t p) {
    if (in_t1(p, n)) return;
    const unsigned beta = legendre(p, top, bottom);
    if (beta >= 2) report.t2_exponent_violations.push_back(p);

    auto it = std::find_if(report.cases.begin(), report.cases.end(),
                           [&](const CaseOutcome& c) { return c.interval.contains(p, n); });
    if (it == report.cases.end()) throw std::logic_error("prime " + std::to_string(p) + " in no case interval");
    ++it->primes_checked;
    const std::string ps = "p=" + std::to_string(p);
    switch (it->interval.claim) {
      case CaseClaim::beta_zero:
        if (beta != 0) it->violations.push_back(ps + ": beta=" + std::to_string(beta));
        break;
      case CaseClaim::divides_a:
      case CaseClaim::divides_b: {
        const bool is_a = it->interval.claim == CaseClaim::divides_a;
        const BracketValue& br = is_a ? a : b;
        const std::uint64_t v = bracket_valuation(p, br);
        const bool in_numerator = br.numerator_to / p * p >= br.numerator_from;
        if (!in_numerator || v == 0 || v < beta)
          it->violations.push_back(ps + ": v_p(" + (is_a ? "A" : "B") + ")=" + std::to_string(v) +
                                   ", beta=" + std::to_string(beta));
        break;
      }
      case CaseClaim::primorial_tail: {
        BigInt pe;
        mpz_ui_pow_ui(pe.get_mpz_t(), p, beta);
        tail_product *= pe;
        break;
      }
    }
  });

  // prod <= 4^(n/4)  <=>  prod^2 <= 2^n
  BigInt bound = BigInt(1) << static_cast<mp_bitcnt_t>(n);
  if (tail_product * tail_product > bound) {
    auto& tail = report.cases.back();
    tail.violations.push_back("tail product " + tail_product.get_str() + " exceeds 4^(n/4)");
  }
  return report;
}

CaseReport case_check(std::uint64_t n) {
  if (n < 3) throw UsageError("case_check needs n >= 3");
  return case_check(n, PrimeTable(5 * n));
}

Certificate t2_bound_check(std::uint64_t n, const PrimeTable& table, long precision) {
  if (n < 3) throw UsageError("t2_bound_check needs n >= 3");
  const BigInt t2 = decompose(n, table).t2_product();
  const BracketValue a = bracket_a(n);
  const BracketValue b = bracket_b(n);
  const Expr rhs = pow(Expr(2), BigRational(BigInt(n), BigInt(2))) * Expr(a.value) * Expr(b.value);
  Certificate c = certify(Expr(BigRational(t2)), Relation::less, rhs, precision);
  c.claim = "T2 < 2^(n/2) A B at n = " + std::to_string(n);
  return c;
}

Certificate t2_bound_check(std::uint64_t n, long precision) {
  if (n < 3) throw UsageError("t2_bound_check needs n >= 3");
  return t2_bound_check(n, PrimeTable(5 * n), precision);
}

}  // namespace primecert
