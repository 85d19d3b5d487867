#include <doctest.h>

#include "oracles.hpp"
#include "primecert/errors.hpp"
#include "primecert/theorems.hpp"

using namespace primecert;

namespace {

BigRational rat(long a, long b) { return BigRational(BigInt(a), BigInt(b)); }

// primes in (lo, hi) by trial division
std::vector<std::uint64_t> oracle_primes(const BigRational& lo, const BigRational& hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = lo.floor().get_ui() + 1; BigRational(m) < hi; ++m)
    if (BigRational(m) > lo && oracle::is_prime(m)) out.push_back(m);
  return out;
}

void check_witness(const IntervalWitness& w) {
  const auto ref = oracle_primes(w.lo, w.hi);
  CHECK(w.count == ref.size());
  CHECK(w.primes_found.size() <= ref.size());
  for (std::size_t i = 0; i < w.primes_found.size(); ++i) CHECK(w.primes_found[i] == ref[i]);
  CHECK(w.passed() == (ref.size() >= w.required));
}

}  // namespace

TEST_CASE("base case examples") {
  const PrimeTable t(1000);
  const auto ws = base_case_witnesses(3, 4, t);
  REQUIRE(ws.size() == 2);
  CHECK(ws[0].primes_found == std::vector<std::uint64_t>{13});
  CHECK(ws[0].interval_str() == "(12, 15)");
  CHECK(ws[1].primes_found == std::vector<std::uint64_t>{17, 19});

  const CheckReport r = verify_base_cases(3, 200);
  CHECK(r.passed());
  CHECK(r.items.size() == 198);
  CHECK(r.check_id == "theorem-3.3-base");
  CHECK_THROWS_AS(verify_base_cases(2, 10), UsageError);
  CHECK_THROWS_AS(verify_base_cases(10, 9), UsageError);
}

TEST_CASE("every witness prime passes trial division") {
  const PrimeTable t(5 * 3000 + 20);
  for (std::uint64_t n = 3; n <= 3000; n += 7) {
    for (const auto& w : base_case_witnesses(n, n, t)) check_witness(w);
    check_witness(theorem41_check(n, t));
    const PlacementWitness w42 = theorem42_check(n, t);
    check_witness(w42.overall);
    for (const auto& p : w42.placements) check_witness(p);
    if (n >= 6) {
      const PlacementWitness w43 = theorem43_check(n, t);
      check_witness(w43.overall);
      for (const auto& p : w43.placements) check_witness(p);
    }
  }
}

TEST_CASE("tail certificate") {
  const CheckReport at = verify_tail_certificate(6818);
  CHECK(at.passed());
  for (const auto& item : at.items) {
    INFO(item.instance);
    CHECK((item.verdict == Verdict::proved || item.verdict == Verdict::pass));
  }

  const CheckReport big = verify_tail_certificate(100000);
  CHECK(big.passed());

  const CheckReport below = verify_tail_certificate(6817);
  CHECK_FALSE(below.passed());
  REQUIRE_FALSE(below.items.empty());
  CHECK(below.items.front().instance == "precondition");
  CHECK(below.items.front().verdict == Verdict::fail);
}

TEST_CASE("theorem 4.1 examples and nesting") {
  const PrimeTable t(1000);
  const IntervalWitness w3 = theorem41_check(3, t);
  CHECK(w3.hi == rat(15, 2));
  CHECK(w3.primes_found == std::vector<std::uint64_t>{5, 7});
  const IntervalWitness w4 = theorem41_check(4, t);
  CHECK(w4.hi == rat(35, 4));
  CHECK(w4.primes_found.front() == 5);
  CHECK_THROWS_AS(theorem41_check(2, t), UsageError);

  // (n+r, 5(n+r)/4) lies in (n, 5(n+3)/4) whenever 4 | n+r
  for (long n = 4; n <= 2000; ++n) {
    for (long r = 0; r <= 3; ++r) {
      if ((n + r) % 4 != 0) continue;
      CHECK(BigRational(n) <= BigRational(n + r));
      CHECK(rat(5 * (n + r), 4) <= rat(5 * (n + 3), 4));
    }
  }
}

TEST_CASE("theorem 4.2 examples and chain ordering") {
  const PrimeTable t(1000);
  const PlacementWitness w3 = theorem42_check(3, t);
  CHECK(w3.overall.primes_found == std::vector<std::uint64_t>{5, 7, 11, 13});
  CHECK(w3.placements.empty());
  CHECK(w3.passed());

  const PlacementWitness w14 = theorem42_check(14, t);
  CHECK(w14.overall.count >= 4);
  CHECK(w14.placements.empty());

  const PlacementWitness w15 = theorem42_check(15, t);
  REQUIRE(w15.placements.size() == 4);
  for (const auto& p : w15.placements) CHECK(p.passed());
  CHECK(w15.placements[1].lo == BigRational(30));
  CHECK(w15.placements[1].hi == rat(165, 4));

  for (long n = 15; n <= 5000; ++n) {
    CHECK(rat(5 * n + 15, 4) < BigRational(2 * n));
    CHECK(rat(10 * n + 15, 4) < BigRational(3 * n));
    CHECK(rat(15 * n + 15, 4) <= BigRational(4 * n));
  }
  CHECK_FALSE(rat(15 * 14 + 15, 4) <= BigRational(4 * 14));
}

TEST_CASE("f iteration") {
  CHECK(f_iterate(245, 1).value == BigRational(310));
  CHECK(f_iterate(17, 0).value == BigRational(17));
  for (std::uint64_t n : {6ULL, 245ULL, 1000ULL}) {
    BigRational x(n);
    for (std::uint64_t m = 0; m <= 12; ++m) {
      const IterationState s = f_iterate(n, m);
      CHECK(s.value == x);
      CHECK(f_closed_form(BigRational(n), m) == x);
      x = (BigRational(5) * x + BigRational(15)) / BigRational(4);
    }
  }
  CHECK(f_iterate(245, 7).value <= BigRational(5 * 245));
  CHECK(f_iterate(244, 7).value > BigRational(5 * 244));
}

TEST_CASE("theorem 4.3 examples and constants") {
  const PrimeTable t(2000);
  const PlacementWitness w6 = theorem43_check(6, t);
  CHECK(w6.overall.primes_found == std::vector<std::uint64_t>{7, 11, 13, 17, 19, 23, 29});
  CHECK_FALSE(w6.closure_ok.has_value());

  const PlacementWitness w245 = theorem43_check(245, t);
  REQUIRE(w245.closure_ok.has_value());
  CHECK(*w245.closure_ok);
  CHECK(w245.placements.size() == 7);
  CHECK(w245.passed());
  CHECK_THROWS_AS(theorem43_check(5, t), UsageError);

  CHECK(theorem43_threshold(7) == rat(926115, 3795));
  CHECK(theorem43_threshold(7) < BigRational(245));
  CHECK(theorem43_denominator(7) == 3795);
  for (std::uint64_t m = 1; m <= 7; ++m) CHECK(theorem43_denominator(m) > 0);
  CHECK(theorem43_denominator(8) < 0);
  CHECK_THROWS_AS(theorem43_threshold(8), DomainError);

  // sum_{k<7} 5^(7-k) 4^k = 308705
  BigInt sum = 0;
  for (unsigned k = 0; k < 7; ++k) {
    BigInt a, b;
    mpz_ui_pow_ui(a.get_mpz_t(), 5, 7 - k);
    mpz_ui_pow_ui(b.get_mpz_t(), 4, k);
    sum += a * b;
  }
  CHECK(sum == 308705);
  CHECK(BigRational(3 * sum, BigInt(3795)) == theorem43_threshold(7));
  CHECK(theorem43_constants().passed());
}

TEST_CASE("sweeps over a modest range") {
  CHECK(sweep_theorem41(3, 3000).passed());
  CHECK(sweep_theorem42(3, 3000).passed());
  CHECK(sweep_theorem43(6, 3000).passed());
  CHECK_THROWS_AS(sweep_theorem43(5, 10), UsageError);
}

TEST_CASE("sweep reports do not depend on the worker count") {
  auto strip = [](CheckReport r) {
    r.timing_ms = 0;
    return r;
  };
  CHECK(strip(sweep_theorem42(3, 2500, 1)) == strip(sweep_theorem42(3, 2500, 3)));
  CHECK(strip(verify_base_cases(3, 2500, 1)) == strip(verify_base_cases(3, 2500, 4)));
  CHECK(strip(scan_general(5, 5, 2000, 1)) == strip(scan_general(5, 5, 2000, 2)));
}

TEST_CASE("count bound at 10^5") {
  const PrimeTable t(500000);
  const CountBound b = count_lower_bound(100000, 512, &t);
  // the simplified form sits near 8686 * 0.026338 - 1.68
  CHECK(b.simplified.lo() > BigRational(226));
  CHECK(b.simplified.hi() < BigRational(229));
  CHECK(b.simplified_below_formula.proved());
  CHECK(b.formula.lo() > b.simplified.hi());
  REQUIRE(b.true_count.has_value());
  CHECK(*b.true_count == oracle_primes(BigRational(400000), BigRational(500000)).size());
  CHECK(b.formula.hi() <= BigRational(*b.true_count));
  REQUIRE(b.formula_below_count.has_value());
  CHECK(b.formula_below_count->proved());
  CHECK(b.to_report().passed());
}

TEST_CASE("count bound at the threshold and growth") {
  const CountBound b = count_lower_bound(6818, 512, nullptr);
  CHECK(b.simplified.hi() < BigRational(0));
  CHECK(b.simplified.lo() > rat(-74, 100));
  CHECK(b.simplified_in_claimed_range);
  CHECK_FALSE(b.true_count.has_value());

  const Enclosure at1 = eval(count_formula_expr(100000), 128);
  const Enclosure at4 = eval(count_formula_expr(400000), 128);
  CHECK(at4.lo() > at1.hi());
  CHECK(certify(count_simplified_expr(400000), Relation::greater, count_simplified_expr(100000)).proved());
  CHECK_THROWS_AS(count_lower_bound(2), UsageError);
}

TEST_CASE("threshold for a count") {
  const std::uint64_t l1 = threshold_for_count(1);
  CHECK(certify(count_simplified_expr(l1), Relation::greater_equal, Expr(BigRational(1))).proved());
  CHECK_FALSE(certify(count_simplified_expr(l1 - 1), Relation::greater_equal, Expr(BigRational(1))).proved());

  const std::uint64_t l100 = threshold_for_count(100);
  CHECK(certify(count_simplified_expr(l100), Relation::greater_equal, Expr(BigRational(100))).proved());
  const PrimeTable t(5 * l100);
  CHECK(t.count_in_range(4 * l100 + 1, 5 * l100) >= 100);

  std::uint64_t prev = 0;
  for (std::uint64_t m : {1ULL, 2ULL, 5ULL, 20ULL, 100ULL}) {
    const std::uint64_t l = threshold_for_count(m);
    CHECK(prev <= l);
    prev = l;
  }
  CHECK_THROWS_AS(threshold_for_count(0), UsageError);
}

TEST_CASE("general scan") {
  CHECK(scan_general(1, 2, 100).passed());
  const CheckReport r4 = scan_general(4, 3, 6817);
  CHECK(r4.passed());
  CHECK(r4.items.size() == 6815);
  CHECK(scan_general(5, 5, 10000).passed());
  CHECK_THROWS_AS(scan_general(0, 2, 10), UsageError);
  CHECK_THROWS_AS(scan_general(4, 10, 9), UsageError);

  // (4n, 5n) and [4n+1, 5n] agree for n >= 3
  const PrimeTable t(5000);
  for (std::uint64_t n = 3; n < 1000; ++n) CHECK(oracle_primes(BigRational(4 * n), BigRational(5 * n)).size() ==
                                                  t.count_in_range(4 * n + 1, 5 * n));
}
