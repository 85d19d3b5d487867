#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "primecert/binom.hpp"
#include "primecert/errors.hpp"

using namespace primecert;

namespace {

BigRational rat(long a, long b) { return BigRational(BigInt(a), BigInt(b)); }

// exponent of p in C(top, bottom) by factoring every factor of the three factorials
std::uint64_t brute_valuation(std::uint64_t p, std::uint64_t top, std::uint64_t bottom) {
  return oracle::factorial_exponent(p, top) - oracle::factorial_exponent(p, bottom) -
         oracle::factorial_exponent(p, top - bottom);
}

}  // namespace

TEST_CASE("valuation examples") {
  CHECK(valuation(3, 10, 8) == 2);
  CHECK(valuation(2, 10, 8) == 0);
  CHECK(valuation(251, 500, 400) == 0);
  CHECK(valuation(5, 15, 12) == 1);
  CHECK_THROWS_AS(valuation(4, 10, 8), UsageError);
  CHECK_THROWS_AS(valuation(3, 5, 8), UsageError);
}

TEST_CASE("Legendre, Kummer and brute force agree") {
  const auto primes = oracle::primes_upto(50);
  for (std::uint64_t p : primes) {
    for (std::uint64_t top = 0; top <= 400; top += 3) {
      for (std::uint64_t bottom = 0; bottom <= top; bottom += 7) {
        const unsigned legendre = valuation(p, top, bottom);
        REQUIRE(legendre == valuation_kummer(p, top, bottom));
        REQUIRE(legendre == brute_valuation(p, top, bottom));
      }
    }
  }
  for (std::uint64_t p : {2ULL, 3ULL, 97ULL})
    for (std::uint64_t m : {0ULL, 1ULL, 100ULL, 1000ULL}) CHECK(factorial_valuation(p, m) == oracle::factorial_exponent(p, m));
}

TEST_CASE("valuation map stores exact exponents") {
  for (std::uint64_t n : {5ULL, 17ULL, 60ULL}) {
    const Decomposition d = decompose(n);
    const BigInt c = oracle::binomial(5 * n, 4 * n);
    for (const auto* map : {&d.t1, &d.t2}) {
      for (const auto& [p, e] : map->entries) {
        BigInt pe, pe1;
        mpz_ui_pow_ui(pe.get_mpz_t(), p, e);
        mpz_ui_pow_ui(pe1.get_mpz_t(), p, e + 1);
        CHECK(c % pe == 0);
        CHECK(c % pe1 != 0);
        CHECK(map->exponent(p) == e);
      }
    }
  }
}

TEST_CASE("decompose examples") {
  const Decomposition d3 = decompose(3);
  CHECK(d3.t1.entries.empty());
  CHECK(d3.t2.entries == std::vector<std::pair<std::uint64_t, unsigned>>{{5, 1}, {7, 1}});
  CHECK(d3.t3 == std::vector<std::uint64_t>{13});

  const Decomposition d1 = decompose(1);
  CHECK(d1.t1_product() * d1.t2_product() * d1.t3_product() == 5);

  const Decomposition d100 = decompose(100);
  CHECK(d100.t1_product() * d100.t2_product() * d100.t3_product() == oracle::binomial(500, 400));
  CHECK_THROWS_AS(decompose(0), UsageError);
}

TEST_CASE("decomposition identity and boundaries for n <= 300") {
  const PrimeTable table(1500);
  for (std::uint64_t n = 1; n <= 300; ++n) {
    const Decomposition d = decompose(n, table);
    REQUIRE(d.t1_product() * d.t2_product() * d.t3_product() == binomial(5 * n, 4 * n));
    if (n >= 3) CHECK(d.t2.max_exponent() <= 1);
    for (const auto& [p, e] : d.t1.entries) CHECK(p * p <= 5 * n);
    for (const auto& [p, e] : d.t2.entries) {
      CHECK(p * p > 5 * n);
      CHECK(p <= 4 * n);
    }
    for (std::uint64_t p : d.t3) {
      CHECK(p >= 4 * n + 1);
      CHECK(p <= 5 * n);
      CHECK(oracle::is_prime(p));
    }
  }
  CHECK(binomial(30, 24) == oracle::binomial(30, 24));
}

TEST_CASE("bracket examples") {
  const BracketValue a = bracket(BigRational(5), BigRational(4));
  CHECK(a.value == BigRational(5));
  CHECK(a.delta == 1);

  const BracketValue b = bracket(rat(5, 2), rat(3, 2));
  CHECK(b.value == BigRational(2));
  CHECK(b.delta == 1);

  const BracketValue c = bracket(rat(7, 2), rat(7, 4));
  CHECK(c.value == BigRational(6));
  CHECK(c.delta == 2);
  CHECK(c.floor_binomial == 3);

  CHECK_THROWS_AS(bracket(BigRational(3), BigRational(3)), UsageError);
  CHECK_THROWS_AS(bracket(BigRational(3), rat(1, 2)), UsageError);
}

TEST_CASE("bracket consistency for integer arguments") {
  for (long s = 2; s <= 40; ++s) {
    for (long r = 1; r < s; ++r) {
      const BracketValue b = bracket(BigRational(s), BigRational(r));
      CHECK(b.value == BigRational(oracle::binomial(s, r)));
      CHECK(b.delta == 1);
    }
  }
}

TEST_CASE("delta bound on random rational pairs") {
  std::mt19937_64 rng(23);
  int checked = 0;
  while (checked < 10000) {
    std::uniform_int_distribution<long> num(1, 400), den(1, 12);
    const BigRational s = rat(num(rng), den(rng)), r = rat(num(rng), den(rng));
    if (!(s > r && r >= BigRational(1))) continue;
    const BracketValue b = bracket(s, r);
    REQUIRE(b.delta >= 1);
    REQUIRE(BigRational(b.delta) <= s);
    REQUIRE(b.value == BigRational(BigInt(b.delta * b.floor_binomial)));
    // delta = 1 when frac(s) >= frac(r), else [s - r] + 1
    const BigInt expected = s.frac() >= r.frac() ? BigInt(1) : BigInt((s - r).floor() + 1);
    REQUIRE(b.delta == expected);
    // the value is the integer product over (s-r, s] divided by [r]!
    BigInt num_product = 1;
    for (BigInt k = b.numerator_from; k <= b.numerator_to; ++k) num_product *= k;
    REQUIRE(b.value == BigRational(num_product, oracle::factorial(r.floor().get_ui())));
    ++checked;
  }
}

TEST_CASE("A and B brackets") {
  const BracketValue a = bracket_a(100);
  CHECK(a.value == BigRational(oracle::binomial(250, 200)));
  const BracketValue b = bracket_b(100);
  CHECK(b.s == rat(500, 3));
  CHECK(b.r == rat(400, 3));
  const BracketValue a3 = bracket_a(3);
  CHECK(a3.s == rat(15, 2));
  CHECK(a3.r == BigRational(6));
}

TEST_CASE("case analysis examples") {
  const CaseReport r100 = case_check(100);
  CHECK(r100.passed());
  CHECK(r100.cases.size() == case_intervals().size());

  const CaseReport r3 = case_check(3);
  CHECK(r3.passed());
  CHECK(r3.vacuous_cases() > 0);

  CHECK(case_check(6818).passed());
  CHECK_THROWS_AS(case_check(2), UsageError);
}

TEST_CASE("case intervals tile (n/4, 4n] and the tail") {
  const auto& cases = case_intervals();
  REQUIRE(cases.size() == 19);
  for (std::size_t i = 0; i + 1 < cases.size() - 1; ++i) {
    // consecutive intervals share endpoints: hi of one is lo of the next
    CHECK(cases[i].hi_num * cases[i + 1].lo_den == cases[i + 1].lo_num * cases[i].hi_den);
  }
  CHECK(cases.front().lo_num * 4 == cases.front().lo_den);
  CHECK(cases[cases.size() - 2].hi_num == 4 * cases[cases.size() - 2].hi_den);
  CHECK(cases.back().claim == CaseClaim::primorial_tail);

  // every prime in (sqrt(5n), 4n] falls in exactly one case
  for (std::uint64_t n : {50ULL, 333ULL, 1001ULL}) {
    for (std::uint64_t p : oracle::primes_upto(4 * n)) {
      if (p * p <= 5 * n) continue;
      int hits = 0;
      for (const auto& c : cases) hits += c.contains(p, n);
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("T2 bound examples") {
  CHECK(t2_bound_check(100).proved());
  CHECK(t2_bound_check(3).proved());
  CHECK(t2_bound_check(6818).proved());
  CHECK(decompose(3).t2_product() == 35);
}
