#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "primecert/certify.hpp"
#include "primecert/rational.hpp"
#include "primecert/sieve.hpp"

namespace primecert {

/// Exponent of p in C(top, bottom) by Legendre's formula,
/// sum_i [top/p^i] - [bottom/p^i] - [(top-bottom)/p^i].
/// Throws UsageError if p is not prime or bottom > top.
unsigned valuation(std::uint64_t p, std::uint64_t top, std::uint64_t bottom);

/// Kummer: number of carries when adding bottom and top-bottom in base p.
unsigned valuation_kummer(std::uint64_t p, std::uint64_t top, std::uint64_t bottom);

/// Exponent of p in m! (Legendre).
std::uint64_t factorial_valuation(std::uint64_t p, std::uint64_t m);

/// Prime -> exponent, ascending by prime, zero exponents omitted.
struct ValuationMap {
  std::uint64_t n = 0;
  std::vector<std::pair<std::uint64_t, unsigned>> entries;

  unsigned exponent(std::uint64_t p) const;
  BigInt product() const;
  unsigned max_exponent() const;
};

/// C(5n, 4n) = T1 * T2 * T3 split by prime size.
struct Decomposition {
  std::uint64_t n = 0;
  ValuationMap t1;                  // p^2 <= 5n
  ValuationMap t2;                  // sqrt(5n) < p <= 4n
  std::vector<std::uint64_t> t3;    // 4n+1 <= p <= 5n, each to the first power

  BigInt t1_product() const { return t1.product(); }
  BigInt t2_product() const { return t2.product(); }
  BigInt t3_product() const;
};

/// p belongs to T1 iff p * p <= 5n; the only place this boundary is decided.
bool in_t1(std::uint64_t p, std::uint64_t n);

/// Requires n >= 1. The table must reach 5n.
Decomposition decompose(std::uint64_t n, const PrimeTable& table);
Decomposition decompose(std::uint64_t n);

BigInt binomial(std::uint64_t top, std::uint64_t bottom);

/// {s brace r} = prod of integers in (s-r, s] / prod of integers in (0, r]
/// = delta * C([s], [r]).
struct BracketValue {
  BigRational s;
  BigRational r;
  BigRational value;
  BigInt delta;
  BigInt floor_binomial;
  // the integer range (s-r, s] whose product is the numerator
  BigInt numerator_from;  // first integer in the range
  BigInt numerator_to;    // last integer in the range
};

/// Requires s > r >= 1; throws UsageError otherwise.
BracketValue bracket(const BigRational& s, const BigRational& r);

/// A = {5n/2 brace 2n}, B = {5n/3 brace 4n/3}.
BracketValue bracket_a(std::uint64_t n);
BracketValue bracket_b(std::uint64_t n);

/// Exponent of p in a bracket's value (which is always an integer).
std::uint64_t bracket_valuation(std::uint64_t p, const BracketValue& b);

/// What the case analysis claims about primes in one sub-interval of
/// (sqrt(5n), 4n].
enum class CaseClaim { beta_zero, divides_a, divides_b, primorial_tail };

std::string_view to_string(CaseClaim c);

/// Primes p with lo_num*n/lo_den < p <= hi_num*n/hi_den (the primorial tail
/// instead uses sqrt(5n) < p <= n/4).
struct CaseInterval {
  std::uint64_t lo_num, lo_den, hi_num, hi_den;
  CaseClaim claim;

  std::string label() const;
  bool contains(std::uint64_t p, std::uint64_t n) const;
};

/// The eighteen sub-intervals of (n/4, 4n] in ascending order, followed by
/// the tail (sqrt(5n), n/4].
const std::vector<CaseInterval>& case_intervals();

struct CaseOutcome {
  CaseInterval interval;
  std::size_t primes_checked = 0;  // 0 means the case is vacuous for this n
  std::vector<std::string> violations;
};

struct CaseReport {
  std::uint64_t n = 0;
  std::vector<CaseOutcome> cases;
  // Primes in (sqrt(5n), 4n] with exponent >= 2 in C(5n, 4n).
  std::vector<std::uint64_t> t2_exponent_violations;

  bool passed() const;
  std::size_t vacuous_cases() const;
};

/// Brute-force check of every case of the T2 analysis at this n (n >= 3).
/// Violations are recorded, never thrown.
CaseReport case_check(std::uint64_t n, const PrimeTable& table);
CaseReport case_check(std::uint64_t n);

/// Certifies exact T2 < 2^(n/2) * A * B with A, B computed exactly.
Certificate t2_bound_check(std::uint64_t n, const PrimeTable& table, long precision = kDefaultMaxPrecision);
Certificate t2_bound_check(std::uint64_t n, long precision = kDefaultMaxPrecision);

}  // namespace primecert
