#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "primecert/certify.hpp"
#include "primecert/report.hpp"
#include "primecert/sieve.hpp"

namespace primecert {

/// Primes strictly inside the open interval (lo, hi).
struct IntervalWitness {
  std::uint64_t n = 0;
  BigRational lo;
  BigRational hi;
  std::vector<std::uint64_t> primes_found;  // ascending; may be truncated, see count
  std::uint64_t count = 0;                  // number of primes in (lo, hi)
  std::uint64_t required = 1;

  bool passed() const { return count >= required; }
  std::string interval_str() const;
  std::string witness_str(std::size_t max_shown = 8) const;
};

/// At most `keep` primes are stored in primes_found; count is always exact.
IntervalWitness interval_witness(const PrimeTable& table, std::uint64_t n, const BigRational& lo,
                                 const BigRational& hi, std::uint64_t required, std::size_t keep = SIZE_MAX);

/// A primary witness plus sub-intervals that must each hold a prime.
struct PlacementWitness {
  IntervalWitness overall;
  std::vector<IntervalWitness> placements;
  std::optional<bool> closure_ok;  // theorem 4.3: f^7(n) <= 5n

  bool passed() const;
};

/// Every prime > 4n up to 5n: (4n, 5n), required 1, for each n in [lo, hi].
std::vector<IntervalWitness> base_case_witnesses(std::uint64_t lo, std::uint64_t hi, const PrimeTable& table,
                                                 unsigned jobs = 1);
/// Requires 3 <= lo <= hi.
CheckReport verify_base_cases(std::uint64_t lo = 3, std::uint64_t hi = 6817, unsigned jobs = 1);

/// The analytic chain behind T3 > 1 at one n >= 6818, one report item per
/// link. Below 6818 the links are still evaluated and a failing
/// precondition item is added.
CheckReport verify_tail_certificate(std::uint64_t n, long precision = kDefaultMaxPrecision);

/// Prime in (n, 5(n+3)/4); n >= 3. Table must reach 5(n+3)/4.
IntervalWitness theorem41_check(std::uint64_t n, const PrimeTable& table, std::size_t keep = SIZE_MAX);
/// At least four primes in (n, 5n); from n >= 15 also one in each of
/// (n, (5n+15)/4), (2n, (10n+15)/4), (3n, (15n+15)/4), (4n, 5n).
PlacementWitness theorem42_check(std::uint64_t n, const PrimeTable& table, std::size_t keep = SIZE_MAX);
/// At least seven primes in (n, 5n); from n >= 245 also f^7(n) <= 5n and a
/// prime in each (f^(m-1)(n), f^m(n)), m = 1..7. n >= 6.
PlacementWitness theorem43_check(std::uint64_t n, const PrimeTable& table, std::size_t keep = SIZE_MAX);

/// f^m(n) for f(x) = (5x+15)/4, both by recursion and by the closed form
/// (5^m n + 3 sum_{k<m} 5^(m-k) 4^k) / 4^m, which must agree exactly.
struct IterationState {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  BigRational value;
};
IterationState f_iterate(std::uint64_t n, std::uint64_t m);
BigRational f_closed_form(const BigRational& n, std::uint64_t m);

/// 5 * 4^m - 5^m
BigInt theorem43_denominator(std::uint64_t m);
/// 3 sum_{k<m} 5^(m-k) 4^k / (5 * 4^m - 5^m); throws DomainError when the
/// denominator is not positive.
BigRational theorem43_threshold(std::uint64_t m = 7);
/// The threshold 926115/3795 < 245 and the sign change of 5 * 4^m - 5^m
/// between m = 7 and m = 8, as report items.
CheckReport theorem43_constants();

CheckReport sweep_theorem41(std::uint64_t lo, std::uint64_t hi, unsigned jobs = 1);
CheckReport sweep_theorem42(std::uint64_t lo, std::uint64_t hi, unsigned jobs = 1);
CheckReport sweep_theorem43(std::uint64_t lo, std::uint64_t hi, unsigned jobs = 1);

/// log_{5n} of the lower bound for the product of primes in (4n, 5n).
Expr count_formula_expr(std::uint64_t n);
/// (n/log n)(0.035214 - 2.8063995/sqrt n) - 168033/100000
Expr count_simplified_expr(std::uint64_t n);

struct CountBound {
  std::uint64_t n = 0;
  Enclosure formula;
  Enclosure simplified;
  Certificate simplified_below_formula;
  bool simplified_in_claimed_range = false;  // n >= 6818
  std::optional<std::uint64_t> true_count;   // pi(5n) - pi(4n)
  std::optional<Certificate> formula_below_count;
  std::optional<std::uint64_t> usable_count;  // max(1, ceil(formula)) when (4n, 5n) holds a prime

  CheckReport to_report() const;
};

/// n >= 3. With a table reaching 5n the sieve comparisons are filled in.
CountBound count_lower_bound(std::uint64_t n, long precision = kDefaultMaxPrecision,
                             const PrimeTable* table = nullptr);

/// Smallest L (found by doubling then bisection) with the simplified bound
/// certified >= m at L, re-certified at 2L, 4L, ..., 1024L. Throws
/// std::runtime_error if a comparison stays undecided.
std::uint64_t threshold_for_count(std::uint64_t m, long precision = kDefaultMaxPrecision);

/// A prime in (kn, (k+1)n) for every n in [n_lo, n_hi]; k >= 1, 1 <= n_lo <= n_hi.
CheckReport scan_general(std::uint64_t k, std::uint64_t n_lo, std::uint64_t n_hi, unsigned jobs = 1);

}  // namespace primecert
