#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "primecert/enclosure.hpp"

namespace primecert {

/// Immutable odd-only prime bitmap over [2, limit] with sampled cumulative
/// counts, so pi(x) for x <= limit is a table lookup plus a short popcount.
///
/// Built by a segmented sieve: only the base primes up to sqrt(limit) and one
/// segment of scratch are live besides the bitmap itself. Safe for
/// concurrent reads.
class PrimeTable {
 public:
  /// Odd entries per sieve segment (2^18 bits = 32 KiB).
  static constexpr std::size_t kDefaultSegment = std::size_t{1} << 18;

  /// `jobs` > 1 sieves disjoint segments on worker threads; the resulting
  /// table does not depend on the scheduling.
  explicit PrimeTable(std::uint64_t limit, unsigned jobs = 1,
                      std::size_t segment = kDefaultSegment);

  std::uint64_t limit() const { return limit_; }

  /// Throws UsageError for m > limit().
  bool is_prime(std::uint64_t m) const;
  /// pi(x); throws UsageError for x > limit().
  std::uint64_t prime_count(std::uint64_t x) const;
  /// Number of primes in [lo, hi].
  std::uint64_t count_in_range(std::uint64_t lo, std::uint64_t hi) const;
  /// Primes in [lo, hi], ascending; at most `max_count` of them.
  std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi,
                                             std::size_t max_count = SIZE_MAX) const;
  /// Smallest prime > after, if one exists within the table.
  std::optional<std::uint64_t> next_prime(std::uint64_t after) const;
  /// Number of primes in the table.
  std::uint64_t size() const { return prime_count(limit_); }

  template <class F>
  void for_each_prime(std::uint64_t lo, std::uint64_t hi, F&& f) const {
    for (auto p = first_at_least(lo); p && *p <= hi; p = next_prime(*p)) f(*p);
  }

 private:
  std::optional<std::uint64_t> first_at_least(std::uint64_t lo) const;
  void check_range(std::uint64_t x) const;
  // number of odd primes with odd-index <= idx (index i <-> 2i+1)
  std::uint64_t odd_count_through(std::uint64_t idx) const;

  std::uint64_t limit_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint64_t> block_counts_;
};

/// Throws UsageError when limit < 2.
PrimeTable build_table(std::uint64_t limit, unsigned jobs = 1);

// Convenience wrappers that size a fresh table for the query.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);
std::uint64_t prime_count(std::uint64_t x);

/// theta(x) = sum_{p <= x} log p, enclosed.
Enclosure chebyshev_theta(const PrimeTable& table, std::uint64_t x, long precision);
/// psi(x) = sum_{p^k <= x} log p, enclosed.
Enclosure chebyshev_psi(const PrimeTable& table, std::uint64_t x, long precision);
Enclosure chebyshev_theta(std::uint64_t x, long precision);
Enclosure chebyshev_psi(std::uint64_t x, long precision);

/// Deterministic trial division; used as an independent primality check.
bool is_prime_trial(std::uint64_t m);
std::uint64_t isqrt_u64(std::uint64_t n);

}  // namespace primecert
